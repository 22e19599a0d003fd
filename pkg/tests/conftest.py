import os
from pathlib import Path

import numpy as np
import pytest

from bimeta import BipartiteGraph

# Real datasets are not bundled (see README for download instructions).
# Tests needing them look in $BIMETA_DATA, then ./data.
DATA_DIRS = [
    Path(p) for p in ([os.environ["BIMETA_DATA"]] if "BIMETA_DATA" in os.environ else [])
] + [Path(__file__).resolve().parent.parent / "data"]

DATASET_FILES = {
    "condmat": ["condmat.txt", "opsahl-collaboration.txt"],
    "imdb": ["imdb.txt", "actor-movie.txt"],
    "flickr": ["flickr.txt", "flickr-membership.txt"],
}


def dataset_path(name: str):
    for d in DATA_DIRS:
        for fname in DATASET_FILES[name]:
            p = d / fname
            if p.exists():
                return p
    return None


def require_dataset(name: str):
    p = dataset_path(name)
    if p is None:
        pytest.skip(
            f"{name} dataset not found (set BIMETA_DATA or place it under "
            f"./data; see README for download instructions)"
        )
    return p


@pytest.fixture
def condmat_path():
    return require_dataset("condmat")


@pytest.fixture
def imdb_path():
    return require_dataset("imdb")


def random_bipartite(rng, n_u=None, n_v=None, p=None, max_n=30):
    """Seeded random bipartite graph for oracle comparisons."""
    n_u = n_u if n_u is not None else int(rng.integers(2, max_n + 1))
    n_v = n_v if n_v is not None else int(rng.integers(2, max_n + 1))
    p = p if p is not None else float(rng.uniform(0.05, 0.5))
    mask = rng.random((n_u, n_v)) < p
    g, _ = BipartiteGraph.from_edge_list(np.argwhere(mask), n_u, n_v)
    return g


def complete_bipartite(a: int, b: int) -> BipartiteGraph:
    pairs = [(i, j) for i in range(a) for j in range(b)]
    g, _ = BipartiteGraph.from_edge_list(pairs, a, b)
    return g
