"""Acceptance suite: one test per criterion, printed as a pass/fail line.

Criteria that need the real public datasets (CondMat, IMDB, Flickr) skip
with instructions when the files are absent; everything else is
self-contained.  Run with ``pytest tests/test_acceptance.py -v``.
"""

import itertools
import math
import time
from contextlib import contextmanager

import numpy as np
import pytest

import bimeta as bm
from bimeta import io, metrics
from bimeta.cli import main
from bimeta.generators import plan_affinity_blocks

from conftest import complete_bipartite, random_bipartite, require_dataset


@contextmanager
def criterion(label):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {label}: FAIL")
        raise
    print(f"ACCEPTANCE {label}: PASS")


def sig3(x) -> str:
    return f"{x:.2e}"


def load_dataset(name):
    path = require_dataset(name)
    pairs, n_u, n_v = io.read_edge_list(path)
    g, _ = bm.BipartiteGraph.from_edge_list(pairs, n_u, n_v)
    return g


@pytest.fixture(scope="module")
def condmat():
    return load_dataset("condmat")


def test_criterion_1_condmat_measurement(condmat):
    with criterion("1 CondMat measurement"):
        assert condmat.m == 58595
        start = time.perf_counter()
        cats = bm.count_caterpillars(condmat)
        buts = bm.count_butterflies(condmat)
        elapsed = time.perf_counter() - start
        assert sig3(cats) == "1.24e+06"
        assert sig3(buts) == "7.05e+04"
        assert sig3(4 * buts / cats) == "2.28e-01"
        assert elapsed < 5.0


def test_criterion_2_imdb_measurement():
    g = load_dataset("imdb")
    with criterion("2 IMDB measurement"):
        start = time.perf_counter()
        cats = bm.count_caterpillars(g)
        buts = bm.count_butterflies(g)
        elapsed = time.perf_counter() - start
        assert sig3(cats) == "8.56e+08"
        assert sig3(buts) == "3.50e+06"
        assert sig3(4 * buts / cats) == "1.64e-02"
        assert elapsed < 120.0


def test_criterion_3_cl_on_condmat(condmat):
    with criterion("3 CL on CondMat"):
        targets = condmat.degrees()
        buts, metas = [], []
        for t in range(20):
            res = bm.fast_bipartite_cl(targets, bm.GeneratorConfig(seed=100 + t))
            s = metrics.summarize(res.graph)
            buts.append(s.butterflies)
            metas.append(s.metamorphosis)
        assert 3.57e2 / 2 <= np.mean(buts) <= 3.57e2 * 2
        assert 6.43e-4 / 2 <= np.mean(metas) <= 6.43e-4 * 2


def test_criterion_4_bter_on_condmat(condmat):
    with criterion("4 BTER on CondMat"):
        targets = condmat.degrees()
        c_u, c_v = bm.metamorphosis_per_degree(condmat)
        buts, metas, edges = [], [], []
        for t in range(100):
            res = bm.bipartite_bter(targets, c_u, c_v, bm.GeneratorConfig(seed=t))
            s = metrics.summarize(res.graph)
            buts.append(s.butterflies)
            metas.append(s.metamorphosis)
            edges.append(s.m)
        assert min(buts) >= 0.9 * 1.01e5 and max(buts) <= 1.1 * 1.16e5
        assert min(metas) >= 0.9 * 1.73e-1 and max(metas) <= 1.1 * 1.99e-1
        assert abs(np.mean(edges) - 6.00e4) <= 0.02 * 6.00e4


def test_criterion_5_cl_degree_distribution_fidelity(condmat):
    with criterion("5 CL degree-distribution fidelity"):
        res = bm.fast_bipartite_cl(condmat.degrees(), bm.GeneratorConfig(seed=0))
        for side in ("u", "v"):
            orig = {d: n for d, n in bm.degree_distribution(condmat, side).items() if d >= 1}
            gen = {d: n for d, n in bm.degree_distribution(res.graph, side).items() if d >= 1}
            ob = dict(bm.log_bin(orig))
            gb = dict(bm.log_bin(gen))
            for lo, mean in ob.items():
                if mean >= 10:
                    rel = abs(gb.get(lo, 0.0) - mean) / mean
                    assert rel < 0.15, (side, lo, mean, gb.get(lo, 0.0))


def test_criterion_6_oracle_equivalence():
    with criterion("6 oracle equivalence (200 graphs)"):
        rng = np.random.default_rng(2024)
        start = time.perf_counter()
        for _ in range(200):
            g = random_bipartite(rng, max_n=30)
            total, per_edge = bm.butterfly_oracle(g)
            assert bm.count_butterflies(g) == total
            assert bm.butterflies_per_edge(g) == per_edge
        assert time.perf_counter() - start < 10.0


def test_criterion_7_combinatorial_identities():
    with criterion("7 combinatorial identities"):
        for a, b in itertools.product(range(2, 7), repeat=2):
            g = complete_bipartite(a, b)
            assert bm.count_butterflies(g) == math.comb(a, 2) * math.comb(b, 2)
            assert bm.count_caterpillars(g) == a * b * (a - 1) * (b - 1)
            assert bm.global_metamorphosis(g) == 1.0
        rng = np.random.default_rng(7)
        for _ in range(50):
            g = random_bipartite(rng, max_n=30)
            per_edge = metrics.butterflies_per_edge_array(g)
            assert int(per_edge.sum()) == 4 * bm.count_butterflies(g)
            assert int(metrics.caterpillars_per_edge(g).sum()) == bm.count_caterpillars(g)
            prof = bm.compute_profile(g)
            vals = (
                list(prof.edge_c.values())
                + prof.node_c_u.tolist()
                + prof.node_c_v.tolist()
                + list(prof.degree_c_u.values())
                + list(prof.degree_c_v.values())
                + [prof.global_c]
            )
            assert all(0.0 <= x <= 1.0 for x in vals)


def test_criterion_8_er_block_calibration():
    with criterion("8 ER-block calibration"):
        start = time.perf_counter()
        rng = np.random.default_rng(0)
        grid = [4, 8, 16]
        coeffs = [0.1, 0.3, 0.6]
        for d_u, d_v, c_u, c_v in itertools.product(grid, grid, coeffs, coeffs):
            plans, _ = plan_affinity_blocks(
                np.full(400, d_u), np.full(400, d_v), {d_u: c_u}, {d_v: c_v}
            )
            p = plans[0]
            total = 0
            for _ in range(500):
                mat = rng.random((p.n_hat_u, p.n_hat_v)) < p.rho
                total += _dense_butterflies(mat)
            mean_c = 4 * (total / 500) / (p.n_hat_u * d_u * (d_u - 1) * (d_v - 1))
            assert abs(mean_c - c_u) / c_u < 0.2, (d_u, d_v, c_u, c_v, mean_c)
        assert time.perf_counter() - start < 60.0


def _dense_butterflies(mat):
    a = mat.astype(np.int64)
    common = a @ a.T
    np.fill_diagonal(common, 0)
    return int((common * (common - 1) // 2).sum()) // 2


def test_criterion_9_generation_determinism(tmp_path, capsys):
    with criterion("9 generation determinism"):
        src = tmp_path / "g.txt"
        rng = np.random.default_rng(0)
        mask = rng.random((60, 60)) < 0.1
        src.write_text(
            "".join(f"{i + 1} {j + 1}\n" for i, j in np.argwhere(mask))
        )
        for mode in ("cl", "bter"):
            outs = []
            for d in ("r1", "r2"):
                rc = main([
                    f"generate-{mode}", str(src), "--seed", "11", "--trials", "2",
                    "--out-dir", str(tmp_path / f"{mode}_{d}"),
                ])
                assert rc == 0
                outs.append(sorted((tmp_path / f"{mode}_{d}").glob("*.txt")))
            capsys.readouterr()
            for f1, f2 in zip(*outs):
                assert f1.read_bytes() == f2.read_bytes()


def test_performance_flickr_measurement():
    g = load_dataset("flickr")
    with criterion("P Flickr measurement under 30 min"):
        start = time.perf_counter()
        bm.count_butterflies(g)
        bm.count_caterpillars(g)
        assert time.perf_counter() - start < 1800.0
