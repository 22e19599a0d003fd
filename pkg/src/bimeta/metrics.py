"""Caterpillar/butterfly counting and metamorphosis coefficients.

A *caterpillar* is a three-edge path; it is centered at its middle edge, and
the number of caterpillars centered at edge (i, j) is
``(du[i] - 1) * (dv[j] - 1)``.  A *butterfly* is a 4-cycle; each butterfly
contains four caterpillars, so the global metamorphosis coefficient is
``4 * butterflies / caterpillars`` -- the fraction of caterpillars that close.

Counts are exact integers; ratios are formed only at the final division.
All operations are pure functions of an immutable graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernel
from .graph import BipartiteGraph


@dataclass
class GraphSummary:
    """One summary row: sizes, edges, caterpillars, butterflies, metamorphosis."""

    n_u: int
    n_v: int
    m: int
    caterpillars: int
    butterflies: int
    metamorphosis: float


@dataclass
class BinnedSeries:
    """Log-binned series: (bin lower bound 2**k, mean over [2**k, 2**(k+1)))."""

    bins: list[tuple[int, float]] = field(default_factory=list)

    def __iter__(self):
        return iter(self.bins)

    def __len__(self):
        return len(self.bins)


@dataclass
class MetamorphosisProfile:
    """Raw counts plus edge/node/degree-level metamorphosis coefficients."""

    butterflies_total: int
    caterpillars_total: int
    global_c: float
    edge_c: dict
    node_c_u: np.ndarray
    node_c_v: np.ndarray
    degree_c_u: dict
    degree_c_v: dict


class OracleBudgetError(ValueError):
    """Raised when a graph is too large for the brute-force oracle."""


def count_caterpillars(g: BipartiteGraph) -> int:
    """Sum over edges of (du[i]-1)(dv[j]-1); O(m)."""
    if g.m == 0:
        return 0
    deg = g.degrees()
    du1 = deg.du - 1
    dv1 = deg.dv - 1
    # per-edge products and the total both stay far inside int64 at the
    # graph sizes int64 indices allow; guard with a float estimate anyway
    est = float(np.repeat(du1, deg.du).astype(float) @ dv1[g.u_indices].astype(float))
    terms = np.repeat(du1, deg.du) * dv1[g.u_indices]
    if est > 2**62:
        return int(sum(int(t) for t in terms))
    return int(terms.sum())


def caterpillars_per_edge(g: BipartiteGraph) -> np.ndarray:
    """(du[i]-1)(dv[j]-1) per edge, aligned with the u-side CSR order."""
    deg = g.degrees()
    return np.repeat(deg.du - 1, deg.du) * (deg.dv - 1)[g.u_indices]


def _wedge_side(g: BipartiteGraph) -> str:
    """Pick the wedge-center partition minimizing sum d(d-1)."""
    deg = g.degrees()
    wu = int((deg.du * (deg.du - 1)).sum())
    wv = int((deg.dv * (deg.dv - 1)).sum())
    return "u" if wu <= wv else "v"


def count_butterflies(g: BipartiteGraph) -> int:
    """Exact number of distinct 4-cycles.

    Iterates wedges centered on the cheaper partition, accumulating
    common-neighbor counts k per endpoint pair and summing C(k, 2).
    The result is independent of the side chosen.
    """
    if g.m == 0:
        return 0
    if _wedge_side(g) == "v":
        # centers on v side: sources are u nodes
        return kernel.butterfly_total(
            g.u_indptr, g.u_indices, g.v_indptr, g.v_indices, g.n_u
        )
    return kernel.butterfly_total(
        g.v_indptr, g.v_indices, g.u_indptr, g.u_indices, g.n_v
    )


def butterflies_per_edge_array(g: BipartiteGraph) -> np.ndarray:
    """Butterfly count per edge, aligned with the u-side CSR order."""
    if g.m == 0:
        return np.zeros(0, dtype=np.int64)
    if _wedge_side(g) == "v":
        return kernel.butterflies_per_edge(
            g.u_indptr, g.u_indices, g.v_indptr, g.v_indices, g.n_u
        )
    per_v = kernel.butterflies_per_edge(
        g.v_indptr, g.v_indices, g.u_indptr, g.u_indices, g.n_v
    )
    # remap from v-CSR edge order to u-CSR edge order
    vi = np.repeat(np.arange(g.n_v), np.diff(g.v_indptr))
    order = np.argsort(g.v_indices * g.n_v + vi, kind="stable")
    return per_v[order]


def butterflies_per_edge(g: BipartiteGraph) -> dict:
    """Map (i, j) -> number of butterflies containing that edge."""
    vals = butterflies_per_edge_array(g)
    edges = g.edge_list()
    return {(int(i), int(j)): int(b) for (i, j), b in zip(edges, vals)}


def metamorphosis_edge(g: BipartiteGraph) -> dict:
    """Per-edge coefficient: butterflies / caterpillars centered there, 0 if none."""
    b = butterflies_per_edge_array(g)
    c = caterpillars_per_edge(g)
    vals = np.divide(b, c, out=np.zeros(len(b)), where=c > 0)
    return {
        (int(i), int(j)): float(x) for (i, j), x in zip(g.edge_list(), vals)
    }


def _edge_coeff_array(g: BipartiteGraph) -> np.ndarray:
    b = butterflies_per_edge_array(g)
    c = caterpillars_per_edge(g)
    return np.divide(b, c, out=np.zeros(len(b)), where=c > 0)


def metamorphosis_node(g: BipartiteGraph):
    """Per-node coefficients: mean edge coefficient over incident edges.

    Degree-0 nodes get 0.
    """
    ec = _edge_coeff_array(g)
    deg = g.degrees()
    cu_sum = np.zeros(g.n_u)
    np.add.at(cu_sum, np.repeat(np.arange(g.n_u), deg.du), ec)
    cv_sum = np.zeros(g.n_v)
    np.add.at(cv_sum, g.u_indices, ec)
    cu = np.divide(cu_sum, deg.du, out=np.zeros(g.n_u), where=deg.du > 0)
    cv = np.divide(cv_sum, deg.dv, out=np.zeros(g.n_v), where=deg.dv > 0)
    return cu, cv


def metamorphosis_per_degree(g: BipartiteGraph):
    """Mean node coefficient per degree class, for each side.

    Only degrees with a nonempty class appear as keys; absent degrees are 0
    by convention (log binning fills them in).
    """
    cu, cv = metamorphosis_node(g)
    deg = g.degrees()
    return _by_degree(cu, deg.du), _by_degree(cv, deg.dv)


def _by_degree(node_c: np.ndarray, degs: np.ndarray) -> dict:
    out = {}
    if len(degs) == 0:
        return out
    sums = np.bincount(degs, weights=node_c)
    counts = np.bincount(degs)
    for d in np.nonzero(counts)[0]:
        if d == 0:
            continue  # no edges, no coefficient class
        out[int(d)] = float(sums[d] / counts[d])
    return out


def global_metamorphosis(g: BipartiteGraph) -> float:
    """4 * butterflies / caterpillars; 0 when there are no caterpillars."""
    cats = count_caterpillars(g)
    if cats == 0:
        return 0.0
    return 4 * count_butterflies(g) / cats


def degree_distribution(g: BipartiteGraph, side: str) -> dict:
    """Map degree -> node count for one partition ("u" or "v").

    Degree-0 nodes are included under key 0; counts sum to the partition size.
    """
    if side not in ("u", "v"):
        raise ValueError(f"side must be 'u' or 'v', got {side!r}")
    degs = g.degrees().du if side == "u" else g.degrees().dv
    counts = np.bincount(degs) if len(degs) else np.zeros(0, dtype=np.int64)
    return {int(d): int(counts[d]) for d in np.nonzero(counts)[0]} if len(degs) else {}


def log_bin(series: dict) -> BinnedSeries:
    """Bin an integer-keyed series into [2**k, 2**(k+1)) bins.

    Each bin reports the arithmetic mean over ALL integers in its range,
    treating missing keys as 0, so bin means can drop below any stored value.
    Bins run from 1 up to the bin containing the largest key.
    """
    if not series:
        return BinnedSeries([])
    if min(series) < 1:
        raise ValueError("log_bin requires keys >= 1")
    kmax = int(math.log2(max(series)))
    bins = []
    for k in range(kmax + 1):
        lo, hi = 2**k, 2 ** (k + 1)
        total = sum(series.get(x, 0) for x in range(lo, hi))
        bins.append((lo, total / (hi - lo)))
    return BinnedSeries(bins)


def butterfly_oracle(g: BipartiteGraph, max_quadruples: int = 10**6):
    """Brute-force butterfly count by direct quadruple enumeration.

    For every pair i < i' and every candidate pair j < j', the four edges are
    tested directly against the adjacency.  Independent of the wedge-counting
    path; intended as a verification oracle for small graphs.

    Returns ``(total, {edge: count})``.  Refuses graphs whose quadruple count
    C(n_u,2) * C(n_v,2) exceeds ``max_quadruples``.
    """
    quads = math.comb(g.n_u, 2) * math.comb(g.n_v, 2)
    if quads > max_quadruples:
        raise OracleBudgetError(
            f"{quads} quadruples exceeds the oracle budget of {max_quadruples}"
        )
    masks = []
    for i in range(g.n_u):
        m = 0
        for j in g.neighbors_u(i):
            m |= 1 << int(j)
        masks.append(m)
    total = 0
    per_edge: dict = {}
    for i, j in g.edge_list():
        per_edge[(int(i), int(j))] = 0
    for i in range(g.n_u):
        nbrs = [int(j) for j in g.neighbors_u(i)]
        for i2 in range(i + 1, g.n_u):
            m2 = masks[i2]
            for a in range(len(nbrs)):
                j = nbrs[a]
                if not (m2 >> j) & 1:
                    continue
                for b in range(a + 1, len(nbrs)):
                    j2 = nbrs[b]
                    if (m2 >> j2) & 1:
                        total += 1
                        per_edge[(i, j)] += 1
                        per_edge[(i, j2)] += 1
                        per_edge[(i2, j)] += 1
                        per_edge[(i2, j2)] += 1
    return total, per_edge


def compute_profile(g: BipartiteGraph) -> MetamorphosisProfile:
    """All metamorphosis statistics for a graph in one pass."""
    ec = _edge_coeff_array(g)
    edges = g.edge_list()
    edge_c = {(int(i), int(j)): float(x) for (i, j), x in zip(edges, ec)}
    deg = g.degrees()
    cu_sum = np.zeros(g.n_u)
    np.add.at(cu_sum, edges[:, 0], ec)
    cv_sum = np.zeros(g.n_v)
    np.add.at(cv_sum, edges[:, 1], ec)
    cu = np.divide(cu_sum, deg.du, out=np.zeros(g.n_u), where=deg.du > 0)
    cv = np.divide(cv_sum, deg.dv, out=np.zeros(g.n_v), where=deg.dv > 0)
    return MetamorphosisProfile(
        butterflies_total=count_butterflies(g),
        caterpillars_total=count_caterpillars(g),
        global_c=global_metamorphosis(g),
        edge_c=edge_c,
        node_c_u=cu,
        node_c_v=cv,
        degree_c_u=_by_degree(cu, deg.du),
        degree_c_v=_by_degree(cv, deg.dv),
    )


def summarize(g: BipartiteGraph) -> GraphSummary:
    """Table-style summary row for a graph."""
    cats = count_caterpillars(g)
    buts = count_butterflies(g)
    meta = 4 * buts / cats if cats > 0 else 0.0
    return GraphSummary(g.n_u, g.n_v, g.m, cats, buts, meta)
