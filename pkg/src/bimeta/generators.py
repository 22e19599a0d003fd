"""Synthetic bipartite graph generators.

Two models, both fully deterministic under a seed:

* fast bipartite Chung-Lu: draws m endpoint pairs, each endpoint sampled
  proportional to its desired degree; duplicate draws are discarded, so the
  realized edge count can fall slightly below m.
* bipartite BTER: packs nodes (sorted by ascending degree) into dense
  bipartite Erdos-Renyi "affinity blocks" sized and wired so nodes attain
  target degreewise metamorphosis coefficients, then connects the remaining
  "excess" degree with a final Chung-Lu pass.

RNG discipline: one seeded generator stream, consumed in a fixed order
(block loop row-major, then CL endpoint draws, U side first).
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field

import numpy as np

from .graph import BipartiteGraph, DegreeTarget

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorConfig:
    """Seed (and optional trial count) for a generation run."""

    seed: int
    trials: int = 1


@dataclass
class AffinityBlockPlan:
    """One planned dense ER block.

    ``u_start``/``v_start`` are cursor positions in the degree-sorted node
    ordering; the block spans ``n_hat_u`` x ``n_hat_v`` nodes with
    cross-edge probability ``rho``.
    """

    u_start: int
    v_start: int
    n_hat_u: int
    n_hat_v: int
    rho: float
    d_hat_u: int
    d_hat_v: int
    c_hat_u: float
    c_hat_v: float


@dataclass
class ExcessDegrees:
    """Remaining per-node degree after the block phase; never negative."""

    eu: np.ndarray
    ev: np.ndarray


@dataclass
class GenerationResult:
    """Generated graph plus bookkeeping about the run.

    For BTER, ``u_order``/``v_order`` map the sorted labels used in the
    output graph back to input order: ``u_order[k]`` is the input index of
    the node labeled k in the graph.
    """

    graph: BipartiteGraph
    requested_edges: int
    realized_edges: int
    duplicates_discarded: int
    u_order: np.ndarray | None = None
    v_order: np.ndarray | None = None
    blocks: list = field(default_factory=list)
    rho_clamps: int = 0
    block_edges: int = 0
    excess_sum_u: int = 0
    excess_sum_v: int = 0


def sample_index(weights, r: float) -> int:
    """Index k with probability weights[k] / sum(weights), given one uniform draw."""
    w = np.asarray(weights, dtype=float)
    if w.size == 0 or w.min() < 0:
        raise ValueError("weights must be nonnegative and nonempty")
    total = w.sum()
    if total <= 0:
        raise ValueError("all weights are zero")
    cum = np.cumsum(w)
    return int(np.searchsorted(cum, r * total, side="right"))


class _CumulativeSampler:
    """Vectorized repeated sampling proportional to fixed nonnegative weights."""

    def __init__(self, weights):
        w = np.asarray(weights, dtype=float)
        if w.size == 0 or w.sum() <= 0:
            raise ValueError("all weights are zero")
        self.cum = np.cumsum(w)

    def sample(self, rng, size: int) -> np.ndarray:
        r = rng.random(size) * self.cum[-1]
        return np.searchsorted(self.cum, r, side="right")


def fast_bipartite_cl(targets: DegreeTarget, cfg: GeneratorConfig) -> GenerationResult:
    """Fast bipartite Chung-Lu: m endpoint-pair draws, duplicates discarded.

    Each endpoint is drawn independently, proportional to degree/m, so
    Pr((i,j) drawn in one step) = du[i]*dv[j]/m^2 and the expected number of
    times edge (i,j) is drawn over m steps is du[i]*dv[j]/m.
    """
    m = targets.m
    if m <= 0:
        raise ValueError("degree sums must be positive")
    _warn_degree_bounds(targets)
    rng = np.random.default_rng(cfg.seed)
    pairs = _cl_draws(targets.du, targets.dv, m, rng)
    g, dups = BipartiteGraph.from_edge_list(pairs, len(targets.du), len(targets.dv))
    return GenerationResult(
        graph=g,
        requested_edges=m,
        realized_edges=g.m,
        duplicates_discarded=dups,
    )


def _cl_draws(wu, wv, n_draws: int, rng) -> np.ndarray:
    """n_draws endpoint pairs; U endpoints drawn first, then V endpoints."""
    su = _CumulativeSampler(wu)
    sv = _CumulativeSampler(wv)
    out = np.empty((n_draws, 2), dtype=np.int64)
    out[:, 0] = su.sample(rng, n_draws)
    out[:, 1] = sv.sample(rng, n_draws)
    return out


def _warn_degree_bounds(targets: DegreeTarget):
    root = np.sqrt(targets.m)
    if (targets.du.size and targets.du.max() > root) or (
        targets.dv.size and targets.dv.max() > root
    ):
        warnings.warn(
            "a desired degree exceeds sqrt(m); edge probabilities are no "
            "longer exact but generation proceeds",
            stacklevel=3,
        )


def _profile_lookup(keys: np.ndarray, vals: np.ndarray, d: int) -> float:
    """Value at degree d, else at the nearest smaller degree present, else 0."""
    pos = np.searchsorted(keys, d, side="right") - 1
    if pos < 0:
        return 0.0
    return float(vals[pos])


def plan_affinity_blocks(du_sorted, dv_sorted, c_u_profile: dict, c_v_profile: dict):
    """Plan the affinity blocks for degree-sorted target sequences.

    Starting both cursors at the first node of degree > 1, each step reads
    the cursor degrees (d_hat_u, d_hat_v) and target coefficients, sizes the
    block so the smaller-coefficient side gets its ideal size and the other
    side stretches by the coefficient ratio, and derives the ER connectivity
    rho so block nodes hit their target coefficients in expectation.  Blocks
    that would run past either partition are skipped (their nodes stay pure
    excess), but cursors always advance, guaranteeing termination.

    Returns ``(plans, rho_clamps)`` where ``rho_clamps`` counts degenerate
    profile inputs whose rho had to be clamped into [0, 1].
    """
    du_sorted = np.asarray(du_sorted, dtype=np.int64)
    dv_sorted = np.asarray(dv_sorted, dtype=np.int64)
    for prof in (c_u_profile, c_v_profile):
        for d, c in prof.items():
            if c < 0:
                raise ValueError(f"negative coefficient {c} at degree {d}")
    ku = np.array(sorted(c_u_profile), dtype=np.int64)
    vu = np.array([c_u_profile[k] for k in ku])
    kv = np.array(sorted(c_v_profile), dtype=np.int64)
    vv = np.array([c_v_profile[k] for k in kv])

    n_u, n_v = len(du_sorted), len(dv_sorted)
    above = np.nonzero(du_sorted > 1)[0]
    i = int(above[0]) if len(above) else n_u
    above = np.nonzero(dv_sorted > 1)[0]
    j = int(above[0]) if len(above) else n_v

    plans: list[AffinityBlockPlan] = []
    clamps = 0
    while i < n_u and j < n_v:
        dhu = int(du_sorted[i])
        dhv = int(dv_sorted[j])
        chu = _profile_lookup(ku, vu, dhu)
        chv = _profile_lookup(kv, vv, dhv)
        if chu <= 0 or chv <= 0 or dhu <= 1 or dhv <= 1:
            # zero target clustering (or degenerate degree): CL is the right
            # limit, so no ER block; advance by the ideal sizes
            i += dhv
            j += dhu
            continue
        if chu / chv >= 1:
            nhu = dhv
            nhv = _round_half_away(chu / chv * dhu)
            pre = (dhu - 1) * chv * chv / (chu * dhu - chv)
        else:
            nhv = dhu
            nhu = _round_half_away(chv / chu * dhv)
            pre = (dhv - 1) * chu * chu / (chv * dhv - chu)
        if pre < 0:
            pre = 0.0
            clamps += 1
        rho = pre**0.25
        if rho > 1.0:
            rho = 1.0
            clamps += 1
        if i + nhu <= n_u and j + nhv <= n_v and rho > 0:
            plans.append(
                AffinityBlockPlan(
                    u_start=i,
                    v_start=j,
                    n_hat_u=nhu,
                    n_hat_v=nhv,
                    rho=rho,
                    d_hat_u=dhu,
                    d_hat_v=dhv,
                    c_hat_u=chu,
                    c_hat_v=chv,
                )
            )
        i += nhu
        j += nhv
    return plans, clamps


def _round_half_away(x: float) -> int:
    """round() per the block-size rule: half away from zero, floor of 1."""
    return max(1, int(np.floor(x + 0.5)))


def bipartite_bter(
    targets: DegreeTarget,
    c_u_profile: dict,
    c_v_profile: dict,
    cfg: GeneratorConfig,
) -> GenerationResult:
    """Bipartite BTER: affinity blocks plus a Chung-Lu pass on excess degree.

    Nodes are relabeled in ascending degree order for generation; the result
    carries the permutation back to input order.  Each planned block is
    realized as an independent bipartite ER subgraph, decrementing endpoint
    excess with a floor of 0.  Whatever degree remains is connected by fast
    bipartite CL on the excess sequences; because block realization can
    consume the two sides asymmetrically, the CL pass makes
    min(sum eu, sum ev) draws with each side weighted by its own excess.
    """
    m = targets.m
    if m <= 0:
        raise ValueError("degree sums must be positive")
    _warn_degree_bounds(targets)

    u_order = np.argsort(targets.du, kind="stable")
    v_order = np.argsort(targets.dv, kind="stable")
    du_s = targets.du[u_order]
    dv_s = targets.dv[v_order]
    plans, clamps = plan_affinity_blocks(du_s, dv_s, c_u_profile, c_v_profile)

    rng = np.random.default_rng(cfg.seed)
    eu = du_s.copy()
    ev = dv_s.copy()
    chunks = []
    block_edges = 0
    for p in plans:
        mat = rng.random((p.n_hat_u, p.n_hat_v)) < p.rho
        ii, jj = np.nonzero(mat)  # row-major, matching the draw order
        if len(ii):
            chunk = np.empty((len(ii), 2), dtype=np.int64)
            chunk[:, 0] = ii + p.u_start
            chunk[:, 1] = jj + p.v_start
            chunks.append(chunk)
            block_edges += len(ii)
            sl = slice(p.u_start, p.u_start + p.n_hat_u)
            eu[sl] = np.maximum(0, eu[sl] - mat.sum(axis=1))
            sl = slice(p.v_start, p.v_start + p.n_hat_v)
            ev[sl] = np.maximum(0, ev[sl] - mat.sum(axis=0))

    sum_eu = int(eu.sum())
    sum_ev = int(ev.sum())
    m_cl = min(sum_eu, sum_ev)
    if sum_eu != sum_ev:
        log.debug(
            "excess sums differ after block phase (%d vs %d); drawing %d CL edges",
            sum_eu,
            sum_ev,
            m_cl,
        )
    if m_cl > 0:
        chunks.append(_cl_draws(eu, ev, m_cl, rng))

    if chunks:
        pairs = np.concatenate(chunks)
    else:
        pairs = np.empty((0, 2), dtype=np.int64)
    g, dups = BipartiteGraph.from_edge_list(pairs, len(du_s), len(dv_s))
    return GenerationResult(
        graph=g,
        requested_edges=m,
        realized_edges=g.m,
        duplicates_discarded=dups,
        u_order=u_order,
        v_order=v_order,
        blocks=plans,
        rho_clamps=clamps,
        block_edges=block_edges,
        excess_sum_u=sum_eu,
        excess_sum_v=sum_ev,
    )
