#!/usr/bin/env python3
"""Compare the compiled and pure-Python butterfly-counting kernels.

Generates Chung-Lu graphs with heavy-tailed degrees at a few sizes and times
total and per-edge counting with both kernels, verifying they agree.

Usage: python benchmarks/bench_kernels.py [--edges 50000 200000 ...]
"""

import argparse
import time

import numpy as np

import bimeta as bm
from bimeta import _pykernel, kernel, metrics


def make_graph(m_target, seed):
    rng = np.random.default_rng(seed)
    n = m_target // 4
    cap = max(2, int(m_target**0.5) // 2)
    du = np.minimum(np.round(rng.pareto(1.8, n) * 2 + 1).astype(np.int64), cap)
    dv = np.minimum(np.round(rng.pareto(2.2, n) * 2 + 1).astype(np.int64), cap)
    # spread the repair so no single node blows past the sqrt(m) bound
    diff = int(du.sum() - dv.sum())
    target, need = (dv, diff) if diff > 0 else (du, -diff)
    np.add.at(target, np.arange(need) % len(target), 1)
    res = bm.fast_bipartite_cl(bm.DegreeTarget(du=du, dv=dv), bm.GeneratorConfig(seed=seed))
    return res.graph


def bench(g, impl):
    args_total = (g.u_indptr, g.u_indices, g.v_indptr, g.v_indices, g.n_u)
    t0 = time.perf_counter()
    total = impl.butterfly_total(*args_total)
    t_total = time.perf_counter() - t0
    t0 = time.perf_counter()
    per_edge = impl.butterflies_per_edge(*args_total)
    t_edge = time.perf_counter() - t0
    return total, int(per_edge.sum()), t_total, t_edge


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--edges", type=int, nargs="+", default=[20_000, 100_000, 400_000])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    impls = [("python", _pykernel)]
    if kernel.impl is not _pykernel:
        impls.insert(0, ("native", kernel.impl))
    else:
        print("compiled extension not available; timing the fallback only")

    print(f"{'edges':>9} {'kernel':>8} {'butterflies':>13} {'total [s]':>10} {'per-edge [s]':>13}")
    for m_target in args.edges:
        g = make_graph(m_target, args.seed)
        results = {}
        for name, impl in impls:
            total, pe_sum, t_total, t_edge = bench(g, impl)
            assert pe_sum == 4 * total
            results[name] = total
            print(f"{g.m:>9} {name:>8} {total:>13} {t_total:>10.4f} {t_edge:>13.4f}")
        assert len(set(results.values())) == 1, "kernels disagree"


if __name__ == "__main__":
    main()
