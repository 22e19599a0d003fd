"""Command-line front end: measure, generate, compare, oracle-check.

All outputs are the text formats from :mod:`bimeta.io`; every run with fixed
inputs, flags, and seed produces byte-identical files.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import io, metrics
from .generators import GeneratorConfig, bipartite_bter, fast_bipartite_cl
from .graph import BipartiteGraph, DegreeTarget


def _format_from_args(args) -> io.EdgeListFormat:
    delim = {"ws": None, "comma": ","}[args.delimiter]
    return io.EdgeListFormat(
        delimiter=delim, index_base=args.index_base, v_first=args.v_first
    )


def _add_format_flags(p):
    p.add_argument(
        "--delimiter", choices=("ws", "comma"), default="ws",
        help="edge-list delimiter: whitespace (default) or comma",
    )
    p.add_argument(
        "--index-base", type=int, choices=(0, 1), default=1,
        help="index base of the edge-list file (default 1)",
    )
    p.add_argument(
        "--v-first", action="store_true",
        help="edge-list columns are (v, u) instead of (u, v)",
    )


def _load_graph(path, fmt) -> BipartiteGraph:
    try:
        pairs, n_u, n_v = io.read_edge_list(path, fmt)
    except OSError as e:
        raise SystemExit(f"error reading {path}: {e}")
    except io.ParseError as e:
        raise SystemExit(f"error parsing {path}: {e}")
    g, dups = BipartiteGraph.from_edge_list(pairs, n_u, n_v)
    if dups:
        print(f"# {path}: discarded {dups} duplicate edges", file=sys.stderr)
    return g


def _binned_outputs(g, label, labels_uv, out_dir):
    """Write log-binned degree distributions and coefficient series."""
    cu, cv = metrics.metamorphosis_per_degree(g)
    for side, lbl, series in (
        ("u", labels_uv[0], metrics.degree_distribution(g, "u")),
        ("v", labels_uv[1], metrics.degree_distribution(g, "v")),
    ):
        series = {d: n for d, n in series.items() if d >= 1}
        io.write_binned(metrics.log_bin(series), out_dir / f"{label}_dd_{lbl}.tsv")
    for lbl, series in ((labels_uv[0], cu), (labels_uv[1], cv)):
        if series:
            io.write_binned(metrics.log_bin(series), out_dir / f"{label}_meta_{lbl}.tsv")


def cmd_measure(args) -> int:
    fmt = _format_from_args(args)
    g = _load_graph(args.input, fmt)
    s = metrics.summarize(g)
    label = args.label or Path(args.input).stem
    io.write_summary([s], [label], sys.stdout)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    io.write_summary([s], [label], out_dir / f"{label}_summary.tsv")
    if args.profiles:
        cu, cv = metrics.metamorphosis_per_degree(g)
        io.write_profile(
            cu,
            cv,
            metrics.degree_distribution(g, "u"),
            metrics.degree_distribution(g, "v"),
            out_dir / f"{label}_profile.tsv",
        )
    if args.binned:
        _binned_outputs(g, label, args.side_labels.split(","), out_dir)
    return 0


def _load_degree_file(path) -> np.ndarray:
    vals = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            try:
                vals.append(int(s))
            except ValueError:
                raise SystemExit(f"{path}: line {lineno}: not an integer: {s!r}")
    return np.array(vals, dtype=np.int64)


def _generation_inputs(args, need_profile: bool):
    """Targets (and profiles, for BTER) from an edge list or explicit files."""
    fmt = _format_from_args(args)
    if args.input:
        g = _load_graph(args.input, fmt)
        targets = g.degrees()
        if need_profile:
            if args.profile:
                cu, cv, _, _ = io.read_profile(args.profile)
            else:
                cu, cv = metrics.metamorphosis_per_degree(g)
            return targets, cu, cv
        return targets, None, None
    if not (args.degrees_u and args.degrees_v):
        raise SystemExit("provide an input edge list or --degrees-u and --degrees-v")
    du = _load_degree_file(args.degrees_u)
    dv = _load_degree_file(args.degrees_v)
    try:
        targets = DegreeTarget(du=du, dv=dv)
    except ValueError as e:
        raise SystemExit(str(e))
    if need_profile:
        if not args.profile:
            raise SystemExit("--profile is required when generating BTER from degree files")
        cu, cv, _, _ = io.read_profile(args.profile)
        return targets, cu, cv
    return targets, None, None


def _run_trial(mode, du, dv, cu, cv, seed, out_path, fmt):
    """One generation trial; returns the summary of the generated graph."""
    targets = DegreeTarget(du=du, dv=dv)
    cfg = GeneratorConfig(seed=seed)
    if mode == "cl":
        res = fast_bipartite_cl(targets, cfg)
    else:
        res = bipartite_bter(targets, cu, cv, cfg)
    io.write_edge_list(res.graph, out_path, fmt)
    return metrics.summarize(res.graph)


def _aggregate_report(summaries, labels, dest):
    """Per-trial rows plus mean and min-max range for every summary column."""
    io.write_summary(summaries, labels, dest)
    cols = {
        "n_u": [s.n_u for s in summaries],
        "n_v": [s.n_v for s in summaries],
        "m": [s.m for s in summaries],
        "caterpillars": [s.caterpillars for s in summaries],
        "butterflies": [s.butterflies for s in summaries],
        "metamorphosis": [s.metamorphosis for s in summaries],
    }
    for name, vals in cols.items():
        dest.write(
            f"# {name}\tmean={io.format_sci(float(np.mean(vals)))}\t"
            f"min={io.format_sci(float(min(vals)))}\t"
            f"max={io.format_sci(float(max(vals)))}\n"
        )


def cmd_generate(args, mode: str) -> int:
    targets, cu, cv = _generation_inputs(args, need_profile=(mode == "bter"))
    fmt = _format_from_args(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    label = args.label or (Path(args.input).stem if args.input else "degrees")
    label = f"{label}_{mode}"

    trial_paths = [
        out_dir / f"{label}_trial{t:03d}.txt" for t in range(args.trials)
    ]
    jobs = [
        (mode, targets.du, targets.dv, cu, cv, args.seed + t, trial_paths[t], fmt)
        for t in range(args.trials)
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            summaries = list(pool.map(_run_trial_star, jobs))
    else:
        summaries = [_run_trial_star(j) for j in jobs]

    labels = [f"{label}_trial{t:03d}" for t in range(args.trials)]
    with open(out_dir / f"{label}_report.tsv", "w", encoding="utf-8") as fh:
        _aggregate_report(summaries, labels, fh)
    _aggregate_report(summaries, labels, sys.stdout)
    return 0


def _run_trial_star(job):
    return _run_trial(*job)


def cmd_compare(args) -> int:
    fmt = _format_from_args(args)
    paths = [args.original, *args.generated]
    graphs = [_load_graph(p, fmt) for p in paths]
    labels = [Path(p).stem for p in paths]
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    summaries = [metrics.summarize(g) for g in graphs]
    io.write_summary(summaries, labels, sys.stdout)
    io.write_summary(summaries, labels, out_dir / "compare_summary.tsv")

    # binned degree distributions and coefficient series, aligned by bin
    side_labels = args.side_labels.split(",")
    for g, label in zip(graphs, labels):
        _binned_outputs(g, label, side_labels, out_dir)

    # per-degree-bin deltas of each generated graph against the original
    ref_cu, ref_cv = metrics.metamorphosis_per_degree(graphs[0])
    for g, label in zip(graphs[1:], labels[1:]):
        cu, cv = metrics.metamorphosis_per_degree(g)
        with open(out_dir / f"{label}_meta_delta.tsv", "w", encoding="utf-8") as fh:
            for side_lbl, ref, got in ((side_labels[0], ref_cu, cu), (side_labels[1], ref_cv, cv)):
                ref_bins = dict(metrics.log_bin(ref)) if ref else {}
                got_bins = dict(metrics.log_bin(got)) if got else {}
                for lo in sorted(set(ref_bins) | set(got_bins)):
                    delta = got_bins.get(lo, 0.0) - ref_bins.get(lo, 0.0)
                    fh.write(f"{side_lbl}\t{lo}\t{delta!r}\n")
    return 0


def cmd_oracle_check(args) -> int:
    """Check the counting kernels against the brute-force oracle."""
    rng = np.random.default_rng(args.seed)
    failures = 0
    for k in range(args.graphs):
        n_u = int(rng.integers(2, 31))
        n_v = int(rng.integers(2, 31))
        p = float(rng.uniform(0.05, 0.5))
        mask = rng.random((n_u, n_v)) < p
        pairs = np.argwhere(mask)
        g, _ = BipartiteGraph.from_edge_list(pairs, n_u, n_v)
        total, per_edge = metrics.butterfly_oracle(g)
        ok = (
            total == metrics.count_butterflies(g)
            and per_edge == metrics.butterflies_per_edge(g)
        )
        status = "ok" if ok else "MISMATCH"
        if not ok:
            failures += 1
        print(f"graph {k:3d}  n_u={n_u:2d} n_v={n_v:2d} p={p:.3f} "
              f"butterflies={total}  {status}")
    print(f"{args.graphs - failures}/{args.graphs} graphs matched the oracle")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bimeta",
        description="Measure bipartite graphs and generate matching synthetic "
        "graphs (fast bipartite Chung-Lu and bipartite BTER).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", help="summary statistics for an edge list")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--profiles", action="store_true",
                   help="also write per-degree metamorphosis profiles")
    p.add_argument("--binned", action="store_true",
                   help="also write log-binned degree/coefficient series")
    p.add_argument("--out-dir", default=".", help="output directory")
    p.add_argument("--label", help="label for output rows/files (default: file stem)")
    p.add_argument("--side-labels", default="u,v",
                   help="comma-separated names for the two partitions")
    _add_format_flags(p)
    p.set_defaults(func=cmd_measure)

    for mode in ("cl", "bter"):
        p = sub.add_parser(
            f"generate-{mode}",
            help=f"generate graphs with the bipartite {mode.upper()} model",
        )
        p.add_argument("input", nargs="?",
                       help="edge list to take degrees (and profiles) from")
        p.add_argument("--degrees-u", help="file with one partition-1 degree per line")
        p.add_argument("--degrees-v", help="file with one partition-2 degree per line")
        if mode == "bter":
            p.add_argument("--profile",
                           help="profile TSV (measured from the input when omitted)")
        p.add_argument("--seed", type=int, required=True)
        p.add_argument("--trials", type=int, default=1,
                       help="trial t uses seed+t (default 1)")
        p.add_argument("--jobs", type=int, default=1,
                       help="run trials across this many processes")
        p.add_argument("--out-dir", default=".", help="output directory")
        p.add_argument("--label", help="output file label")
        p.add_argument("--side-labels", default="u,v")
        _add_format_flags(p)
        p.set_defaults(func=lambda a, mode=mode: cmd_generate(a, mode))

    p = sub.add_parser("compare", help="side-by-side summaries and binned series")
    p.add_argument("original")
    p.add_argument("generated", nargs="+")
    p.add_argument("--out-dir", default=".", help="output directory")
    p.add_argument("--side-labels", default="u,v")
    _add_format_flags(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("oracle-check",
                       help="verify the counting kernels against brute force")
    p.add_argument("--graphs", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
