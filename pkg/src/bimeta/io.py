"""Edge-list ingestion and tabular serialization.

Formats are plain UTF-8 text: edge lists (two integer tokens per line,
comments allowed), and TSV files for summaries, degree->coefficient
profiles, and log-binned series.  All read/write pairs are exact inverses
on valid data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .graph import BipartiteGraph
from .metrics import BinnedSeries, GraphSummary


class ParseError(ValueError):
    """Malformed input file; message carries the line number."""


@dataclass(frozen=True)
class EdgeListFormat:
    """How an edge-list file is laid out.

    ``delimiter=None`` means any whitespace.  ``index_base`` is subtracted
    from every index on read and added back on write.  ``v_first`` swaps the
    column order.
    """

    delimiter: str | None = None
    index_base: int = 1
    comment_prefixes: tuple = ("#", "%")
    v_first: bool = False


DEFAULT_FORMAT = EdgeListFormat()


def read_edge_list(source, fmt: EdgeListFormat = DEFAULT_FORMAT,
                   n_u: int | None = None, n_v: int | None = None):
    """Parse an edge list from a path or open text stream.

    Returns ``(pairs, n_u, n_v)`` with 0-based pairs as an (m, 2) int64
    array.  Partition sizes are inferred as max index + 1 unless overridden.
    Malformed lines raise :class:`ParseError` naming the line.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            return read_edge_list(fh, fmt, n_u, n_v)

    from array import array

    us = array("q")
    vs = array("q")
    for lineno, line in enumerate(source, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(fmt.comment_prefixes):
            continue
        tokens = stripped.split(fmt.delimiter)
        if len(tokens) != 2:
            raise ParseError(
                f"line {lineno}: expected 2 tokens, got {len(tokens)}: {stripped!r}"
            )
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer token in {stripped!r}") from None
        if fmt.v_first:
            a, b = b, a
        us.append(a - fmt.index_base)
        vs.append(b - fmt.index_base)

    pairs = np.empty((len(us), 2), dtype=np.int64)
    pairs[:, 0] = us
    pairs[:, 1] = vs
    if len(us) and pairs.min() < 0:
        k = int(np.argmin(pairs.min(axis=1)))
        raise ParseError(
            f"negative index in pair ({pairs[k, 0]}, {pairs[k, 1]}) after "
            f"subtracting index base {fmt.index_base}"
        )
    inferred_u = int(pairs[:, 0].max()) + 1 if len(us) else 0
    inferred_v = int(pairs[:, 1].max()) + 1 if len(us) else 0
    return pairs, (n_u if n_u is not None else inferred_u), (
        n_v if n_v is not None else inferred_v
    )


def write_edge_list(g: BipartiteGraph, dest, fmt: EdgeListFormat = DEFAULT_FORMAT):
    """Write a graph's edges in (i, j) sorted order."""
    if isinstance(dest, (str, Path)):
        with open(dest, "w", encoding="utf-8") as fh:
            write_edge_list(g, fh, fmt)
            return
    sep = fmt.delimiter if fmt.delimiter is not None else " "
    for i, j in g.edge_list():
        a, b = int(i) + fmt.index_base, int(j) + fmt.index_base
        if fmt.v_first:
            a, b = b, a
        dest.write(f"{a}{sep}{b}\n")


def format_sci(x: float) -> str:
    """3-significant-figure scientific form with a bare exponent, e.g. 1.00e0."""
    if x == 0:
        return "0.00e0"
    exp = math.floor(math.log10(abs(x)))
    mant = x / 10**exp
    # rounding can push the mantissa to 10.00
    if abs(round(mant, 2)) >= 10:
        mant /= 10
        exp += 1
    return f"{mant:.2f}e{exp}"


def write_summary(rows, labels, dest):
    """Tab-separated summary table: label, n_u, n_v, m, cats, buts, meta.

    Counts are exact integers; metamorphosis uses 3-significant-figure
    scientific notation.
    """
    if isinstance(dest, (str, Path)):
        with open(dest, "w", encoding="utf-8") as fh:
            write_summary(rows, labels, fh)
            return
    for label, row in zip(labels, rows):
        dest.write(
            f"{label}\t{row.n_u}\t{row.n_v}\t{row.m}\t{row.caterpillars}\t"
            f"{row.butterflies}\t{format_sci(row.metamorphosis)}\n"
        )


def read_summary(source):
    """Inverse of :func:`write_summary`; returns (rows, labels)."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            return read_summary(fh)
    rows, labels = [], []
    for lineno, line in enumerate(source, start=1):
        if not line.strip():
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 7:
            raise ParseError(f"line {lineno}: expected 7 columns, got {len(parts)}")
        labels.append(parts[0])
        rows.append(
            GraphSummary(
                n_u=int(parts[1]),
                n_v=int(parts[2]),
                m=int(parts[3]),
                caterpillars=int(parts[4]),
                butterflies=int(parts[5]),
                metamorphosis=float(parts[6]),
            )
        )
    return rows, labels


def write_profile(c_u: dict, c_v: dict, size_u: dict, size_v: dict, dest):
    """Degree->coefficient profiles for both sides.

    Columns: side, degree, coefficient (full precision), class size.
    """
    if isinstance(dest, (str, Path)):
        with open(dest, "w", encoding="utf-8") as fh:
            write_profile(c_u, c_v, size_u, size_v, fh)
            return
    for side, cmap, smap in (("u", c_u, size_u), ("v", c_v, size_v)):
        for d in sorted(cmap):
            dest.write(f"{side}\t{d}\t{cmap[d]!r}\t{smap.get(d, 0)}\n")


def read_profile(source):
    """Inverse of :func:`write_profile`.

    Returns ``(c_u, c_v, size_u, size_v)``.  Degrees absent from the file
    stay absent; the generators apply their nearest-lower-degree rule.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            return read_profile(fh)
    c_u: dict = {}
    c_v: dict = {}
    size_u: dict = {}
    size_v: dict = {}
    for lineno, line in enumerate(source, start=1):
        if not line.strip():
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 4 or parts[0] not in ("u", "v"):
            raise ParseError(f"line {lineno}: malformed profile row {line!r}")
        try:
            d, c, s = int(parts[1]), float(parts[2]), int(parts[3])
        except ValueError:
            raise ParseError(f"line {lineno}: malformed profile row {line!r}") from None
        (c_u if parts[0] == "u" else c_v)[d] = c
        (size_u if parts[0] == "u" else size_v)[d] = s
    return c_u, c_v, size_u, size_v


def write_binned(series: BinnedSeries, dest):
    """Plot-ready TSV: bin lower bound, bin mean."""
    if isinstance(dest, (str, Path)):
        with open(dest, "w", encoding="utf-8") as fh:
            write_binned(series, fh)
            return
    for lo, mean in series:
        dest.write(f"{lo}\t{mean!r}\n")


def read_binned(source) -> BinnedSeries:
    """Inverse of :func:`write_binned`."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            return read_binned(fh)
    bins = []
    for lineno, line in enumerate(source, start=1):
        if not line.strip():
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: malformed binned row {line!r}")
        bins.append((int(parts[0]), float(parts[1])))
    return BinnedSeries(bins)
