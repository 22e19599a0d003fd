"""Pure-Python/numpy butterfly-counting kernels.

Fallback used when the compiled extension is unavailable (or disabled via
``BIMETA_PURE=1``).  Same contracts as ``bimeta._native``: exact integer
results, independent of iteration order.

Both kernels iterate wedges: for a source node i on the "src" side, the
accumulator ``acc[i']`` ends up holding |N(i) ∩ N(i')| for every i' reachable
through a shared center node.  Totals are accumulated in Python ints, so they
cannot overflow regardless of graph size.
"""

from __future__ import annotations

import numpy as np

NAME = "python"


def butterfly_total(src_indptr, src_indices, ctr_indptr, ctr_indices, n_src):
    """Total number of 4-cycles.

    ``src`` is the CSR of the side whose nodes act as wedge endpoints;
    ``ctr`` is the transposed CSR of the wedge-center side.
    """
    total = 0
    for i in range(n_src):
        lo, hi = src_indptr[i], src_indptr[i + 1]
        if hi - lo < 1:
            continue
        pool = ctr_indices[_gather(ctr_indptr, src_indices[lo:hi])]
        acc = np.bincount(pool, minlength=n_src)
        acc[i] = 0
        total += int((acc * (acc - 1) // 2).sum())
    return total // 2  # each {i, i'} pair seen from both ends


def butterflies_per_edge(src_indptr, src_indices, ctr_indptr, ctr_indices, n_src):
    """Per-edge butterfly counts, aligned with the src CSR edge order."""
    out = np.zeros(len(src_indices), dtype=np.int64)
    for i in range(n_src):
        lo, hi = src_indptr[i], src_indptr[i + 1]
        if hi - lo < 1:
            continue
        nbrs = src_indices[lo:hi]
        pool = ctr_indices[_gather(ctr_indptr, nbrs)]
        acc = np.bincount(pool, minlength=n_src)
        acc[i] = 0
        for a, j in enumerate(nbrs):
            row = ctr_indices[ctr_indptr[j] : ctr_indptr[j + 1]]
            # every i' != i in N(j) shares at least center j with i
            out[lo + a] = acc[row].sum() - (len(row) - 1)
    return out


def _gather(indptr, nodes):
    """Flat index array selecting the CSR rows of ``nodes``, in order."""
    counts = indptr[nodes + 1] - indptr[nodes]
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, dtype=np.int64)
    starts = np.repeat(indptr[nodes], counts)
    offs = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
    return starts + offs
