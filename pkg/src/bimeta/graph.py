"""Immutable simple bipartite graph with dual CSR adjacency indexes.

Vertex indices are 0-based.  Partition 1 ("u" side) has ``n_u`` vertices,
partition 2 ("v" side) has ``n_v``.  Both adjacency directions are stored so
that neighbor queries are O(degree) from either side; neighbor lists are kept
sorted so common-neighbor work in the counting kernels can use linear merges
and bincount accumulators.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class GraphConstructionError(ValueError):
    """Raised when an edge list cannot form a valid bipartite graph."""


@dataclass(frozen=True)
class DegreeTarget:
    """Desired (or measured) degree sequences for both partitions.

    Invariants: all entries nonnegative, and the two sides sum to the same
    number of edges.
    """

    du: np.ndarray
    dv: np.ndarray

    def __post_init__(self):
        du = np.asarray(self.du, dtype=np.int64)
        dv = np.asarray(self.dv, dtype=np.int64)
        object.__setattr__(self, "du", du)
        object.__setattr__(self, "dv", dv)
        if du.size and du.min() < 0 or dv.size and dv.min() < 0:
            raise ValueError("degrees must be nonnegative")
        su, sv = int(du.sum()), int(dv.sum())
        if su != sv:
            raise ValueError(
                f"degree sums differ between partitions: {su} vs {sv}"
            )

    @property
    def m(self) -> int:
        return int(self.du.sum())


class BipartiteGraph:
    """Simple bipartite graph; immutable after construction.

    Stores CSR-style arrays for both orientations:

    * ``u_indptr``/``u_indices``: for each i in [0, n_u), the sorted v-side
      neighbors are ``u_indices[u_indptr[i]:u_indptr[i+1]]``.
    * ``v_indptr``/``v_indices``: the transpose, indexed by j.

    All arrays are int64 and marked read-only; instances are safe for
    concurrent reads.
    """

    __slots__ = ("n_u", "n_v", "m", "u_indptr", "u_indices", "v_indptr", "v_indices")

    def __init__(self, n_u, n_v, u_indptr, u_indices, v_indptr, v_indices):
        self.n_u = int(n_u)
        self.n_v = int(n_v)
        self.m = int(len(u_indices))
        self.u_indptr = u_indptr
        self.u_indices = u_indices
        self.v_indptr = v_indptr
        self.v_indices = v_indices
        for a in (u_indptr, u_indices, v_indptr, v_indices):
            a.flags.writeable = False

    @classmethod
    def from_edge_list(cls, pairs, n_u, n_v):
        """Build a graph from (i, j) index pairs.

        Duplicate pairs are collapsed to a single edge.  Returns
        ``(graph, duplicates_discarded)``.

        Raises :class:`GraphConstructionError` for out-of-range indices,
        naming the first offending pair.
        """
        n_u, n_v = int(n_u), int(n_v)
        if n_u < 0 or n_v < 0:
            raise GraphConstructionError("partition sizes must be nonnegative")
        pairs = np.asarray(pairs, dtype=np.int64)
        if pairs.size == 0:
            pairs = pairs.reshape(0, 2)
        if pairs.ndim != 2 or pairs.shape[1] != 2:
            raise GraphConstructionError("edge list must be a sequence of (i, j) pairs")

        ii, jj = pairs[:, 0], pairs[:, 1]
        bad = (ii < 0) | (ii >= n_u) | (jj < 0) | (jj >= n_v)
        if bad.any():
            k = int(np.argmax(bad))
            raise GraphConstructionError(
                f"pair #{k} = ({int(ii[k])}, {int(jj[k])}) out of range for "
                f"n_u={n_u}, n_v={n_v}"
            )

        # Collapse duplicates via a combined key; unique() also sorts by (i, j).
        key = ii * max(n_v, 1) + jj
        key = np.unique(key)
        dups = int(len(pairs) - len(key))
        ui = key // max(n_v, 1)
        vj = key % max(n_v, 1)

        u_indptr = np.zeros(n_u + 1, dtype=np.int64)
        np.cumsum(np.bincount(ui, minlength=n_u), out=u_indptr[1:])
        u_indices = vj.copy()

        order = np.argsort(vj * max(n_u, 1) + ui, kind="stable")
        v_indptr = np.zeros(n_v + 1, dtype=np.int64)
        np.cumsum(np.bincount(vj, minlength=n_v), out=v_indptr[1:])
        v_indices = ui[order]

        return cls(n_u, n_v, u_indptr, u_indices, v_indptr, v_indices), dups

    def neighbors_u(self, i: int) -> np.ndarray:
        """Sorted v-side neighbors of partition-1 vertex i."""
        return self.u_indices[self.u_indptr[i] : self.u_indptr[i + 1]]

    def neighbors_v(self, j: int) -> np.ndarray:
        """Sorted u-side neighbors of partition-2 vertex j."""
        return self.v_indices[self.v_indptr[j] : self.v_indptr[j + 1]]

    def degrees(self) -> DegreeTarget:
        """Per-node degree sequences; both sides sum to m."""
        return DegreeTarget(
            du=np.diff(self.u_indptr), dv=np.diff(self.v_indptr)
        )

    def edge_list(self) -> np.ndarray:
        """All edges as an (m, 2) array sorted by (i, j)."""
        out = np.empty((self.m, 2), dtype=np.int64)
        out[:, 0] = np.repeat(np.arange(self.n_u), np.diff(self.u_indptr))
        out[:, 1] = self.u_indices
        return out

    def __eq__(self, other):
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (
            self.n_u == other.n_u
            and self.n_v == other.n_v
            and np.array_equal(self.u_indptr, other.u_indptr)
            and np.array_equal(self.u_indices, other.u_indices)
        )

    def __hash__(self):
        return hash((self.n_u, self.n_v, self.m))

    def __repr__(self):
        return f"BipartiteGraph(n_u={self.n_u}, n_v={self.n_v}, m={self.m})"
