"""Immutable graph with bitset neighbour rows and fast pairwise intersection.

Neighbour sets are Python integers used as bit arrays (bit w of row u is set
iff u ~ w), so a common-neighbour count is one AND plus a popcount over
N/64-word operands. This is the workhorse for the certificate kernels, which
are dominated by repeated neighbourhood intersections.
"""

from collections import Counter

import numpy as np

from .errors import EmptyGraph, IndexOutOfRange, SameVertex


def _bits_to_indices(row: int, n: int) -> tuple:
    if row == 0:
        return ()
    raw = np.frombuffer(row.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return tuple(int(v) for v in np.flatnonzero(np.unpackbits(raw, bitorder="little")[:n]))


class Graph:
    """Undirected graph on {0, ..., n-1}, immutable after construction."""

    __slots__ = ("n", "m", "_rows", "_nbrs", "_degrees")

    def __init__(self, rows, validate: bool = True):
        rows = tuple(int(r) for r in rows)
        n = len(rows)
        if n == 0:
            raise EmptyGraph("graphs must have at least one vertex")
        if validate:
            for u, row in enumerate(rows):
                if row >> n:
                    raise IndexOutOfRange(f"row {u} has bits beyond vertex {n - 1}")
                if row >> u & 1:
                    raise SameVertex(f"self-loop at vertex {u}")
            for u, row in enumerate(rows):
                w = row
                while w:
                    v = (w & -w).bit_length() - 1
                    if not rows[v] >> u & 1:
                        raise ValueError(f"adjacency not symmetric at ({u}, {v})")
                    w &= w - 1
        self.n = n
        self._rows = rows
        self.m = sum(r.bit_count() for r in rows) // 2
        self._nbrs = [None] * n
        self._degrees = tuple(r.bit_count() for r in rows)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge ({u}, {v}) outside vertex range")
            if u == v:
                raise SameVertex(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(rows, validate=False)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} not in [0, {self.n})")

    def bitset(self, v: int) -> int:
        self._check_vertex(v)
        return self._rows[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._degrees[v]

    def neighbours(self, v: int) -> tuple:
        self._check_vertex(v)
        cached = self._nbrs[v]
        if cached is None:
            cached = self._nbrs[v] = _bits_to_indices(self._rows[v], self.n)
        return cached

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._rows[u] >> v & 1)

    def edges(self):
        """All edges (u, v) with u < v, lexicographically ascending."""
        for u in range(self.n):
            for v in self.neighbours(u):
                if v > u:
                    yield (u, v)

    def is_regular(self):
        """The common degree, or None when degrees differ."""
        first = self._degrees[0]
        return first if all(d == first for d in self._degrees) else None

    def irregularity_witness(self):
        """A pair of vertices with differing degrees, or None if regular."""
        first = self._degrees[0]
        for v, d in enumerate(self._degrees):
            if d != first:
                return (0, v)
        return None

    def common_neighbours(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SameVertex(f"common neighbours of {u} with itself")
        return (self._rows[u] & self._rows[v]).bit_count()

    def neighbourhood_degree_multiset(self, v: int) -> Counter:
        """Multiset of within-neighbourhood degrees of the neighbours of v."""
        row = self._rows[v]
        return Counter((self._rows[u] & row).bit_count() for u in self.neighbours(v))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"
