"""Square matrices over GF(2) with int-bitset rows, plus simple graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, List, Sequence, Tuple

__all__ = [
    "GF2Matrix",
    "SimpleGraph",
    "adjacency",
    "corank",
    "is_nondegenerate",
    "principal_submatrix",
    "rank",
]


def _rank_of_rows(rows: Iterable[int]) -> int:
    # xor basis keyed by leading bit
    basis = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead not in basis:
                basis[lead] = row
                break
            row ^= basis[lead]
    return len(basis)


@dataclass(frozen=True)
class GF2Matrix:
    """n x n matrix over GF(2); bit ``j`` of ``rows[i]`` is the entry (i, j)."""

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.n
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError("row has bits outside the matrix width")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "GF2Matrix":
        n = len(entries)
        rows = []
        for row in entries:
            if len(row) != n:
                raise ValueError("matrix must be square")
            rows.append(sum((v & 1) << j for j, v in enumerate(row)))
        return cls(n, tuple(rows))

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> "GF2Matrix":
        return cls(n, (0,) * n)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> List[List[int]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def transpose(self) -> "GF2Matrix":
        cols = tuple(
            sum(((self.rows[i] >> j) & 1) << i for i in range(self.n)) for j in range(self.n)
        )
        return GF2Matrix(self.n, cols)

    def rank(self) -> int:
        return _rank_of_rows(self.rows)

    def corank(self) -> int:
        return self.n - self.rank()

    def is_nondegenerate(self) -> bool:
        # the 0x0 matrix has determinant 1
        return self.rank() == self.n

    def principal_submatrix(self, idx: Iterable[int]) -> "GF2Matrix":
        idx = sorted(set(idx))
        for i in idx:
            if not 0 <= i < self.n:
                raise IndexError(f"index {i} out of range for {self.n}x{self.n} matrix")
        rows = []
        for i in idx:
            r = self.rows[i]
            rows.append(sum(((r >> j) & 1) << k for k, j in enumerate(idx)))
        return GF2Matrix(len(idx), tuple(rows))

    def principal_minor_nonzero(self, mask: int) -> bool:
        """Nondegeneracy of the principal submatrix on the index bitmask ``mask``."""
        rows = [self.rows[i] & mask for i in range(self.n) if (mask >> i) & 1]
        return _rank_of_rows(rows) == len(rows)


def rank(m: GF2Matrix) -> int:
    return m.rank()


def corank(m: GF2Matrix) -> int:
    return m.corank()


def is_nondegenerate(m: GF2Matrix) -> bool:
    return m.is_nondegenerate()


def principal_submatrix(m: GF2Matrix, idx: Iterable[int]) -> GF2Matrix:
    return m.principal_submatrix(idx)


@dataclass(frozen=True)
class SimpleGraph:
    """Loopless undirected graph; ``edges`` holds 2-element frozensets."""

    vertices: Tuple[Hashable, ...]
    edges: frozenset = frozenset()

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        vs = set(self.vertices)
        edges = frozenset(frozenset(e) for e in self.edges)
        for e in edges:
            if len(e) != 2:
                raise ValueError(f"self-loop or malformed edge {set(e)}")
            if not e <= vs:
                raise ValueError(f"edge {set(e)} uses unknown vertices")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_pairs(cls, vertices, pairs) -> "SimpleGraph":
        return cls(tuple(vertices), frozenset(frozenset(p) for p in pairs))

    def has_edge(self, u, v) -> bool:
        return frozenset((u, v)) in self.edges

    def neighbours(self, v) -> set:
        return {w for e in self.edges if v in e for w in e if w != v}


def adjacency(g: SimpleGraph) -> GF2Matrix:
    index = {v: i for i, v in enumerate(g.vertices)}
    rows = [0] * len(g.vertices)
    for e in g.edges:
        u, v = tuple(e)
        rows[index[u]] |= 1 << index[v]
        rows[index[v]] |= 1 << index[u]
    return GF2Matrix(len(rows), tuple(rows))
