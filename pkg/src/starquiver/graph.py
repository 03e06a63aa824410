"""Bipartite loopless multigraphs with a fixed colouring X = {x_1..x_r}, Y = {y_1..y_s}."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .exact import IntPoly, Matrix, char_poly, count_roots_greater


@dataclass(frozen=True)
class BipartiteGraph:
    """Biadjacency matrix ``R`` (r x s) of nonnegative edge multiplicities."""

    r: int
    s: int
    R: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        R = tuple(tuple(int(x) for x in row) for row in self.R)
        object.__setattr__(self, "R", R)
        if self.r < 1 or self.s < 1:
            raise ValueError("both colour classes must be nonempty")
        if len(R) != self.r or any(len(row) != self.s for row in R):
            raise ValueError("R must be r x s")
        if any(x < 0 for row in R for x in row):
            raise ValueError("edge multiplicities must be nonnegative")

    @classmethod
    def from_edges(cls, r: int, s: int, edges: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        """Build from 1-based (i, j) pairs; repeated pairs add multiplicity."""
        R = [[0] * s for _ in range(r)]
        for i, j in edges:
            if not (1 <= i <= r and 1 <= j <= s):
                raise ValueError(f"edge ({i},{j}) out of range")
            R[i - 1][j - 1] += 1
        return cls(r, s, tuple(map(tuple, R)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BipartiteGraph":
        return cls(len(rows), len(rows[0]), tuple(map(tuple, rows)))

    @property
    def is_simple(self) -> bool:
        return all(x in (0, 1) for row in self.R for x in row)

    @property
    def num_edges(self) -> int:
        return sum(map(sum, self.R))

    @property
    def num_vertices(self) -> int:
        return self.r + self.s

    def edges(self) -> list[tuple[int, int]]:
        """1-based edge list, repeated according to multiplicity."""
        return [(i + 1, j + 1) for i, row in enumerate(self.R) for j, m in enumerate(row) for _ in range(m)]

    def transpose(self) -> "BipartiteGraph":
        return BipartiteGraph(self.s, self.r, tuple(zip(*self.R)))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(map(sum, self.R))

    def col_sums(self) -> tuple[int, ...]:
        return tuple(map(sum, zip(*self.R)))

    def is_connected(self) -> bool:
        n = self.r + self.s
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.neighbours(v):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == n

    def neighbours(self, v: int) -> list[int]:
        """Neighbours in the combined 0-based order x_1..x_r, y_1..y_s."""
        if v < self.r:
            return [self.r + j for j, m in enumerate(self.R[v]) if m]
        j = v - self.r
        return [i for i in range(self.r) if self.R[i][j]]

    def to_json(self) -> dict:
        return {"r": self.r, "s": self.s, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "BipartiteGraph":
        return cls.from_edges(int(data["r"]), int(data["s"]), [tuple(e) for e in data["edges"]])


class Bidegree(NamedTuple):
    sigma1: int
    sigma2: int


@dataclass(frozen=True)
class BiEigenPair:
    d_x: tuple[Fraction, ...]
    d_y: tuple[Fraction, ...]
    sigma1: Fraction
    sigma2: Fraction


def adjacency(G: BipartiteGraph) -> Matrix:
    n = G.r + G.s
    A = [[0] * n for _ in range(n)]
    for i, row in enumerate(G.R):
        for j, m in enumerate(row):
            A[i][G.r + j] = m
            A[G.r + j][i] = m
    return tuple(map(tuple, A))


def bipartite_complement(G: BipartiteGraph) -> BipartiteGraph:
    if not G.is_simple:
        raise ValueError("bipartite complement is only defined for simple graphs")
    return BipartiteGraph(G.r, G.s, tuple(tuple(1 - x for x in row) for row in G.R))


def disjoint_union(G: BipartiteGraph, H: BipartiteGraph) -> BipartiteGraph:
    rows = [row + (0,) * H.s for row in G.R] + [(0,) * G.s + row for row in H.R]
    return BipartiteGraph(G.r + H.r, G.s + H.s, tuple(rows))


def bidegree(G: BipartiteGraph) -> Bidegree | None:
    """Bidegree when G is semi-regular, else None."""
    rows, cols = set(G.row_sums()), set(G.col_sums())
    if len(rows) == 1 and len(cols) == 1:
        return Bidegree(rows.pop(), cols.pop())
    return None


def _ratio(target: Sequence[Fraction], base: Sequence[Fraction]) -> Fraction | None:
    """The scalar c with target == c * base, or None; base must be nonzero."""
    c = None
    for t, b in zip(target, base):
        if b == 0:
            if t != 0:
                return None
            continue
        q = Fraction(t) / b
        if c is None:
            c = q
        elif q != c:
            return None
    return c


def check_bi_eigen(G: BipartiteGraph, d_x: Sequence, d_y: Sequence) -> BiEigenPair | None:
    """Solve R d_y = s1 d_x and R^T d_x = s2 d_y for rational s1, s2, or return None."""
    if len(d_x) != G.r or len(d_y) != G.s:
        raise ValueError("vector lengths must match the colour classes")
    dx = tuple(Fraction(x) for x in d_x)
    dy = tuple(Fraction(y) for y in d_y)
    if not any(dx) and not any(dy):
        raise ValueError("bi-eigenvector must be nonzero")
    Rdy = [sum(m * y for m, y in zip(row, dy)) for row in G.R]
    Rtdx = [sum(G.R[i][j] * dx[i] for i in range(G.r)) for j in range(G.s)]
    if any(dx):
        s1 = _ratio(Rdy, dx)
    else:
        s1 = Fraction(0) if not any(Rdy) else None
    if any(dy):
        s2 = _ratio(Rtdx, dy)
    else:
        s2 = Fraction(0) if not any(Rtdx) else None
    if s1 is None or s2 is None:
        return None
    return BiEigenPair(dx, dy, s1, s2)


def adjacency_char_poly(G: BipartiteGraph) -> IntPoly:
    return char_poly(adjacency(G))


def is_reflexive(G: BipartiteGraph) -> bool:
    """Second largest adjacency eigenvalue is at most 2.

    Roots above 2 are counted with multiplicity, so a repeated spectral radius
    above 2 (as in a disjoint union of two equal components) is rejected.
    """
    return count_roots_greater(adjacency_char_poly(G), 2) <= 1


def is_salem(G: BipartiteGraph) -> bool:
    return count_roots_greater(adjacency_char_poly(G), 2) == 1


def has_duplicate_neighborhoods(G: BipartiteGraph) -> bool:
    if not G.is_simple:
        raise ValueError("defined for simple graphs only")
    cols = list(zip(*G.R))
    return len(set(G.R)) < G.r or len(set(cols)) < G.s


def to_dot(G: BipartiteGraph, name: str = "G") -> str:
    lines = [f'graph "{name}" {{']
    lines += [f'  x{i} [shape=box];' for i in range(1, G.r + 1)]
    lines += [f'  y{j} [shape=circle];' for j in range(1, G.s + 1)]
    lines += [f"  x{i} -- y{j};" for i, j in G.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_graph(path) -> BipartiteGraph:
    with open(path) as fh:
        return BipartiteGraph.from_json(json.load(fh))
