"""Quivers, star algebras, one-point and trivial extensions, bounded path algebras.

Paths are tuples of arrow labels written in traversal order, so the path
``(a, b)`` first follows ``a`` and then ``b``.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from .exact import PreconditionError
from .graph import BipartiteGraph

Path = tuple[str, ...]


@dataclass(frozen=True)
class Arrow:
    source: str
    target: str
    label: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        names = set(self.vertices)
        if len(names) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate arrow labels")
        for a in self.arrows:
            if a.source not in names or a.target not in names:
                raise ValueError(f"arrow {a.label} references an unknown vertex")

    def arrow(self, label: str) -> Arrow:
        return self._by_label[label]

    @cached_property
    def _by_label(self) -> dict[str, Arrow]:
        return {a.label: a for a in self.arrows}

    @cached_property
    def _outgoing(self) -> dict[str, list[Arrow]]:
        out: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.source].append(a)
        return out

    def outgoing(self, v: str) -> list[Arrow]:
        return self._outgoing[v]

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict[str, set[str]] = defaultdict(set)
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for u in adj[v] - seen:
                seen.add(u)
                stack.append(u)
        return len(seen) == len(self.vertices)

    def path_endpoints(self, path: Path) -> tuple[str, str]:
        arrows = [self.arrow(label) for label in path]
        for a, b in zip(arrows, arrows[1:]):
            if a.target != b.source:
                raise ValueError(f"{a.label} and {b.label} do not compose")
        return arrows[0].source, arrows[-1].target

    def paths_of_length(self, n: int) -> list[Path]:
        paths: list[Path] = [(a.label,) for a in self.arrows]
        if n == 0:
            return []
        for _ in range(n - 1):
            paths = [p + (a.label,) for p in paths for a in self.outgoing(self.arrow(p[-1]).target)]
        return paths


def compute_levels(Q: Quiver) -> dict[str, int] | None:
    """The level map with minimum 0 and level(source) = level(target) + 1, or None."""
    if not Q.is_connected():
        raise ValueError("quiver must be connected")
    level = {Q.vertices[0]: 0}
    stack = [Q.vertices[0]]
    while stack:
        v = stack.pop()
        for a in Q.arrows:
            for u, w, delta in ((a.source, a.target, -1), (a.target, a.source, 1)):
                if u == v:
                    expected = level[v] + delta
                    if w not in level:
                        level[w] = expected
                        stack.append(w)
                    elif level[w] != expected:
                        return None
    low = min(level.values())
    return {v: level[v] - low for v in Q.vertices}


# ---------------------------------------------------------------- star algebras


@dataclass(frozen=True)
class StarAlgebra:
    """K S_(r,s) modulo the monomials a_i b_j for (i, j) in ``relations`` (1-based)."""

    r: int
    s: int
    relations: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        rels = frozenset((int(i), int(j)) for i, j in self.relations)
        object.__setattr__(self, "relations", rels)
        if self.r < 1 or self.s < 1:
            raise ValueError("r and s must be positive")
        for i, j in rels:
            if not (1 <= i <= self.r and 1 <= j <= self.s):
                raise ValueError(f"relation ({i},{j}) out of range")

    def nonzero_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.r + 1) for j in range(1, self.s + 1)
                if (i, j) not in self.relations]

    def to_json(self) -> dict:
        return {"r": self.r, "s": self.s, "relations": [list(p) for p in sorted(self.relations)]}

    @classmethod
    def from_json(cls, data: Mapping) -> "StarAlgebra":
        return cls(int(data["r"]), int(data["s"]), frozenset(tuple(p) for p in data["relations"]))

    @classmethod
    def from_graph(cls, G: BipartiteGraph) -> "StarAlgebra":
        """The star algebra whose B-graph is G."""
        if not G.is_simple:
            raise ValueError("star algebras correspond to simple graphs")
        rels = {(i + 1, j + 1) for i in range(G.r) for j in range(G.s) if not G.R[i][j]}
        return cls(G.r, G.s, frozenset(rels))


def load_star(path) -> StarAlgebra:
    with open(path) as fh:
        return StarAlgebra.from_json(json.load(fh))


def star_quiver(r: int, s: int) -> Quiver:
    xs = [f"x{i}" for i in range(1, r + 1)]
    ys = [f"y{j}" for j in range(1, s + 1)]
    arrows = [Arrow(f"x{i}", "z", f"a{i}") for i in range(1, r + 1)]
    arrows += [Arrow("z", f"y{j}", f"b{j}") for j in range(1, s + 1)]
    return Quiver(tuple(xs + ["z"] + ys), tuple(arrows))


def b_lambda(L: StarAlgebra) -> BipartiteGraph:
    R = tuple(tuple(0 if (i, j) in L.relations else 1 for j in range(1, L.s + 1))
              for i in range(1, L.r + 1))
    return BipartiteGraph(L.r, L.s, R)


def b_lambda_quiver(L: StarAlgebra) -> Quiver:
    """Vertices x_i, y_j with arrows beta_ji: y_j -> x_i for each nonzero a_i b_j."""
    xs = [f"x{i}" for i in range(1, L.r + 1)]
    ys = [f"y{j}" for j in range(1, L.s + 1)]
    arrows = [Arrow(f"y{j}", f"x{i}", f"beta{j}_{i}") for i, j in L.nonzero_pairs()]
    return Quiver(tuple(xs + ys), tuple(arrows))


def zero_sets(L: StarAlgebra) -> tuple[list[frozenset[int]], list[frozenset[int]]]:
    """Z(x_i) as sets of j, and Z(y_j) as sets of i."""
    zx = [frozenset(j for (i2, j) in L.relations if i2 == i) for i in range(1, L.r + 1)]
    zy = [frozenset(i for (i, j2) in L.relations if j2 == j) for j in range(1, L.s + 1)]
    return zx, zy


def is_balanced(L: StarAlgebra) -> bool:
    zx, zy = zero_sets(L)
    return all(1 <= len(z) <= L.s - 1 for z in zx) and all(1 <= len(z) <= L.r - 1 for z in zy)


def is_2rf_shape(L: StarAlgebra) -> bool:
    if (L.r, L.s) == (1, 1):
        return L.relations == frozenset({(1, 1)})
    if L.r < 4 or L.s < 4:
        return False
    zx, zy = zero_sets(L)
    return all(2 <= len(z) <= L.s - 2 for z in zx) and all(2 <= len(z) <= L.r - 2 for z in zy)


def koszul_dual_star(L: StarAlgebra) -> StarAlgebra:
    """r' = s, s' = r; b_j* a_i* is a relation exactly when a_i b_j is not."""
    rels = {(j, i) for i in range(1, L.r + 1) for j in range(1, L.s + 1) if (i, j) not in L.relations}
    return StarAlgebra(L.s, L.r, frozenset(rels))


# ---------------------------------------------------------------- bound quiver algebras


@dataclass(frozen=True)
class BoundQuiverAlgebra:
    quiver: Quiver
    monomials: frozenset[Path] = frozenset()
    commutativity: tuple[tuple[Path, Path], ...] = ()  # each pair means p - q lies in the ideal
    max_length: int = 3

    def __post_init__(self):
        for p in self.monomials:
            self.quiver.path_endpoints(p)
        for p, q in self.commutativity:
            if self.quiver.path_endpoints(p) != self.quiver.path_endpoints(q):
                raise ValueError(f"commutativity relation {p} - {q} is not between parallel paths")

    @property
    def is_monomial(self) -> bool:
        return not self.commutativity

    def paths(self) -> list[Path]:
        out: list[Path] = []
        for n in range(1, self.max_length + 1):
            out.extend(self.quiver.paths_of_length(n))
        return out


def star_bound_algebra(L: StarAlgebra) -> BoundQuiverAlgebra:
    Q = star_quiver(L.r, L.s)
    return BoundQuiverAlgebra(Q, frozenset((f"a{i}", f"b{j}") for i, j in L.relations), (), 2)


def top_dimensions(Q: Quiver, module_maps: Mapping[str, Fraction | int], dims: Mapping[str, int]) -> dict[str, int]:
    """Top of a thin representation: dim M_v minus the rank of the incoming maps.

    ``dims`` gives dim M_v in {0, 1}; ``module_maps`` gives the scalar attached to
    each arrow (used only when both ends are nonzero).
    """
    top = {}
    for v in Q.vertices:
        if dims.get(v, 0) == 0:
            top[v] = 0
            continue
        if dims[v] != 1:
            raise ValueError("only thin modules are supported")
        incoming = any(module_maps.get(a.label, 0) != 0 and dims.get(a.source, 0)
                       for a in Q.arrows if a.target == v)
        top[v] = 0 if incoming else 1
    return top


def one_point_extension_quiver(Q: Quiver, topdims: Mapping[str, int], name: str = "ω",
                               label_prefix: str = "e") -> Quiver:
    vertices = (name,) + Q.vertices
    arrows = list(Q.arrows)
    for v in Q.vertices:
        k = topdims.get(v, 0)
        for t in range(k):
            label = f"{label_prefix}{v}" if k == 1 else f"{label_prefix}{v}_{t + 1}"
            arrows.append(Arrow(name, v, label))
    return Quiver(vertices, tuple(arrows))


def gamma_lambda(L: StarAlgebra) -> BoundQuiverAlgebra:
    """T(Lambda) without the arrows a_i: the one-point extension of K B_Lambda by the all-ones module."""
    if not is_balanced(L):
        raise PreconditionError("gamma_lambda requires a balanced star algebra")
    BQ = b_lambda_quiver(L)
    ones = {v: 1 for v in BQ.vertices}
    identity_maps = {a.label: 1 for a in BQ.arrows}
    top = top_dimensions(BQ, identity_maps, ones)
    Q = one_point_extension_quiver(BQ, top, name="z", label_prefix="b")
    # arrows from z are labelled b_j after their target y_j
    relabel = {}
    for a in Q.arrows:
        if a.source == "z":
            relabel[a.label] = "b" + a.target[1:]
    Q = Quiver(("z",) + BQ.vertices[L.r:] + BQ.vertices[:L.r],
               tuple(Arrow(a.source, a.target, relabel.get(a.label, a.label)) for a in Q.arrows))
    rels = []
    for i in range(1, L.r + 1):
        into = [j for (i2, j) in L.nonzero_pairs() if i2 == i]
        for j, k in combinations(into, 2):
            rels.append(((f"b{j}", f"beta{j}_{i}"), (f"b{k}", f"beta{k}_{i}")))
    return BoundQuiverAlgebra(Q, frozenset(), tuple(rels), 2)


def trivial_extension(L: StarAlgebra, complete: bool = True) -> BoundQuiverAlgebra:
    """Bound quiver presentation of T(Lambda) for a balanced star algebra.

    With ``complete=False`` the relations are the monomials of Lambda and the
    two commutativity families, with every path longer than 3 set to zero.
    That presentation is exact when B_Lambda is connected and every pair of
    distinct same-colour vertices is separated by a zero relation; in general
    it misses part of the socle. ``complete=True`` adds the remaining
    relations: non-closed paths of length 3 vanish and the cycles at z from
    different components of B_Lambda coincide.
    """
    if not is_balanced(L):
        raise PreconditionError("trivial_extension requires a balanced star algebra")
    S = star_quiver(L.r, L.s)
    betas = [Arrow(f"y{j}", f"x{i}", f"beta{j}_{i}") for i, j in L.nonzero_pairs()]
    Q = Quiver(S.vertices, S.arrows + tuple(betas))
    monomials = {(f"a{i}", f"b{j}") for i, j in L.relations}
    pairs = L.nonzero_pairs()
    rels = []
    for j in range(1, L.s + 1):
        nbrs = [i for (i, j2) in pairs if j2 == j]
        for i, k in combinations(nbrs, 2):
            rels.append(((f"beta{j}_{i}", f"a{i}"), (f"beta{j}_{k}", f"a{k}")))
    for i in range(1, L.r + 1):
        nbrs = [j for (i2, j) in pairs if i2 == i]
        for j, k in combinations(nbrs, 2):
            rels.append(((f"b{j}", f"beta{j}_{i}"), (f"b{k}", f"beta{k}_{i}")))
    if complete:
        for i, j in pairs:
            for i2, j2 in pairs:
                if j2 == j and i2 != i:
                    monomials.add((f"a{i}", f"b{j}", f"beta{j}_{i2}"))
                if i2 == i and j2 != j:
                    monomials.add((f"beta{j2}_{i}", f"a{i}", f"b{j}"))
        # the socle of P(z) is one-dimensional
        cycles = []
        for comp in _edge_components(pairs):
            i, j = comp[0]
            cycles.append((f"b{j}", f"beta{j}_{i}", f"a{i}"))
        rels.extend((cycles[0], c) for c in cycles[1:])
    return BoundQuiverAlgebra(Q, frozenset(monomials), tuple(rels), 3)


def _edge_components(pairs: list[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    """Group edges (i, j) of a bipartite graph by connected component."""
    parent: dict = {}

    def find(v):
        while parent.setdefault(v, v) != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, j in pairs:
        parent[find(("x", i))] = find(("y", j))
    groups: dict = {}
    for i, j in pairs:
        groups.setdefault(find(("x", i)), []).append((i, j))
    return [groups[k] for k in sorted(groups, key=lambda k: min(groups[k]))]


# ---------------------------------------------------------------- dimensions


def _ideal_elements(A: BoundQuiverAlgebra) -> list[dict[Path, int]]:
    """Spanning set u·rho·v of the ideal within the length bound, as sparse vectors."""
    Q = A.quiver
    by_target: dict[str, list[Path]] = defaultdict(list)
    by_source: dict[str, list[Path]] = defaultdict(list)
    for n in range(0, A.max_length + 1):
        if n == 0:
            for v in Q.vertices:
                by_target[v].append(())
                by_source[v].append(())
            continue
        for p in Q.paths_of_length(n):
            s, t = Q.path_endpoints(p)
            by_target[t].append(p)
            by_source[s].append(p)
    generators: list[dict[Path, int]] = [{m: 1} for m in A.monomials]
    generators += [{p: 1, q: -1} for p, q in A.commutativity]
    out = []
    for g in generators:
        sample = next(iter(g))
        s, t = Q.path_endpoints(sample)
        length = len(sample)
        for u in by_target[s]:
            for v in by_source[t]:
                if len(u) + length + len(v) > A.max_length:
                    continue
                out.append({u + p + v: c for p, c in g.items()})
    return out


def _rank(vectors: list[dict[Path, int]]) -> int:
    """Rank of sparse rational vectors by incremental elimination."""
    pivots: dict[Path, dict[Path, Fraction]] = {}
    rank = 0
    for vec in vectors:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        while v:
            lead = min(v)
            if lead not in pivots:
                pivots[lead] = v
                rank += 1
                break
            row = pivots[lead]
            factor = v[lead] / row[lead]
            for k, c in row.items():
                val = v.get(k, 0) - factor * c
                if val:
                    v[k] = val
                else:
                    v.pop(k, None)
    return rank


def bounded_cartan_entries(A: BoundQuiverAlgebra) -> dict[tuple[str, str], int]:
    """dim e_u A e_v for every pair, counting classes of paths u -> v (including trivial ones)."""
    Q = A.quiver
    groups: dict[tuple[str, str, int], list[Path]] = defaultdict(list)
    for p in A.paths():
        s, t = Q.path_endpoints(p)
        groups[(s, t, len(p))].append(p)
    ideal_groups: dict[tuple[str, str, int], list[dict[Path, int]]] = defaultdict(list)
    for vec in _ideal_elements(A):
        sample = next(iter(vec))
        if not sample:
            continue
        s, t = Q.path_endpoints(sample)
        ideal_groups[(s, t, len(sample))].append(vec)
    dims: dict[tuple[str, str], int] = defaultdict(int)
    for v in Q.vertices:
        dims[(v, v)] += 1
    for key, paths in groups.items():
        s, t, _ = key
        dims[(s, t)] += len(paths) - _rank(ideal_groups.get(key, []))
    return dict(dims)


def bounded_dimension(A: BoundQuiverAlgebra) -> int:
    return sum(bounded_cartan_entries(A).values())


def path_cartan(A: BoundQuiverAlgebra, order: Iterable[str]) -> tuple[tuple[int, ...], ...]:
    """Matrix with (u, v) entry dim e_u A e_v in the given vertex order."""
    entries = bounded_cartan_entries(A)
    order = list(order)
    return tuple(tuple(entries.get((u, v), 0) for v in order) for u in order)


def loewy_length_projective(A: BoundQuiverAlgebra, v: str) -> int:
    """1 + the length of the longest nonzero path starting at v (monomial algebras)."""
    if not A.is_monomial:
        raise PreconditionError("Loewy length by path length needs a monomial algebra")
    Q = A.quiver

    def nonzero(p: Path) -> bool:
        return not any(p[i:i + len(m)] == m for m in A.monomials for i in range(len(p) - len(m) + 1))

    longest = 0
    frontier: list[Path] = [(a.label,) for a in Q.outgoing(v)]
    length = 1
    while frontier and length <= A.max_length:
        frontier = [p for p in frontier if nonzero(p)]
        if frontier:
            longest = length
        frontier = [p + (a.label,) for p in frontier for a in Q.outgoing(Q.arrow(p[-1]).target)]
        length += 1
        if length > len(Q.vertices) and frontier:
            raise PreconditionError("quiver has an oriented cycle")
    return longest + 1
