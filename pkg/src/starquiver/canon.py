"""Canonical forms, automorphism search and orderly enumeration of biregular graphs."""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import BipartiteGraph


class CapacityError(ValueError):
    pass


# ---------------------------------------------------------------- canonical form


def _row_string(row: tuple[int, ...], cells: list[list[int]]) -> tuple[int, ...]:
    out: list[int] = []
    for cell in cells:
        ones = sum(row[c] for c in cell)
        out.extend([0] * (len(cell) - ones))
        out.extend([1] * ones)
    return tuple(out)


def _refine(row: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    out = []
    for cell in cells:
        zeros = [c for c in cell if not row[c]]
        ones = [c for c in cell if row[c]]
        out.extend(part for part in (zeros, ones) if part)
    return out


def canonical_matrix(G: BipartiteGraph) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least R (rows concatenated) over row and column permutations.

    Colour classes are kept in place. Rows are fixed one at a time: every
    remaining row is scored by the smallest string it can show under the
    current ordered column partition, and all minimisers are explored.
    """
    if not G.is_simple:
        raise ValueError("canonical form is implemented for simple graphs")
    R = G.R
    best: list[tuple[int, ...]] | None = None

    def search(prefix: list[tuple[int, ...]], remaining: list[int], cells: list[list[int]]):
        nonlocal best
        depth = len(prefix)
        if not remaining:
            if best is None or prefix < best:
                best = list(prefix)
            return
        scored: dict[tuple[int, ...], list[int]] = {}
        for i in remaining:
            scored.setdefault(_row_string(R[i], cells), []).append(i)
        low = min(scored)
        if best is not None:
            # every completion of this branch starts with prefix + low
            if prefix + [low] > best[: depth + 1]:
                return
        tried: set[tuple[int, ...]] = set()
        for i in scored[low]:
            if R[i] in tried:
                continue  # identical rows give identical subtrees
            tried.add(R[i])
            rest = [k for k in remaining if k != i]
            search(prefix + [low], rest, _refine(R[i], cells))

    search([], list(range(G.r)), [list(range(G.s))])
    assert best is not None
    return tuple(best)


def canonical_form(G: BipartiteGraph) -> BipartiteGraph:
    return BipartiteGraph(G.r, G.s, canonical_matrix(G))


def is_isomorphic(G: BipartiteGraph, H: BipartiteGraph, allow_swap: bool = True) -> bool:
    """Isomorphism of coloured graphs, optionally also allowing X and Y to be exchanged."""
    if (G.r, G.s) == (H.r, H.s) and canonical_matrix(G) == canonical_matrix(H):
        return True
    if allow_swap and (G.r, G.s) == (H.s, H.r):
        return canonical_matrix(G.transpose()) == canonical_matrix(H)
    return False


# ---------------------------------------------------------------- automorphisms


def _distance_profiles(G: BipartiteGraph) -> list[tuple[int, ...]]:
    n = G.r + G.s
    nbrs = [G.neighbours(v) for v in range(n)]
    profiles = []
    for v in range(n):
        dist = {v: 0}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        counts = [0] * (n + 1)
        for d in dist.values():
            counts[d] += 1
        profiles.append(tuple(counts))
    return profiles


@dataclass
class _AutSearch:
    G: BipartiteGraph

    def __post_init__(self):
        G = self.G
        self.n = G.r + G.s
        self.nbrs = [set(G.neighbours(v)) for v in range(self.n)]
        self.colour = [0] * G.r + [1] * G.s
        self.invariant = [(len(self.nbrs[v]), prof) for v, prof in enumerate(_distance_profiles(G))]

    def _order_from(self, roots: list[int]) -> list[int]:
        order, seen = [], set()
        pending = list(roots) + list(range(self.n))
        for root in pending:
            if root in seen:
                continue
            seen.add(root)
            queue = deque([root])
            while queue:
                v = queue.popleft()
                order.append(v)
                for w in sorted(self.nbrs[v]):
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
        return order

    def find(self, fixed: dict[int, int], swap: bool) -> dict[int, int] | None:
        """An automorphism extending ``fixed``; colours are exchanged iff ``swap``."""
        for v, u in fixed.items():
            if self.invariant[v] != self.invariant[u] or (self.colour[v] ^ swap) != self.colour[u]:
                return None
        order = self._order_from(list(fixed))
        mapping = dict(fixed)
        used = set(fixed.values())
        for v, u in fixed.items():
            for w, x in fixed.items():
                if (w in self.nbrs[v]) != (x in self.nbrs[u]):
                    return None
        todo = [v for v in order if v not in fixed]

        def consistent(v: int, u: int) -> bool:
            for w in self.nbrs[v]:
                if w in mapping and mapping[w] not in self.nbrs[u]:
                    return False
            # non-edges must also be preserved
            mapped_nbrs = sum(1 for w in self.nbrs[v] if w in mapping)
            image_nbrs = sum(1 for x in self.nbrs[u] if x in used)
            return mapped_nbrs == image_nbrs

        def extend(k: int) -> bool:
            if k == len(todo):
                return True
            v = todo[k]
            anchor = next((w for w in self.nbrs[v] if w in mapping), None)
            if anchor is not None:
                candidates = sorted(self.nbrs[mapping[anchor]] - used)
            else:
                candidates = [u for u in range(self.n) if u not in used]
            for u in candidates:
                if self.invariant[u] != self.invariant[v] or (self.colour[v] ^ swap) != self.colour[u]:
                    continue
                if not consistent(v, u):
                    continue
                mapping[v] = u
                used.add(u)
                if extend(k + 1):
                    return True
                del mapping[v]
                used.discard(u)
            return False

        return dict(mapping) if extend(0) else None


def automorphism_mapping_edge(G: BipartiteGraph, e0: tuple[int, int], e1: tuple[int, int]) -> dict[int, int] | None:
    """An automorphism (vertex map on the combined 0-based order) sending edge e0 to e1.

    Edges are 0-based (i, j) pairs with i in X and j in Y.
    """
    search = _AutSearch(G)
    x0, y0 = e0[0], G.r + e0[1]
    x1, y1 = e1[0], G.r + e1[1]
    found = search.find({x0: x1, y0: y1}, swap=False)
    if found is None and G.r == G.s:
        found = search.find({x0: y1, y0: x1}, swap=True)
    return found


def is_edge_transitive(G: BipartiteGraph, limit: int = 32) -> bool:
    if not G.is_simple:
        raise ValueError("edge transitivity is implemented for simple graphs")
    if G.r + G.s > limit:
        raise CapacityError(f"graph has {G.r + G.s} vertices, limit is {limit}")
    edges = [(i - 1, j - 1) for i, j in G.edges()]
    if len(edges) <= 1:
        return True
    search = _AutSearch(G)
    gens: list[dict[int, int]] = []
    e0 = edges[0]
    orbit = {e0}

    def image(e, sigma):
        a, b = sigma[e[0]], sigma[G.r + e[1]]
        if a >= G.r:
            a, b = b, a
        return (a, b - G.r)

    def close():
        frontier = list(orbit)
        while frontier:
            e = frontier.pop()
            for sigma in gens:
                f = image(e, sigma)
                if f not in orbit:
                    orbit.add(f)
                    frontier.append(f)

    for e in edges[1:]:
        if e in orbit:
            continue
        x0, y0 = e0[0], G.r + e0[1]
        sigma = search.find({x0: e[0], y0: G.r + e[1]}, swap=False)
        if sigma is None and G.r == G.s:
            sigma = search.find({x0: G.r + e[1], y0: e[0]}, swap=True)
        if sigma is None:
            return False
        gens.append(sigma)
        close()
        orbit.add(e)
    return True


# ---------------------------------------------------------------- enumeration


@dataclass(frozen=True)
class EnumerationOptions:
    distinct_neighbourhoods: bool = False
    connected: bool = True
    max_vertices: int = 20
    workers: int | None = None


def _masks(s: int, k: int) -> list[int]:
    out = []
    for combo in combinations(range(s), k):
        out.append(sum(1 << (s - 1 - c) for c in combo))  # column 0 is the most significant bit
    return sorted(out)


def _mask_to_row(mask: int, s: int) -> tuple[int, ...]:
    return tuple((mask >> (s - 1 - c)) & 1 for c in range(s))


def _search_branch(r: int, k: int, s: int, l: int, distinct: bool, connected: bool,
                   second: int | None) -> set[tuple[tuple[int, ...], ...]]:
    """Fill rows in double-lex order: rows and columns both lexicographically nondecreasing.

    Every 0/1 matrix can be brought to this form by row and column permutations,
    and the form forces the first row to be the least k-subset.
    """
    masks = _masks(s, k)
    pair_mask = (1 << (s - 1)) - 1  # bit s-2-c stands for the column pair (c, c+1)
    counts = [0] * s
    rows: list[int] = []
    out: set[tuple[tuple[int, ...], ...]] = set()

    def fits(mask: int, placed_after: int) -> bool:
        left = r - placed_after
        for c in range(s):
            total = counts[c] + ((mask >> (s - 1 - c)) & 1)
            if total > l or l - total > left:
                return False
        return True

    def push(m: int, sign: int):
        for c in range(s):
            counts[c] += sign * ((m >> (s - 1 - c)) & 1)
        if sign > 0:
            rows.append(m)
        else:
            rows.pop()

    def leaf(equal_pairs: int):
        if distinct and equal_pairs:
            return
        R = tuple(_mask_to_row(m, s) for m in rows)
        G = BipartiteGraph(r, s, R)
        if connected and not G.is_connected():
            return
        out.add(canonical_matrix(G))

    def allowed(m: int, idx: int, equal_pairs: int) -> bool:
        # column c may not overtake column c+1 while their prefixes agree
        return not ((m >> 1) & ~m & equal_pairs) and fits(m, len(rows) + 1)

    def extend(start: int, equal_pairs: int):
        if len(rows) == r:
            leaf(equal_pairs)
            return
        for idx in range(start, len(masks)):
            m = masks[idx]
            if not allowed(m, idx, equal_pairs):
                continue
            push(m, 1)
            extend(idx + 1 if distinct else idx, equal_pairs & ~(~(m >> 1) & m))
            push(m, -1)

    if second is None:
        extend(0, pair_mask)
        return out
    # a parallel branch fixes the first two rows
    first = masks[0]
    if not allowed(first, 0, pair_mask):
        return out
    push(first, 1)
    eq = pair_mask & ~(~(first >> 1) & first)
    idx = masks.index(second)
    if r >= 2 and (idx > 0 or not distinct) and allowed(second, idx, eq):
        push(second, 1)
        extend(idx + 1 if distinct else idx, eq & ~(~(second >> 1) & second))
    return out


def _branch_task(args):
    return _search_branch(*args)


def default_workers() -> int:
    value = os.environ.get("STARQUIVER_WORKERS")
    return max(1, int(value)) if value else 1


def enumerate_biregular(r: int, sigma1: int, s: int, sigma2: int,
                        opts: EnumerationOptions = EnumerationOptions()) -> Iterator[BipartiteGraph]:
    """Simple bipartite graphs of bidegree (sigma1, sigma2), one per colour-preserving isomorphism class.

    Results are canonical forms yielded in increasing canonical order.
    """
    if r * sigma1 != s * sigma2:
        raise ValueError("r*sigma1 must equal s*sigma2")
    if not (0 <= sigma1 <= s and 0 <= sigma2 <= r):
        raise ValueError("degrees exceed the opposite colour class")
    if r + s > opts.max_vertices:
        raise CapacityError(f"{r + s} vertices exceeds the limit {opts.max_vertices}")
    distinct = opts.distinct_neighbourhoods
    workers = opts.workers or default_workers()
    if r == 1 or workers == 1:
        found = _search_branch(r, sigma1, s, sigma2, distinct, opts.connected, None)
    else:
        tasks = [(r, sigma1, s, sigma2, distinct, opts.connected, m) for m in _masks(s, sigma1)]
        found = set()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_branch_task, tasks):
                found |= part
    for R in sorted(found):
        yield BipartiteGraph(r, s, R)
