"""Shared hypothesis strategies and random graph generators."""

from __future__ import annotations

import random

import networkx as nx
from hypothesis import strategies as st

from starquiver.graph import BipartiteGraph


def int_matrices(n_min=1, n_max=5, lo=-4, hi=4):
    return st.integers(n_min, n_max).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    ).map(lambda rows: tuple(map(tuple, rows)))


@st.composite
def bipartite_graphs(draw, r_max=5, s_max=5, simple=True):
    r = draw(st.integers(1, r_max))
    s = draw(st.integers(1, s_max))
    entry = st.integers(0, 1) if simple else st.integers(0, 2)
    rows = draw(st.lists(st.lists(entry, min_size=s, max_size=s), min_size=r, max_size=r))
    return BipartiteGraph(r, s, tuple(map(tuple, rows)))


@st.composite
def unimodular_upper(draw, n_max=5):
    """Upper unitriangular integer matrices: Cartan matrices of directed algebras."""
    n = draw(st.integers(1, n_max))
    C = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            C[i][j] = draw(st.integers(0, 3))
    return tuple(map(tuple, C))


def random_semiregular(rng: random.Random, max_side: int = 10) -> BipartiteGraph:
    """Random simple bipartite graph with constant degrees on each side.

    Rows take consecutive runs of sigma1 columns cyclically, which loads every
    column exactly sigma2 times; degree-preserving swaps then scramble it.
    """
    while True:
        r = rng.randint(1, max_side)
        s = rng.randint(1, max_side)
        sigma1 = rng.randint(1, s)
        if (r * sigma1) % s == 0:
            sigma2 = r * sigma1 // s
            if 1 <= sigma2 <= r:
                break
    R = [[0] * s for _ in range(r)]
    col_load = [0] * s
    order = list(range(s))
    for i in range(r):
        start = (i * sigma1) % s
        for t in range(sigma1):
            j = (start + t) % s
            R[i][j] = 1
            col_load[j] += 1
    assert all(c == sigma2 for c in col_load)
    rng.shuffle(order)
    R = [[row[order[j]] for j in range(s)] for row in R]
    for _ in range(4 * r * s):
        i1, i2 = rng.randrange(r), rng.randrange(r)
        j1, j2 = rng.randrange(s), rng.randrange(s)
        if R[i1][j1] and R[i2][j2] and not R[i1][j2] and not R[i2][j1]:
            R[i1][j1] = R[i2][j2] = 0
            R[i1][j2] = R[i2][j1] = 1
    return BipartiteGraph(r, s, tuple(map(tuple, R)))


def random_connected(rng: random.Random, max_vertices: int = 12) -> BipartiteGraph:
    while True:
        n = rng.randint(2, max_vertices)
        r = rng.randint(1, n - 1)
        s = n - r
        density = rng.uniform(0.2, 0.9)
        R = tuple(tuple(int(rng.random() < density) for _ in range(s)) for _ in range(r))
        G = BipartiteGraph(r, s, R)
        if G.is_connected():
            return G


def to_networkx(G: BipartiteGraph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from((("x", i) for i in range(G.r)), colour=0)
    H.add_nodes_from((("y", j) for j in range(G.s)), colour=1)
    for i, row in enumerate(G.R):
        for j, m in enumerate(row):
            if m:
                H.add_edge(("x", i), ("y", j))
    return H


# ---------------------------------------------------------------- acceptance log

ACCEPTANCE_LINES: dict[int, str] = {}


def record_criterion(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
