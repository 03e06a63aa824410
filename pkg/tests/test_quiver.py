"""Star algebras, bound quiver algebras and their dimensions."""

from __future__ import annotations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from starquiver.canon import is_isomorphic
from starquiver.catalog import STAR_NAMES, star_fixture
from starquiver.coxeter import condition_battery, gamma_cartan
from starquiver.exact import PreconditionError
from starquiver.graph import bipartite_complement
from starquiver.quiver import (
    Arrow,
    BoundQuiverAlgebra,
    Quiver,
    StarAlgebra,
    b_lambda,
    b_lambda_quiver,
    bounded_dimension,
    compute_levels,
    gamma_lambda,
    is_2rf_shape,
    is_balanced,
    koszul_dual_star,
    loewy_length_projective,
    path_cartan,
    star_bound_algebra,
    star_quiver,
    trivial_extension,
    zero_sets,
)


@st.composite
def star_algebras(draw, r_max=5, s_max=5):
    r = draw(st.integers(1, r_max))
    s = draw(st.integers(1, s_max))
    pairs = [(i, j) for i in range(1, r + 1) for j in range(1, s + 1)]
    rels = draw(st.sets(st.sampled_from(pairs)))
    return StarAlgebra(r, s, frozenset(rels))


@st.composite
def balanced_star_algebras(draw, r_max=4, s_max=4):
    r = draw(st.integers(2, r_max))
    s = draw(st.integers(2, s_max))
    rows = []
    for _ in range(r):
        zeros = draw(st.sets(st.integers(1, s), min_size=1, max_size=s - 1))
        rows.append(zeros)
    L = StarAlgebra(r, s, frozenset((i + 1, j) for i, z in enumerate(rows) for j in z))
    assume(is_balanced(L))
    return L


def test_star_quiver_shape_and_levels():
    Q = star_quiver(3, 2)
    assert len(Q.vertices) == 6 and len(Q.arrows) == 5
    levels = compute_levels(Q)
    assert levels["z"] == 1
    assert all(levels[f"x{i}"] == 2 for i in (1, 2, 3))
    assert all(levels[f"y{j}"] == 0 for j in (1, 2))


def test_levels_fail_on_unbalanced_cycle():
    Q = Quiver(("u", "v", "w"), (Arrow("u", "v", "p"), Arrow("v", "w", "q"), Arrow("u", "w", "r")))
    assert compute_levels(Q) is None
    with pytest.raises(ValueError):
        compute_levels(Quiver(("u", "v"), ()))


@given(star_algebras())
def test_lambda_dimension_counts_paths(L):
    # trivial paths, arrows, and the surviving paths a_i b_j
    expected = (L.r + L.s + 1) + L.r + L.s + len(L.nonzero_pairs())
    assert bounded_dimension(star_bound_algebra(L)) == expected


@given(star_algebras())
def test_loewy_lengths_of_projectives(L):
    A = star_bound_algebra(L)
    for i in range(1, L.r + 1):
        alive = any(p[0] == i for p in L.nonzero_pairs())
        assert loewy_length_projective(A, f"x{i}") == (3 if alive else 2)
    assert loewy_length_projective(A, "z") == 2
    assert all(loewy_length_projective(A, f"y{j}") == 1 for j in range(1, L.s + 1))


@given(star_algebras())
def test_koszul_dual_is_involution(L):
    D = koszul_dual_star(L)
    assert (D.r, D.s) == (L.s, L.r)
    assert koszul_dual_star(D) == L
    assert b_lambda(D) == bipartite_complement(b_lambda(L)).transpose()


@given(star_algebras())
def test_zero_sets_and_balance(L):
    zx, zy = zero_sets(L)
    assert sum(map(len, zx)) == sum(map(len, zy)) == len(L.relations)
    balanced = all(0 < len(z) < L.s for z in zx) and all(0 < len(z) < L.r for z in zy)
    assert is_balanced(L) == balanced
    if is_2rf_shape(L) and (L.r, L.s) != (1, 1):
        assert balanced


@settings(max_examples=40, deadline=None)
@given(balanced_star_algebras())
def test_trivial_extension_doubles_dimension(L):
    assert bounded_dimension(trivial_extension(L)) == 2 * bounded_dimension(star_bound_algebra(L))


@settings(max_examples=40, deadline=None)
@given(balanced_star_algebras())
def test_gamma_block_cartan_equals_path_count(L):
    G = gamma_lambda(L)
    order = ["z"] + [f"y{j}" for j in range(1, L.s + 1)] + [f"x{i}" for i in range(1, L.r + 1)]
    assert path_cartan(G, order) == gamma_cartan(L)


def test_trivial_extension_with_disconnected_b_graph():
    # B_Lambda is two disjoint edges; the cycles at z from both must coincide
    L = StarAlgebra(2, 2, frozenset({(1, 1), (2, 2)}))
    assert bounded_dimension(trivial_extension(L, complete=False)) == 23
    T = trivial_extension(L)
    assert len(T.commutativity) == 1
    assert bounded_dimension(T) == 2 * bounded_dimension(star_bound_algebra(L)) == 22


@settings(max_examples=40, deadline=None)
@given(balanced_star_algebras())
def test_trivial_extension_cartan_is_symmetrised(L):
    # e_u T e_v = e_u Lambda e_v + D(e_v Lambda e_u)
    T = trivial_extension(L)
    order = list(T.quiver.vertices)
    C = path_cartan(star_bound_algebra(L), order)
    CT = path_cartan(T, order)
    n = len(order)
    assert CT == tuple(tuple(C[a][b] + C[b][a] for b in range(n)) for a in range(n))


@pytest.mark.parametrize("name", [n for n in STAR_NAMES if n != "a3"])
def test_fixture_presentations_agree(name):
    L = star_fixture(name)
    short, full = trivial_extension(L, complete=False), trivial_extension(L)
    order = list(full.quiver.vertices)
    assert path_cartan(short, order) == path_cartan(full, order)
    assert len(full.quiver.arrows) == L.r + L.s + len(L.nonzero_pairs())


def test_gamma_requires_balanced():
    with pytest.raises(PreconditionError):
        gamma_lambda(StarAlgebra(2, 2))
    with pytest.raises(PreconditionError):
        trivial_extension(StarAlgebra(2, 2))


def test_gamma_of_c8_quiver():
    L = star_fixture("c8")
    G = gamma_lambda(L)
    arrows_from_z = [a for a in G.quiver.arrows if a.source == "z"]
    assert len(arrows_from_z) == 4
    assert len(b_lambda_quiver(L).arrows) == 8
    assert len(G.commutativity) == 4  # one square per x_i of degree two
    assert bounded_dimension(G) == 25
    levels = compute_levels(G.quiver)
    assert levels["z"] == 2 and levels["y1"] == 1 and levels["x1"] == 0


def test_commutativity_requires_parallel_paths():
    Q = Quiver(("u", "v", "w"), (Arrow("u", "v", "p"), Arrow("v", "w", "q")))
    with pytest.raises(ValueError):
        BoundQuiverAlgebra(Q, frozenset(), ((("p",), ("q",)),), 2)


@pytest.mark.parametrize("name", [n for n in STAR_NAMES if n != "a3"])
def test_koszul_dual_has_same_verdict(name):
    L = star_fixture(name)
    D = koszul_dual_star(L)
    assert condition_battery(D).overall == condition_battery(L).overall == "candidate"


def test_a3_dual_has_no_relations():
    D = koszul_dual_star(star_fixture("a3"))
    assert D.relations == frozenset()
    assert condition_battery(D).overall == "excluded"


def test_fixture_duals_match_complement_fixtures():
    for name in ("heawood", "g9p730", "g9p731"):
        dual = b_lambda(koszul_dual_star(star_fixture(name)))
        assert is_isomorphic(dual, b_lambda(star_fixture(name + "-c")))
