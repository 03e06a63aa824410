"""The Diophantine system kl + a + b - ak = p, ak = bl."""

from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from starquiver.coxeter import p_value
from starquiver.diophantine import (
    FAMILIES,
    FINITE,
    Solution,
    brute_force_solutions,
    closed_form_solutions,
    closed_form_within,
    dual,
    is_solution,
    reduced_order,
    solutions_for_star,
    star_shape_ok,
)
from starquiver.exact import FiniteOrder


def naive(bound):
    return {Solution(k * l + a + b - a * k, a, k, b, l)
            for a, k, b, l in product(range(1, bound + 1), repeat=4)
            if a * k == b * l and 0 <= k * l + a + b - a * k <= 4}


def test_brute_force_matches_naive_loop():
    assert brute_force_solutions(14) == naive(14)


@pytest.mark.parametrize("bound", [5, 12, 30, 60])
def test_closed_form_equals_brute_force(bound):
    assert closed_form_within(bound) == brute_force_solutions(bound)


def test_every_table_entry_is_a_solution():
    for sol in FINITE:
        assert is_solution(*sol)
        assert is_solution(*dual(sol))


@given(st.integers(1, 200))
def test_families_are_solutions(x):
    for fam in FAMILIES:
        assert is_solution(*fam.make(x))
        assert fam.make(x).p == 4


@given(st.integers(1, 30))
def test_closed_form_is_closed_under_duality(bound):
    sols = closed_form_solutions(bound)
    assert {dual(s) for s in sols} == sols


def test_p_value_agrees_with_first_equation():
    for sol in brute_force_solutions(20):
        assert p_value(sol.a, sol.k, sol.b, sol.l) == sol.p


def test_star_shape():
    assert star_shape_ok(1, 1, 1, 1)
    assert star_shape_ok(7, 3, 7, 3)
    assert not star_shape_ok(3, 1, 3, 1)
    assert not star_shape_ok(4, 3, 4, 3)


def test_star_solutions_per_p():
    assert solutions_for_star(4) == {(4, 2, 4, 2)}
    two = solutions_for_star(2)
    assert {(1, 1, 1, 1), (7, 3, 7, 3), (7, 4, 7, 4)} <= two
    assert {(8, 3, 8, 3), (8, 5, 8, 5)} <= solutions_for_star(1)
    assert {(6, 3, 9, 2), (9, 2, 6, 3), (5, 4, 10, 2), (10, 2, 5, 4)} <= solutions_for_star(3)


def test_order_filter_removes_infinite_families():
    unfiltered = solutions_for_star(4, order_filter=False)
    assert (5, 2, 5, 2) in unfiltered and (4, 2, 4, 2) in unfiltered
    assert solutions_for_star(4) == {(4, 2, 4, 2)}


@pytest.mark.parametrize("p,order", [(1, 6), (2, 4), (3, 3)])
def test_reduced_order_matches_table(p, order):
    for params in solutions_for_star(p, bound=30):
        if params != (1, 1, 1, 1):
            assert reduced_order(*params) == FiniteOrder(order)


def test_bad_arguments():
    with pytest.raises(ValueError):
        solutions_for_star(0)
    with pytest.raises(ValueError):
        closed_form_solutions(0)
