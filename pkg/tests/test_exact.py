"""Exact arithmetic against sympy and numpy oracles."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import int_matrices, unimodular_upper
from starquiver.exact import (
    FiniteOrder,
    Infinite,
    IntPoly,
    PreconditionError,
    T,
    Unknown,
    char_poly,
    count_roots_greater,
    cyclotomic,
    cyclotomic_factorization,
    det,
    euler_phi,
    identity,
    inverse,
    is_cyclotomic_product,
    is_identity,
    mat_mul,
    mat_neg,
    mat_pow,
    matrix_order,
    poly_det_pencil,
    poly_gcd,
    squarefree_part,
    sturm_count_greater,
    transpose,
)

x = sympy.Symbol("x")


def sympy_poly(p: IntPoly) -> sympy.Poly:
    return sympy.Poly(list(reversed(p.coeffs)) or [0], x)


@given(int_matrices())
def test_det_matches_sympy(M):
    assert det(M) == sympy.Matrix(M).det()


@given(int_matrices())
def test_det_transpose_invariant(M):
    assert det(M) == det(transpose(M))


@given(int_matrices(n_max=4), int_matrices(n_max=4))
def test_det_multiplicative(A, B):
    assume(len(A) == len(B))
    assert det(mat_mul(A, B)) == det(A) * det(B)


def test_det_of_fractions():
    M = ((Fraction(1, 2), 1), (Fraction(1, 3), Fraction(3, 4)))
    assert det(M) == Fraction(3, 8) - Fraction(1, 3)


@given(int_matrices(n_max=4))
def test_inverse_roundtrip(M):
    assume(det(M) != 0)
    assert is_identity(mat_mul(M, inverse(M)))


def test_inverse_of_singular_raises():
    with pytest.raises(ZeroDivisionError):
        inverse(((1, 2), (2, 4)))


@given(int_matrices())
def test_char_poly_matches_sympy(M):
    ours = char_poly(M)
    theirs = sympy.Matrix(M).charpoly(x)
    assert ours.to_list() == [int(c) for c in reversed(theirs.all_coeffs())]


@given(int_matrices(n_max=4), st.integers(-5, 5))
def test_char_poly_is_det_of_pencil(M, t):
    n = len(M)
    shifted = tuple(tuple(t * int(i == j) - M[i][j] for j in range(n)) for i in range(n))
    assert char_poly(M)(t) == det(shifted)


@given(unimodular_upper())
def test_pencil_equals_char_poly_of_coxeter(C):
    phi = mat_neg(mat_mul(transpose(C), inverse(C)))
    assert poly_det_pencil(C) == char_poly(phi)


def test_pencil_requires_unimodular():
    with pytest.raises(PreconditionError):
        poly_det_pencil(((2,),))


def test_pencil_of_a2():
    # path algebra of A2: Coxeter polynomial t^2 + t + 1
    assert poly_det_pencil(((1, 1), (0, 1))).to_list() == [1, 1, 1]


# ---------------------------------------------------------------- polynomials


polys = st.lists(st.integers(-6, 6), min_size=1, max_size=7).map(IntPoly)


@given(polys, polys)
def test_poly_ring_laws(p, q):
    assert sympy_poly(p * q) == sympy_poly(p) * sympy_poly(q)
    assert sympy_poly(p + q) == sympy_poly(p) + sympy_poly(q)


@given(polys, polys)
def test_gcd_matches_sympy_up_to_sign(p, q):
    assume(not p.is_zero() and not q.is_zero())
    ours = sympy_poly(poly_gcd(p, q))
    theirs = sympy.gcd(sympy_poly(p), sympy_poly(q))
    assert sympy.Poly(ours, x).monic() == sympy.Poly(theirs, x).monic()


@given(polys)
def test_squarefree_part_matches_sympy(p):
    assume(p.degree >= 1)
    sp = sympy_poly(p)
    expected = sympy.Poly(sympy.quo(sp, sympy.gcd(sp, sp.diff(x))), x)
    assert sympy_poly(squarefree_part(p)).monic() == expected.monic()


@settings(max_examples=200)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=6), st.integers(-5, 5))
def test_sturm_counts_against_numpy(roots, a):
    p = IntPoly.from_roots(roots)
    distinct = len({r for r in roots if r > a})
    assert sturm_count_greater(p, a) == distinct
    assert count_roots_greater(p, a) == sum(1 for r in roots if r > a)


@settings(max_examples=100)
@given(polys, st.fractions(-3, 3, max_denominator=4))
def test_sturm_against_numpy_roots(p, a):
    assume(p.degree >= 1 and p(a) != 0)
    sq = squarefree_part(p)
    rts = np.roots(list(reversed([float(c) for c in sq.coeffs])))
    real = [z.real for z in rts if abs(z.imag) < 1e-7]
    # skip tight cases where floating point cannot decide
    assume(all(abs(r - float(a)) > 1e-6 for r in real))
    assert sturm_count_greater(p, a) == sum(1 for r in real if r > a)


def test_root_at_threshold_is_not_counted():
    p = IntPoly.from_roots([2, 2, 3])
    assert sturm_count_greater(p, 2) == 1
    assert count_roots_greater(p, 2) == 1
    assert count_roots_greater(IntPoly.from_roots([3, 3, 1]), 2) == 2


# ---------------------------------------------------------------- cyclotomics


@pytest.mark.parametrize("n", range(1, 40))
def test_cyclotomic_matches_sympy(n):
    assert sympy_poly(cyclotomic(n)) == sympy.Poly(sympy.cyclotomic_poly(n, x), x)
    assert cyclotomic(n).degree == euler_phi(n) == sympy.totient(n)


@given(st.lists(st.integers(1, 30), min_size=1, max_size=4))
def test_cyclotomic_factorization_recovers_product(indices):
    p = IntPoly((1,))
    for d in indices:
        p = p * cyclotomic(d)
    expected = {}
    for d in indices:
        expected[d] = expected.get(d, 0) + 1
    assert cyclotomic_factorization(p) == expected
    assert is_cyclotomic_product(p)


def test_non_cyclotomic_products():
    assert not is_cyclotomic_product(T ** 2 - 3 * T + 1)
    assert not is_cyclotomic_product(T ** 3 - T - 1)
    assert cyclotomic_factorization(T ** 2 + 1) == {4: 1}


def test_cyclotomic_factorization_rejects_non_monic():
    with pytest.raises(ValueError):
        cyclotomic_factorization(2 * T + 1)


# ---------------------------------------------------------------- orders


def brute_order(M, bound=200):
    P = M
    for k in range(1, bound + 1):
        if is_identity(P):
            return k
        P = mat_mul(P, M)
    return None


@st.composite
def finite_order_matrices(draw):
    """Conjugates of permutation and rotation blocks by unimodular matrices."""
    blocks = draw(st.lists(st.sampled_from(["r3", "r4", "r6", "neg", "one", "swap"]), min_size=1, max_size=3))
    table = {"r3": ((0, -1), (1, -1)), "r4": ((0, -1), (1, 0)), "r6": ((1, -1), (1, 0)),
             "neg": ((-1,),), "one": ((1,),), "swap": ((0, 1), (1, 0))}
    n = sum(len(table[b]) for b in blocks)
    D = [[0] * n for _ in range(n)]
    k = 0
    for b in blocks:
        B = table[b]
        for i, row in enumerate(B):
            for j, v in enumerate(row):
                D[k + i][k + j] = v
        k += len(B)
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            U[i][j] = draw(st.integers(-2, 2))
    U = tuple(map(tuple, U))
    return mat_mul(mat_mul(U, tuple(map(tuple, D))), inverse(U))


@given(finite_order_matrices())
def test_matrix_order_is_minimal(M):
    result = matrix_order(M)
    assert isinstance(result, FiniteOrder)
    assert result.k == brute_order(M)


def test_jordan_block_is_infinite():
    assert isinstance(matrix_order(((1, 1), (0, 1))), Infinite)
    assert isinstance(matrix_order(((-1, 1), (0, -1))), Infinite)


def test_non_cyclotomic_is_infinite():
    assert isinstance(matrix_order(((2, 1), (1, 1))), Infinite)


def test_order_bound_gives_unknown():
    # a block of order 7 (companion of Phi_7) beyond a bound of 5
    comp = [[0] * 6 for _ in range(6)]
    for i in range(1, 6):
        comp[i][i - 1] = 1
    for i in range(6):
        comp[i][5] = -1
    M = tuple(map(tuple, comp))
    assert matrix_order(M).k == 7
    assert isinstance(matrix_order(M, bound=5), Unknown)


def test_identity_order():
    assert matrix_order(identity(3)) == FiniteOrder(1)
    assert matrix_order(mat_pow(((0, -1), (1, 0)), 2)).k == 2
