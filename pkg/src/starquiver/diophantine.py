"""Solutions of kl + a + b - ak = p, ak = bl over positive integers, p in 0..4."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple

from .coxeter import reduced_coxeter_matrix
from .exact import FiniteOrder, matrix_order


class Solution(NamedTuple):
    p: int
    a: int
    k: int
    b: int
    l: int


def is_solution(p: int, a: int, k: int, b: int, l: int) -> bool:
    return k * l + a + b - a * k == p and a * k == b * l


def dual(sol: Solution) -> Solution:
    p, a, k, b, l = sol
    return Solution(p, b, l, a, k)


@dataclass(frozen=True)
class SolutionFamily:
    """A one-parameter family x -> tuple, valid for x >= 1."""

    name: str
    make: Callable[[int], Solution]

    def instantiate(self, bound: int) -> list[Solution]:
        return [self.make(x) for x in range(1, bound + 1)]


def _sols(rows: Iterable[tuple[int, ...]]) -> frozenset[Solution]:
    return frozenset(Solution(*t) for t in rows)


S1 = _sols([(2, 1, 1, 1, 1), (3, 1, 2, 2, 1), (4, 1, 2, 1, 2), (4, 1, 3, 3, 1), (4, 2, 2, 2, 2)])
S2 = _sols([(0, 6, 6, 12, 3), (0, 8, 4, 8, 4), (0, 9, 3, 9, 3), (0, 9, 6, 9, 6), (0, 12, 3, 6, 6),
            (1, 6, 5, 10, 3), (1, 8, 3, 8, 3), (1, 8, 5, 8, 5), (2, 6, 4, 8, 3), (2, 7, 3, 7, 3),
            (2, 7, 4, 7, 4), (3, 6, 3, 6, 3)])
S3 = _sols([(0, 5, 10, 25, 2), (0, 6, 6, 18, 2), (0, 8, 4, 16, 2), (0, 12, 3, 18, 2), (1, 5, 8, 20, 2),
            (1, 6, 5, 15, 2), (1, 7, 4, 14, 2), (1, 10, 3, 15, 2), (2, 5, 6, 15, 2), (2, 6, 4, 12, 2),
            (2, 8, 3, 12, 2), (3, 2, 1, 2, 1), (3, 5, 4, 10, 2), (3, 6, 3, 9, 2), (4, 2, 2, 4, 1),
            (4, 3, 1, 3, 1)])
S4 = _sols([(0, 16, 6, 8, 12), (0, 18, 4, 6, 12), (0, 18, 10, 12, 15), (0, 25, 3, 5, 15),
            (1, 14, 5, 7, 10), (1, 15, 4, 6, 10), (1, 15, 8, 10, 12), (1, 20, 3, 5, 12),
            (2, 12, 4, 6, 8), (2, 12, 6, 8, 9), (2, 15, 3, 5, 9), (3, 2, 1, 2, 1), (3, 9, 4, 6, 6),
            (3, 10, 3, 5, 6), (4, 3, 2, 3, 2), (4, 4, 1, 2, 2)])

FAMILIES = (
    SolutionFamily("(4,4,x,2x,2)", lambda x: Solution(4, 4, x, 2 * x, 2)),
    SolutionFamily("(4,x+2,2,x+2,2)", lambda x: Solution(4, x + 2, 2, x + 2, 2)),
    SolutionFamily("(4,x+2,x,x+2,x)", lambda x: Solution(4, x + 2, x, x + 2, x)),
    SolutionFamily("(4,2x,2,4,x)", lambda x: Solution(4, 2 * x, 2, 4, x)),
)

FINITE = S1 | S2 | S3 | S4


def closed_form_solutions(family_param_bound: int) -> set[Solution]:
    """Finite tables, families for 1 <= x <= bound, and all duals."""
    if family_param_bound < 1:
        raise ValueError("bound must be positive")
    out = set(FINITE)
    for fam in FAMILIES:
        out.update(fam.instantiate(family_param_bound))
    out |= {dual(s) for s in out}
    return out


def closed_form_within(bound: int) -> set[Solution]:
    """Closed-form solutions whose coordinates a, k, b, l are all <= bound."""
    return {s for s in closed_form_solutions(bound) if max(s[1:]) <= bound}


def brute_force_solutions(max_value: int) -> set[Solution]:
    """All solutions with 1 <= a, k, b, l <= max_value; ak = bl fixes b once l is chosen."""
    out = set()
    for a in range(1, max_value + 1):
        for k in range(1, max_value + 1):
            ak = a * k
            for l in range(1, max_value + 1):
                if ak % l:
                    continue
                b = ak // l
                if b > max_value:
                    continue
                p = k * l + a + b - ak
                if 0 <= p <= 4:
                    out.add(Solution(p, a, k, b, l))
    return out


def star_shape_ok(r: int, sigma1: int, s: int, sigma2: int) -> bool:
    if (r, sigma1, s, sigma2) == (1, 1, 1, 1):
        return True
    return 2 <= sigma1 <= s - 2 and 2 <= sigma2 <= r - 2


def solutions_for_star(p: int, bound: int = 60, order_filter: bool = True) -> set[tuple[int, int, int, int]]:
    """Parameters (r, sigma1, s, sigma2) = (a, k, b, l) of possible 2-RF semi-regular star algebras.

    Besides the shape bounds, ``order_filter`` keeps only parameters whose
    reduced Coxeter matrix has finite order. That matrix is the restriction of
    C^T C^{-1} to an invariant subspace, so its order divides any finite order
    of -Phi_Gamma.
    """
    if p not in (1, 2, 3, 4):
        raise ValueError("p must be in 1..4")
    out = set()
    for sol in closed_form_within(bound):
        if sol.p != p:
            continue
        params = (sol.a, sol.k, sol.b, sol.l)
        if not star_shape_ok(*params):
            continue
        if order_filter and not isinstance(reduced_order(*params), FiniteOrder):
            continue
        out.add(params)
    return out


def reduced_order(r: int, sigma1: int, s: int, sigma2: int, bound: int = 1000):
    """Order of the reduced Coxeter matrix for d_x, d_y all-ones (|d_x|^2 = r, |d_y|^2 = s)."""
    return matrix_order(reduced_coxeter_matrix(sigma1, sigma2, r, s), bound)
