"""Cartan and Coxeter data, the w/p factorisation, and the necessary-condition battery."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .exact import (
    FiniteOrder,
    Infinite,
    IntPoly,
    Matrix,
    OrderResult,
    PreconditionError,
    Unknown,
    char_poly,
    det,
    integral,
    inverse,
    is_cyclotomic_product,
    mat_mul,
    mat_neg,
    matrix_order,
    poly_det_pencil,
    transpose,
)
from .graph import (
    BipartiteGraph,
    adjacency_char_poly,
    bidegree,
    check_bi_eigen,
    has_duplicate_neighborhoods,
    is_reflexive,
)
from .quiver import StarAlgebra, b_lambda, is_2rf_shape

ORDER_TABLE = {0: None, 1: 6, 2: 4, 3: 3}  # p -> order of -Phi; p = 0 gives infinite order


# ---------------------------------------------------------------- Cartan matrices


def cartan_of_bipartite_path_algebra(G: BipartiteGraph) -> Matrix:
    n = G.r + G.s
    C = [[int(i == j) for j in range(n)] for i in range(n)]
    for i, row in enumerate(G.R):
        for j, m in enumerate(row):
            C[i][G.r + j] = m
    return tuple(map(tuple, C))


def cartan_of_gamma(G: BipartiteGraph, d_x: Sequence[int], d_y: Sequence[int]) -> Matrix:
    if len(d_x) != G.r or len(d_y) != G.s:
        raise ValueError("vector lengths must match the colour classes")
    top = (1,) + tuple(int(x) for x in d_x) + tuple(int(y) for y in d_y)
    rest = tuple((0,) + row for row in cartan_of_bipartite_path_algebra(G))
    return (top,) + rest


def cartan_of_star(L: StarAlgebra) -> Matrix:
    """Order x_1..x_r, z, y_1..y_s; entry (u, v) counts nonzero paths u -> v."""
    G = b_lambda(L)
    r, s = L.r, L.s
    n = r + s + 1
    C = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(r):
        C[i][r] = 1
        for j in range(s):
            C[i][r + 1 + j] = G.R[i][j]
    for j in range(s):
        C[r][r + 1 + j] = 1
    return tuple(map(tuple, C))


def gamma_cartan(L: StarAlgebra) -> Matrix:
    """Cartan matrix of Gamma_Lambda in the order z, y_1..y_s, x_1..x_r.

    Arrows run z -> y_j -> x_i, so this is the block formula applied to the
    transposed B-graph with all-ones dimension vectors.
    """
    B = b_lambda(L).transpose()
    return cartan_of_gamma(B, [1] * B.r, [1] * B.s)


def coxeter_matrix(C: Matrix) -> Matrix:
    """Phi = -C^T C^{-1}."""
    return mat_neg(mat_mul(transpose(C), inverse(C)))


def coxeter_polynomial(C: Matrix) -> IntPoly:
    return poly_det_pencil(C)


def neg_coxeter_order(C: Matrix, bound: int = 1000) -> OrderResult:
    if det(C) != 1:
        raise PreconditionError("det(C) must equal 1")
    return matrix_order(integral(mat_mul(transpose(C), inverse(C))), bound)


# ---------------------------------------------------------------- w, p, q


def w_poly(sigma_product: int) -> IntPoly:
    """(t + 1)^2 - t * sigma_product."""
    if sigma_product < 0:
        raise ValueError("sigma1*sigma2 must be nonnegative")
    return IntPoly((1, -(sigma_product - 2), 1))


def p_poly(sigma1, sigma2, dx2: int, dy2: int) -> tuple[IntPoly, IntPoly]:
    """(p, q) with p = (t + 1) q and q = t^2 - (s1 s2 + |dx|^2 + |dy|^2 - |dx|^2 s1 - 2) t + 1."""
    s1, s2 = Fraction(sigma1), Fraction(sigma2)
    if s1 * dx2 != s2 * dy2:
        raise PreconditionError("requires sigma1 |d_x|^2 == sigma2 |d_y|^2")
    inner = s1 * s2 + dx2 + dy2 - dx2 * s1 - 2
    if inner.denominator != 1:
        raise PreconditionError("middle coefficient of q is not an integer")
    q = IntPoly((1, -int(inner), 1))
    return IntPoly((1, 1)) * q, q


def p_value(r: int, sigma1: int, s: int, sigma2: int) -> int:
    """sigma1 sigma2 + r + s - r sigma1, the value with q = t^2 - (p - 2) t + 1."""
    return sigma1 * sigma2 + r + s - r * sigma1


@dataclass(frozen=True)
class Factorization:
    w: IntPoly
    p: IntPoly
    q: IntPoly
    cp_kq: IntPoly
    cp_gamma: IntPoly
    identity_holds: bool
    w_divides_kq: bool

    @property
    def ok(self) -> bool:
        return self.identity_holds and self.w_divides_kq


def factorization(G: BipartiteGraph, d_x: Sequence[int], d_y: Sequence[int]) -> Factorization:
    pair = check_bi_eigen(G, d_x, d_y)
    if pair is None:
        raise PreconditionError("(d_x, d_y) is not a bi-eigenvector")
    sigma_product = pair.sigma1 * pair.sigma2
    if sigma_product.denominator != 1:
        raise PreconditionError("sigma1*sigma2 must be an integer")
    dx2 = sum(int(x) ** 2 for x in d_x)
    dy2 = sum(int(y) ** 2 for y in d_y)
    w = w_poly(int(sigma_product))
    p, q = p_poly(pair.sigma1, pair.sigma2, dx2, dy2)
    cp_kq = coxeter_polynomial(cartan_of_bipartite_path_algebra(G))
    cp_gamma = coxeter_polynomial(cartan_of_gamma(G, d_x, d_y))
    return Factorization(w, p, q, cp_kq, cp_gamma, w * cp_gamma == cp_kq * p, w.divides(cp_kq))


def verify_factorization(G: BipartiteGraph, d_x: Sequence[int], d_y: Sequence[int]) -> bool:
    return factorization(G, d_x, d_y).ok


def eigen_correspondence_identity(G: BipartiteGraph) -> bool:
    """z^{r+s} h((z+1)^2 / z) == CP_KQ(z)^2 where CP_A(t)^2 = h(t^2)."""
    cp_a = adjacency_char_poly(G)
    sq = cp_a * cp_a
    if sq.parity() != 0:
        raise ArithmeticError("adjacency characteristic polynomial has mixed parity")
    h = sq.coeffs[::2]
    n = G.r + G.s
    if len(h) - 1 != n:
        raise ArithmeticError("unexpected degree")
    zp1sq = IntPoly((1, 2, 1))
    lhs = IntPoly()
    for k, c in enumerate(h):
        if c:
            lhs = lhs + IntPoly.monomial(n - k, c) * zp1sq ** k
    cp_kq = coxeter_polynomial(cartan_of_bipartite_path_algebra(G))
    return lhs == cp_kq * cp_kq


# ---------------------------------------------------------------- surds


def _squarefree_split(n: int) -> tuple[int, int]:
    """(k, d) with n = k^2 d and d squarefree (sign kept in d)."""
    if n == 0:
        return 0, 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    k, d, f = 1, 1, 2
    while f * f <= n:
        while n % (f * f) == 0:
            n //= f * f
            k *= f
        if n % f == 0:
            n //= f
            d *= f
        f += 1
    return k, sign * d * n


@dataclass(frozen=True)
class Surd:
    """a + b sqrt(D) with rational a, b and squarefree integer D (D = 0 means rational)."""

    a: Fraction
    b: Fraction = Fraction(0)
    D: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.D in (0, 1):
            object.__setattr__(self, "a", self.a + (self.b if self.D == 1 else 0))
            object.__setattr__(self, "b", Fraction(0))
            object.__setattr__(self, "D", 0)
        elif self.b == 0:
            object.__setattr__(self, "D", 0)

    @classmethod
    def sqrt(cls, x) -> "Surd":
        x = Fraction(x)
        k, d = _squarefree_split(x.numerator * x.denominator)
        return cls(Fraction(0), Fraction(k, x.denominator), d)

    def _common(self, other: "Surd") -> int:
        if self.D and other.D and self.D != other.D:
            raise ValueError("surds with different radicands")
        return self.D or other.D

    def __add__(self, other) -> "Surd":
        other = other if isinstance(other, Surd) else Surd(other)
        return Surd(self.a + other.a, self.b + other.b, self._common(other))

    def __neg__(self) -> "Surd":
        return Surd(-self.a, -self.b, self.D)

    def __sub__(self, other) -> "Surd":
        return self + (-(other if isinstance(other, Surd) else Surd(other)))

    def __mul__(self, other) -> "Surd":
        other = other if isinstance(other, Surd) else Surd(other)
        D = self._common(other)
        return Surd(self.a * other.a + self.b * other.b * D, self.a * other.b + self.b * other.a, D)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = other if isinstance(other, Surd) else Surd(other)
        return (self.a, self.b, self.D) == (other.a, other.b, other.D)

    def __hash__(self):
        return hash((self.a, self.b, self.D))

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.D})" if self.a else f"{self.b}*sqrt({self.D})"


def f_plus_minus(lam_squared) -> tuple[Surd, Surd]:
    """f+-(lambda) = ((lambda^2 - 2) +- lambda sqrt(lambda^2 - 4)) / 2, given lambda^2 (lambda >= 0)."""
    n = Fraction(lam_squared)
    root = Surd.sqrt(n * (n - 4))  # lambda * sqrt(lambda^2 - 4) for lambda >= 0
    half = Fraction(1, 2)
    base = Surd((n - 2) * half)
    return base + root * half, base - root * half


# ---------------------------------------------------------------- reports and battery


@dataclass(frozen=True)
class CoxeterReport:
    cartan: Matrix
    coxeter: Matrix
    coxeter_poly: IntPoly
    w: IntPoly
    p: IntPoly
    q: IntPoly
    neg_phi_order: OrderResult
    cyclotomic: bool

    def to_json(self) -> dict:
        return {
            "cartan": [list(r) for r in self.cartan],
            "coxeter": [list(r) for r in self.coxeter],
            "coxeter_poly": self.coxeter_poly.to_list(),
            "w": self.w.to_list(),
            "p": self.p.to_list(),
            "q": self.q.to_list(),
            "neg_phi_order": order_to_json(self.neg_phi_order),
            "cyclotomic": self.cyclotomic,
        }


def order_to_json(order: OrderResult) -> Any:
    if isinstance(order, FiniteOrder):
        return order.k
    if isinstance(order, Infinite):
        return "infinite"
    return f"unknown(>{order.bound})"


def gamma_report(L: StarAlgebra, order_bound: int = 1000) -> CoxeterReport:
    """Coxeter data of Gamma_Lambda from the block formula; B_Lambda must be semi-regular."""
    C = gamma_cartan(L)
    deg = bidegree(b_lambda(L))
    if deg is None:
        raise PreconditionError("B_Lambda is not semi-regular")
    cp = coxeter_polynomial(C)
    p, q = p_poly(deg.sigma1, deg.sigma2, L.r, L.s)
    return CoxeterReport(
        cartan=C,
        coxeter=integral(coxeter_matrix(C)),
        coxeter_poly=cp,
        w=w_poly(deg.sigma1 * deg.sigma2),
        p=p,
        q=q,
        neg_phi_order=neg_coxeter_order(C, order_bound),
        cyclotomic=is_cyclotomic_product(cp),
    )


CONDITIONS = ("shape", "semi_regular", "p_value", "distinct_neighbourhoods",
              "cyclotomic_coxeter", "coxeter_order", "reflexive")


@dataclass(frozen=True)
class ConditionResult:
    condition: str
    status: str  # pass | fail | undecided
    witness: Any = None

    def to_json(self) -> dict:
        return {"condition": self.condition, "status": self.status, "witness": self.witness}


@dataclass(frozen=True)
class ConditionVerdict:
    results: tuple[ConditionResult, ...] = field(default_factory=tuple)

    @property
    def overall(self) -> str:
        statuses = [r.status for r in self.results]
        if "fail" in statuses:
            return "excluded"
        if "undecided" in statuses:
            return "undecided"
        return "candidate"

    @property
    def failed(self) -> list[str]:
        return [r.condition for r in self.results if r.status == "fail"]

    def status(self, condition: str) -> str:
        return next(r.status for r in self.results if r.condition == condition)

    def to_json(self) -> dict:
        return {"overall": self.overall, "conditions": [r.to_json() for r in self.results]}


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def condition_battery(L: StarAlgebra, order_bound: int = 1000) -> ConditionVerdict:
    """Necessary conditions for 2-representation-finiteness; never a certificate."""
    B = b_lambda(L)
    results = [ConditionResult("shape", _status(is_2rf_shape(L)), [L.r, L.s])]
    deg = bidegree(B)
    results.append(ConditionResult("semi_regular", _status(deg is not None),
                                   list(deg) if deg is not None else None))
    p = p_value(L.r, deg.sigma1, L.s, deg.sigma2) if deg is not None else None
    if p is None:
        results.append(ConditionResult("p_value", "undecided", "requires semi-regularity"))
    else:
        results.append(ConditionResult("p_value", _status(p in (1, 2, 3, 4)), p))
    dup = has_duplicate_neighborhoods(B)
    results.append(ConditionResult("distinct_neighbourhoods", _status(not dup), dup))
    star_cp = coxeter_polynomial(cartan_of_star(L))
    results.append(ConditionResult("cyclotomic_coxeter", _status(is_cyclotomic_product(star_cp)),
                                   star_cp.to_list()))
    order = neg_coxeter_order(gamma_cartan(L), order_bound)
    witness = order_to_json(order)
    if isinstance(order, Unknown):
        results.append(ConditionResult("coxeter_order", "undecided", witness))
    elif isinstance(order, Infinite):
        results.append(ConditionResult("coxeter_order", "fail", witness))
    elif p in (1, 2, 3):
        results.append(ConditionResult("coxeter_order", _status(order.k == ORDER_TABLE[p]), witness))
    elif p == 4:
        results.append(ConditionResult("coxeter_order", "pass", witness))
    else:
        results.append(ConditionResult("coxeter_order", "undecided", witness))
    results.append(ConditionResult("reflexive", _status(is_reflexive(B)), None))
    return ConditionVerdict(tuple(results))


def reduced_coxeter_matrix(sigma1: int, sigma2: int, dx2: int, dy2: int) -> Matrix:
    """Action of C^T C^{-1} on span{(1, 0, 0), (0, d_x, 0), (0, 0, d_y)} for a bi-eigenvector."""
    f1 = (sigma2 - 1) * dy2
    f2 = f1 - sigma1
    f3 = f1 - sigma1 * sigma2 + 1
    return ((1, -dx2, f1), (1, 1 - dx2, f2), (1, sigma2 - dx2, f3))


def return_time(sigma1: int, sigma2: int, dx2: int, dy2: int, bound: int = 60) -> int | None:
    """Least m <= bound with (C^T C^{-1})^m fixing (1, d_x, d_y), else None.

    Every finite order of -Phi_Gamma is a multiple of this value. The test is
    weaker than finiteness of the reduced matrix: cycles C_2r give m = 2 for all r.
    """
    M = reduced_coxeter_matrix(sigma1, sigma2, dx2, dy2)
    v = (1, 1, 1)
    for m in range(1, bound + 1):
        v = tuple(sum(a * x for a, x in zip(row, v)) for row in M)
        if v == (1, 1, 1):
            return m
    return None
