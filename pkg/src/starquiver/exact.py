"""Exact integer/rational linear algebra and univariate integer polynomials.

Matrices are tuples of row tuples holding ``int`` or ``Fraction`` entries.
Nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

RatScalar = Fraction
Scalar = Union[int, Fraction]
Matrix = tuple[tuple[Scalar, ...], ...]


class DimensionError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


# ---------------------------------------------------------------- matrices


def as_matrix(rows: Iterable[Iterable[Scalar]]) -> Matrix:
    m = tuple(tuple(row) for row in rows)
    if m and any(len(row) != len(m[0]) for row in m):
        raise DimensionError("ragged matrix")
    return m


def shape(M: Matrix) -> tuple[int, int]:
    return (len(M), len(M[0]) if M else 0)


def _require_square(M: Matrix) -> int:
    n, m = shape(M)
    if n != m:
        raise DimensionError(f"expected a square matrix, got {n}x{m}")
    return n


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(n: int, m: int | None = None) -> Matrix:
    return tuple((0,) * (n if m is None else m) for _ in range(n))


def transpose(M: Matrix) -> Matrix:
    return tuple(zip(*M)) if M else ()


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if shape(A)[1] != shape(B)[0]:
        raise DimensionError("incompatible shapes for product")
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def mat_vec(A: Matrix, v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_neg(A: Matrix) -> Matrix:
    return tuple(tuple(-a for a in row) for row in A)


def mat_pow(M: Matrix, k: int) -> Matrix:
    n = _require_square(M)
    result, base = identity(n), M
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def is_identity(M: Matrix) -> bool:
    return all(M[i][j] == (1 if i == j else 0) for i in range(len(M)) for j in range(len(M)))


def is_zero_matrix(M: Matrix) -> bool:
    return all(x == 0 for row in M for x in row)


def integral(M: Matrix) -> Matrix:
    """Convert a rational matrix with integral entries to ``int`` entries."""
    out = []
    for row in M:
        new_row = []
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError("matrix has non-integral entries")
                x = x.numerator
            new_row.append(x)
        out.append(tuple(new_row))
    return tuple(out)


def det(M: Matrix) -> Scalar:
    """Determinant by Bareiss fraction-free elimination (exact for ints)."""
    n = _require_square(M)
    if n == 0:
        return 1
    if any(isinstance(x, Fraction) for row in M for x in row):
        return _det_rational(M)
    A = [list(row) for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        pivot = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * pivot - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = pivot
    return sign * A[n - 1][n - 1]


def _det_rational(M: Matrix) -> Fraction:
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    result = Fraction(1)
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if A[i][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            A[k], A[pivot_row] = A[pivot_row], A[k]
            result = -result
        pivot = A[k][k]
        result *= pivot
        for i in range(k + 1, n):
            factor = A[i][k] / pivot
            if factor:
                for j in range(k, n):
                    A[i][j] -= factor * A[k][j]
    return result


def inverse(M: Matrix) -> Matrix:
    """Exact inverse over the rationals; entries are ints when integral."""
    n = _require_square(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if A[i][k] != 0), None)
        if pivot_row is None:
            raise ZeroDivisionError("matrix is singular")
        A[k], A[pivot_row] = A[pivot_row], A[k]
        pivot = A[k][k]
        A[k] = [x / pivot for x in A[k]]
        for i in range(n):
            if i != k and A[i][k] != 0:
                factor = A[i][k]
                A[i] = [x - factor * y for x, y in zip(A[i], A[k])]
    inv = tuple(tuple(row[n:]) for row in A)
    if all(x.denominator == 1 for row in inv for x in row):
        return integral(inv)
    return inv


# ---------------------------------------------------------------- polynomials


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial with ascending coefficients and no trailing zeros."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPoly":
        p = cls((1,))
        for root in roots:
            p = p * cls((-root, 1))
        return p

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lead == 1

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Divide out the content and normalise to a positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.lead < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly((other,))
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    __radd__ = __add__

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        return self + (-other)

    def __rsub__(self, other: int) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        result = IntPoly((1,))
        for _ in range(k):
            result = result * self
        return result

    def divmod_exact(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division by a divisor with leading coefficient ±1, staying in Z[t]."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if abs(other.lead) != 1:
            raise PreconditionError("divisor must have leading coefficient ±1")
        rem = list(self.coeffs)
        d = other.degree
        quot = [0] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k] * other.lead
            if c:
                quot[k - d] = c
                for i, oc in enumerate(other.coeffs):
                    rem[k - d + i] -= c * oc
        return IntPoly(quot), IntPoly(rem)

    def __floordiv__(self, other: "IntPoly") -> "IntPoly":
        q, r = self.divmod_exact(other)
        return q

    def __mod__(self, other: "IntPoly") -> "IntPoly":
        q, r = self.divmod_exact(other)
        return r

    def divides(self, other: "IntPoly") -> bool:
        """True when self divides other in Q[t] (content ignored)."""
        return pseudo_remainder(other, self).is_zero()

    def exact_quotient(self, divisor: "IntPoly") -> "IntPoly":
        """Quotient when ``divisor`` divides self in Z[t]; raises otherwise."""
        q, r = _divmod_rational(self, divisor)
        if any(x for x in r) or any(x.denominator != 1 for x in q):
            raise ArithmeticError("division is not exact over the integers")
        return IntPoly(int(x) for x in q)

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def reciprocal(self) -> "IntPoly":
        """t^deg · p(1/t)."""
        return IntPoly(reversed(self.coeffs))

    def is_self_reciprocal(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))

    def compose(self, other: "IntPoly") -> "IntPoly":
        acc = IntPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + IntPoly((c,))
        return acc

    def parity(self) -> int | None:
        """0 if only even powers occur, 1 if only odd powers, None if mixed."""
        degrees = {i % 2 for i, c in enumerate(self.coeffs) if c}
        if len(degrees) > 1:
            return None
        return degrees.pop() if degrees else 0

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and i) else str(mag)
            if i:
                body += "t" if i == 1 else f"t^{i}"
            terms.append(("-" if c < 0 else "+", body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


T = IntPoly((0, 1))
ONE = IntPoly((1,))


def _divmod_rational(a: IntPoly, b: IntPoly) -> tuple[list[Fraction], list[Fraction]]:
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = [Fraction(c) for c in a.coeffs]
    d = b.degree
    quot = [Fraction(0)] * max(len(rem) - d, 0)
    for k in range(len(rem) - 1, d - 1, -1):
        c = rem[k] / b.lead
        if c:
            quot[k - d] = c
            for i, bc in enumerate(b.coeffs):
                rem[k - d + i] -= c * bc
    return quot, rem[:d]


def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """Remainder of |lc(b)|^(deg a - deg b + 1) · a by b, which keeps signs."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a.coeffs)
    d, lc = b.degree, b.lead
    scale = abs(lc)
    sgn = 1 if lc > 0 else -1
    while len(rem) - 1 >= d and rem:
        c = rem[-1]
        k = len(rem) - 1 - d
        rem = [x * scale for x in rem]
        for i, bc in enumerate(b.coeffs):
            rem[k + i] -= sgn * c * bc
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return IntPoly(rem)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd in Z[t] with positive leading coefficient."""
    a, b = a.primitive(), b.primitive()
    while not b.is_zero():
        a, b = b, pseudo_remainder(a, b).primitive()
    return a.primitive()


def squarefree_part(p: IntPoly) -> IntPoly:
    if p.is_zero():
        raise ValueError("zero polynomial")
    g = poly_gcd(p, p.derivative())
    return p.primitive().exact_quotient(g) if g.degree > 0 else p.primitive()


def _sign_at(p: IntPoly, a: Fraction) -> int:
    v = p(a)
    return (v > 0) - (v < 0)


def _sign_at_infinity(p: IntPoly) -> int:
    return (p.lead > 0) - (p.lead < 0)


def sturm_sequence(p: IntPoly) -> list[IntPoly]:
    """Sturm chain of the squarefree part, each member rescaled by a positive constant."""
    p0 = squarefree_part(p)
    seq = [p0]
    if p0.degree == 0:
        return seq
    seq.append(p0.derivative().primitive())
    while seq[-1].degree > 0:
        r = pseudo_remainder(seq[-2], seq[-1])
        if r.is_zero():
            break
        r = -r
        g = r.content()
        seq.append(IntPoly(c // g for c in r.coeffs))
    return seq


def _variations(signs: Iterable[int]) -> int:
    nonzero = [s for s in signs if s]
    return sum(1 for x, y in zip(nonzero, nonzero[1:]) if x != y)


def sturm_count_greater(p: IntPoly, a) -> int:
    """Number of distinct real roots of p strictly greater than the rational a."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    a = Fraction(a)
    seq = sturm_sequence(p)
    # zeros dropped at a give the variation count just right of a, so a root at a is excluded
    return _variations(_sign_at(q, a) for q in seq) - _variations(_sign_at_infinity(q) for q in seq)


def count_roots_greater(p: IntPoly, a) -> int:
    """Number of real roots strictly greater than a, counted with multiplicity."""
    # a root of multiplicity m divides exactly g_0..g_{m-1} in g_{k+1} = gcd(g_k, g_k')
    total, g = 0, p
    while g.degree > 0:
        total += sturm_count_greater(g, a)
        g = poly_gcd(g, g.derivative())
    return total


# ---------------------------------------------------------------- cyclotomics


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    if n < 1:
        raise ValueError("n must be positive")
    p = IntPoly.monomial(n) - ONE
    for d in range(1, n):
        if n % d == 0:
            p = p // cyclotomic(d)
    return p


def euler_phi(n: int) -> int:
    result, m, q = n, n, 2
    while q * q <= m:
        if m % q == 0:
            while m % q == 0:
                m //= q
            result -= result // q
        q += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def _cyclotomic_indices(n: int) -> tuple[int, ...]:
    # phi(d) >= sqrt(d/2), so phi(d) <= n forces d <= 2 n^2
    return tuple(d for d in range(1, 2 * n * n + 1) if euler_phi(d) <= n)


def cyclotomic_factorization(p: IntPoly) -> dict[int, int] | None:
    """Multiplicities {d: e} with p = prod Phi_d^e, or None if p is not such a product."""
    if not p.is_monic():
        raise PreconditionError("polynomial must be monic")
    factors: dict[int, int] = {}
    rest = p
    for d in _cyclotomic_indices(p.degree):
        phi = cyclotomic(d)
        while rest.degree >= phi.degree:
            q, r = rest.divmod_exact(phi)
            if not r.is_zero():
                break
            factors[d] = factors.get(d, 0) + 1
            rest = q
        if rest.degree == 0:
            break
    return factors if rest == ONE else None


def is_cyclotomic_product(p: IntPoly) -> bool:
    return cyclotomic_factorization(p) is not None


# ---------------------------------------------------------------- char polys


def char_poly(M: Matrix) -> IntPoly:
    """det(tI - M) by the division-free Berkowitz recursion."""
    n = _require_square(M)
    poly: list[Scalar] = [1]  # descending coefficients of the trailing block
    for k in range(n - 1, -1, -1):
        m = n - k
        a = M[k][k]
        row = M[k][k + 1:]
        col_vec = [M[i][k] for i in range(k + 1, n)]
        sub = [r[k + 1:] for r in M[k + 1:]]
        toeplitz = [1, -a]
        v = col_vec
        for _ in range(m - 1):
            toeplitz.append(-sum(x * y for x, y in zip(row, v)))
            v = [sum(x * y for x, y in zip(r, v)) for r in sub]
        poly = [sum(toeplitz[i - j] * poly[j] for j in range(max(0, i - m), min(i, m - 1) + 1))
                for i in range(m + 1)]
    ascending = list(reversed(poly))
    if any(isinstance(c, Fraction) and c.denominator != 1 for c in ascending):
        raise ValueError("characteristic polynomial has non-integral coefficients")
    return IntPoly(int(c) for c in ascending)


def _interpolate(values: Sequence[int]) -> IntPoly:
    """Integer polynomial of degree < len(values) through (k, values[k]), k = 0.."""
    n = len(values)
    # Newton forward differences, then expand the falling-factorial basis
    diffs = list(values)
    newton = []
    for k in range(n):
        newton.append(diffs[0])
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    result = [Fraction(0)] * n
    basis = [Fraction(1)]  # coefficients of t(t-1)...(t-k+1)/k!
    for k, c in enumerate(newton):
        for i, b in enumerate(basis):
            result[i] += c * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b
            nxt[i] -= k * b
        basis = [x / (k + 1) for x in nxt]
    if any(x.denominator != 1 for x in result):
        raise ArithmeticError("interpolated polynomial is not integral")
    return IntPoly(int(x) for x in result)


def poly_det_pencil(C: Matrix) -> IntPoly:
    """det(tC + C^T), by evaluation at t = 0..n and interpolation."""
    n = _require_square(C)
    if det(C) != 1:
        raise PreconditionError("det(C) must equal 1")
    Ct = transpose(C)
    values = []
    for t in range(n + 1):
        values.append(det(tuple(tuple(t * a + b for a, b in zip(ra, rb)) for ra, rb in zip(C, Ct))))
    return _interpolate(values)


# ---------------------------------------------------------------- orders


@dataclass(frozen=True)
class FiniteOrder:
    k: int

    def __str__(self) -> str:
        return str(self.k)


@dataclass(frozen=True)
class Infinite:
    reason: str = ""

    def __str__(self) -> str:
        return "infinite"


@dataclass(frozen=True)
class Unknown:
    bound: int

    def __str__(self) -> str:
        return f"unknown(>{self.bound})"


OrderResult = Union[FiniteOrder, Infinite, Unknown]


def _lcm(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def matrix_order(M: Matrix, bound: int = 1000) -> OrderResult:
    """Multiplicative order of an invertible integer (or rational) matrix.

    A finite-order matrix is diagonalisable with cyclotomic characteristic
    polynomial, and its order is then the lcm L of the cyclotomic indices.
    So M has finite order iff M^L = I, which settles every case with L <= bound.
    """
    n = _require_square(M)
    if bound < 1:
        raise ValueError("bound must be positive")
    if det(M) == 0:
        raise ZeroDivisionError("matrix is singular")
    if is_identity(M):
        return FiniteOrder(1)
    N = mat_sub(M, identity(n))
    if is_zero_matrix(mat_pow(N, n)):
        return Infinite("unipotent and not the identity")
    factors = cyclotomic_factorization(char_poly(M))
    if factors is None:
        return Infinite("characteristic polynomial is not a product of cyclotomics")
    L = _lcm(factors)
    if L > bound:
        return Unknown(bound)
    if not is_identity(mat_pow(M, L)):
        return Infinite("not diagonalisable")
    return FiniteOrder(L)
