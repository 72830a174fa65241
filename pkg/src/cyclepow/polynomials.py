"""Exact integer polynomial algebra for the Laplacian symbol of cycle powers.

Under the substitution x = z + 1/z, each two-sided power z^r + z^-r becomes an
integer polynomial P_r(x) (a rescaled Chebyshev polynomial, P_r(x) =
2*T_r(x/2)) obeying P_0 = 2, P_1 = x, P_{r+1} = x*P_r - P_{r-1}.  The symbol
of the distance-k Laplacian is then

    phi_k(x) = 2k - sum_{r=1..k} P_r(x),

whose values at x = 2*cos(2*pi*j/N) are exactly the Laplacian eigenvalues.
phi_k vanishes at x = 2, and dividing that root out gives the degree-(k-1)
cofactor psi_k with phi_k(x) = (2 - x) * psi_k(x).  The division is exact by
construction, so any remainder is treated as a bug rather than an error the
caller could cause.

Coefficients are arbitrary-precision integers throughout; they stay small at
desk scale, but exactness removes all overflow reasoning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, ParameterError

__all__ = [
    "IntPolynomial",
    "basis_term",
    "build_phi",
    "build_psi",
    "derivative",
    "divide_exact",
    "eval_poly",
]


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial, constant term first.

    Trailing zero coefficients are stripped on construction; the zero
    polynomial is canonically (0,) with degree -1.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            coeffs = (0,)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        if self.is_zero:
            return -1
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1]

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return IntPolynomial(tuple(summed))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return IntPolynomial(tuple(product))

    __rmul__ = __mul__


# x as a polynomial; used by the recurrence below.
_X = IntPolynomial((0, 1))


def basis_term(r: int) -> IntPolynomial:
    """P_r, the polynomial expressing z^r + z^-r in x = z + 1/z."""
    if r < 0:
        raise ParameterError(f"r must be >= 0, got {r}")
    prev = IntPolynomial((2,))
    if r == 0:
        return prev
    cur = _X
    for _ in range(r - 1):
        prev, cur = cur, _X * cur - prev
    return cur


def build_phi(k: int) -> IntPolynomial:
    """The degree-k Laplacian symbol phi_k(x) = 2k - sum_{r=1..k} P_r(x)."""
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    acc = IntPolynomial((2 * k,))
    for r in range(1, k + 1):
        acc = acc - basis_term(r)
    return acc


def build_psi(k: int) -> IntPolynomial:
    """The degree-(k-1) cofactor psi_k with phi_k(x) = (2 - x) * psi_k(x)."""
    return divide_exact(build_phi(k), IntPolynomial((2, -1)))


def divide_exact(dividend: IntPolynomial, divisor: IntPolynomial) -> IntPolynomial:
    """Exact polynomial division over the integers.

    Raises ConsistencyError when the division leaves a remainder or a
    non-integer quotient coefficient; for the phi/psi pair that signals a
    broken construction upstream.
    """
    if divisor.is_zero:
        raise ParameterError("division by the zero polynomial")
    if dividend.is_zero:
        return IntPolynomial((0,))
    quotient_degree = dividend.degree - divisor.degree
    if quotient_degree < 0:
        raise ConsistencyError("division left a nonzero remainder")
    remainder = list(dividend.coeffs)
    lead = divisor.leading_coefficient
    quotient = [0] * (quotient_degree + 1)
    for i in range(quotient_degree, -1, -1):
        coeff, extra = divmod(remainder[i + divisor.degree], lead)
        if extra:
            raise ConsistencyError("division produced a non-integer coefficient")
        quotient[i] = coeff
        for j, d in enumerate(divisor.coeffs):
            remainder[i + j] -= coeff * d
    if any(remainder):
        raise ConsistencyError("division left a nonzero remainder")
    return IntPolynomial(tuple(quotient))


def eval_poly(p: IntPolynomial, point):
    """Horner evaluation in the arithmetic of `point` (int, Fraction, mpf,
    mpc, ... anything with * and +)."""
    acc = 0 * point
    for c in reversed(p.coeffs):
        acc = acc * point + c
    return acc


def derivative(p: IntPolynomial) -> IntPolynomial:
    """Formal derivative with integer coefficients."""
    if p.degree < 1:
        return IntPolynomial((0,))
    return IntPolynomial(tuple(i * c for i, c in enumerate(p.coeffs))[1:])
