"""Roots of psi_k, their inner roots, and the partial-fraction data.

The rational function 2k / phi_k(x) splits over the simple poles of phi_k:

    2k / phi_k(x) = B / (2 - x) + sum_a A_a / (gamma_a - x),

where gamma_1..gamma_{k-1} are the roots of psi_k, B = 2k / psi_k(2) =
12 / ((k+1)(2k+1)) exactly, and A_a = -2k / ((2 - gamma_a) * psi_k'(gamma_a)).
Each gamma lies off the real interval [-2, 2] (the spectrum arc), so the
quadratic rho^2 - gamma*rho + 1 = 0 has exactly one root with |rho| < 1; that
inner root drives all the geometric corrections downstream.

Roots are located from the companion matrix at double precision, then polished
by Newton iteration in mpmath arithmetic, with residuals certified against the
2^(-precision_bits/2) convention used package-wide.  Distinctness is verified
numerically per k rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from mpmath import mp

from .errors import (
    ConsistencyError,
    DegeneracyError,
    ParameterError,
    PrecisionError,
)
from .polynomials import IntPolynomial, build_phi, build_psi, derivative, eval_poly

__all__ = [
    "DEFAULT_PRECISION_BITS",
    "FactorData",
    "SpectralFactorization",
    "cached_factorization",
    "check_decomposition",
    "conjugate_pairs",
    "find_roots",
    "inner_root",
    "partial_fractions",
    "residual_tolerance",
    "separation_tolerance",
]

DEFAULT_PRECISION_BITS = 256

# Extra working bits so results are accurate at the *requested* precision.
_GUARD_BITS = 32

_NEWTON_BUDGET = 100


def residual_tolerance(precision_bits: int):
    """2^(-precision_bits/2), the package-wide certified-residual bound."""
    return mp.mpf(2) ** (mp.mpf(-precision_bits) / 2)


def separation_tolerance(precision_bits: int):
    """2^(-precision_bits/4), used for root separation and degeneracy guards."""
    return mp.mpf(2) ** (mp.mpf(-precision_bits) / 4)


@dataclass(frozen=True)
class FactorData:
    """One correction factor: a root of psi_k with its derived quantities.

    root         -- gamma, a root of psi_k (high-precision complex)
    inner_root   -- rho with rho + 1/rho = root and |rho| < 1
    coefficient  -- A, the partial-fraction coefficient at this pole
    residual     -- |psi_k(root)| after Newton refinement
    """

    root: object
    inner_root: object
    coefficient: object
    residual: object


@dataclass(frozen=True)
class SpectralFactorization:
    """Partial-fraction decomposition of 2k / phi_k at a stated precision.

    pole_coefficient is B = 12/((k+1)(2k+1)), kept as an exact rational so the
    quadratic term of the closed-form hitting time stays exact.  factors holds
    the k-1 roots, closed under complex conjugation.
    """

    k: int
    precision_bits: int
    pole_coefficient: Fraction
    factors: tuple[FactorData, ...]


def find_roots(psi: IntPolynomial, precision_bits: int = DEFAULT_PRECISION_BITS):
    """All deg(psi) roots, Newton-refined until |psi(root)| is certified.

    Initial estimates come from numpy's companion-matrix solver; each is then
    polished in mpmath arithmetic until the residual drops below
    2^(-precision_bits/2).  The refined roots must be pairwise separated by
    more than 2^(-precision_bits/4).
    """
    if precision_bits < 64:
        raise ParameterError("precision_bits must be >= 64")
    degree = psi.degree
    if degree <= 0:
        return []
    with mp.workprec(precision_bits + _GUARD_BITS):
        tol = residual_tolerance(precision_bits)
        # Polish well past the certified bound so downstream products stay
        # clean at the full working precision; the rounding floor ends the
        # iteration early when this is unreachable.
        target = mp.mpf(2) ** -(precision_bits + _GUARD_BITS // 2)
        if degree == 1:
            c0, c1 = psi.coeffs
            roots = [mp.mpc(mp.mpf(-c0) / c1)]
        else:
            estimates = np.roots([float(c) for c in reversed(psi.coeffs)])
            dpsi = derivative(psi)
            roots = []
            for estimate in estimates:
                z = mp.mpc(complex(estimate))
                best = z
                best_residual = mp.inf
                for _ in range(_NEWTON_BUDGET):
                    value = eval_poly(psi, z)
                    residual = abs(value)
                    if residual < best_residual:
                        best, best_residual = z, residual
                    elif best_residual <= tol:
                        break  # bouncing on the rounding floor; keep the best
                    if residual <= target:
                        break
                    slope = eval_poly(dpsi, z)
                    if slope == 0:
                        break
                    z = z - value / slope
                if best_residual > tol:
                    raise PrecisionError(
                        "root refinement did not converge; retry with higher "
                        "precision_bits"
                    )
                roots.append(best)
        roots.sort(key=lambda z: (z.real, z.imag))
        min_separation = separation_tolerance(precision_bits)
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                if abs(roots[i] - roots[j]) <= min_separation:
                    raise ConsistencyError(
                        "refined roots are not numerically distinct"
                    )
    return roots


def inner_root(gamma, precision_bits: int = DEFAULT_PRECISION_BITS):
    """The root of rho^2 - gamma*rho + 1 = 0 with |rho| < 1.

    The two roots multiply to 1, so exactly one lies inside the unit circle
    unless gamma sits on the real interval [-2, 2]; landing within
    2^(-precision_bits/4) of the circle signals corrupted input.
    """
    with mp.workprec(precision_bits + _GUARD_BITS):
        g = mp.mpc(gamma)
        offset = mp.sqrt(g * g - 4)
        candidates = ((g + offset) / 2, (g - offset) / 2)
        rho = min(candidates, key=abs)
        if abs(abs(rho) - 1) <= separation_tolerance(precision_bits):
            raise DegeneracyError(
                "inner root lies on the unit circle; gamma is not a valid "
                "correction-factor root"
            )
    return rho


def partial_fractions(
    k: int, precision_bits: int = DEFAULT_PRECISION_BITS
) -> SpectralFactorization:
    """Assemble the full decomposition data for 2k / phi_k."""
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    psi = build_psi(k)
    # psi_k(2) = k(k+1)(2k+1)/6 pins B exactly; both expressions must agree.
    psi_at_2 = eval_poly(psi, 2)
    if 6 * psi_at_2 != k * (k + 1) * (2 * k + 1):
        raise ConsistencyError("psi_k(2) does not match k(k+1)(2k+1)/6")
    pole_coefficient = Fraction(2 * k, psi_at_2)
    if pole_coefficient != Fraction(12, (k + 1) * (2 * k + 1)):
        raise ConsistencyError("pole coefficient mismatch")

    roots = find_roots(psi, precision_bits)
    dpsi = derivative(psi)
    factors = []
    with mp.workprec(precision_bits + _GUARD_BITS):
        tol = residual_tolerance(precision_bits)
        for gamma in roots:
            rho = inner_root(gamma, precision_bits)
            if abs(rho + 1 / rho - gamma) > tol * max(1, abs(gamma)):
                raise PrecisionError("inner root does not reproduce its root")
            coefficient = -2 * k / ((2 - gamma) * eval_poly(dpsi, gamma))
            residual = abs(eval_poly(psi, gamma))
            factors.append(FactorData(gamma, rho, coefficient, residual))
        _assert_conjugate_closure(factors, precision_bits)
    return SpectralFactorization(
        k=k,
        precision_bits=precision_bits,
        pole_coefficient=pole_coefficient,
        factors=tuple(factors),
    )


@lru_cache(maxsize=64)
def cached_factorization(
    k: int, precision_bits: int = DEFAULT_PRECISION_BITS
) -> SpectralFactorization:
    """Memoised partial_fractions; safe because the result is immutable."""
    return partial_fractions(k, precision_bits)


def _assert_conjugate_closure(factors, precision_bits) -> None:
    """Every non-real root must have a conjugate partner among the roots.

    Pairing is detected by nearest-conjugate matching, never assumed from
    position.
    """
    tol = residual_tolerance(precision_bits)
    for factor in factors:
        target = mp.conj(factor.root)
        mismatch = min(abs(target - other.root) for other in factors)
        if mismatch > tol * max(1, abs(factor.root)):
            raise ConsistencyError("roots are not closed under conjugation")


def conjugate_pairs(factors, precision_bits: int):
    """Split factors into (real_factors, conjugate_pairs).

    A factor counts as real when the imaginary part of its root is below the
    certified-residual scale.  Each returned pair is (upper, lower) with the
    positive-imaginary member first.
    """
    with mp.workprec(precision_bits + _GUARD_BITS):
        tol = residual_tolerance(precision_bits)
        reals = []
        upper = []
        lower = []
        for factor in factors:
            if abs(mp.im(factor.root)) <= tol * max(1, abs(factor.root)):
                reals.append(factor)
            elif mp.im(factor.root) > 0:
                upper.append(factor)
            else:
                lower.append(factor)
        if len(upper) != len(lower):
            raise ConsistencyError("conjugate pairing is unbalanced")
        pairs = []
        remaining = list(lower)
        for factor in upper:
            target = mp.conj(factor.root)
            partner = min(remaining, key=lambda other: abs(other.root - target))
            if abs(partner.root - target) > tol * max(1, abs(factor.root)):
                raise ConsistencyError("no conjugate partner within tolerance")
            remaining.remove(partner)
            pairs.append((factor, partner))
        return reals, pairs


def check_decomposition(sf: SpectralFactorization, x):
    """|2k/phi_k(x) - B/(2-x) - sum A_a/(gamma_a - x)| at the stated precision.

    Both sides are evaluated independently: the left through the integer
    polynomial phi_k, the right through the stored decomposition.  The point
    must keep distance > 2^-8 from every pole.
    """
    with mp.workprec(sf.precision_bits + _GUARD_BITS):
        point = mp.mpc(x)
        clearance = mp.mpf(2) ** -8
        if abs(point - 2) <= clearance:
            raise ParameterError("evaluation point too close to the pole at 2")
        for factor in sf.factors:
            if abs(point - factor.root) <= clearance:
                raise ParameterError("evaluation point too close to a root pole")
        lhs = 2 * sf.k / eval_poly(build_phi(sf.k), point)
        b = sf.pole_coefficient
        rhs = mp.mpf(b.numerator) / b.denominator / (2 - point)
        for factor in sf.factors:
            rhs += factor.coefficient / (factor.root - point)
        return abs(lhs - rhs)
