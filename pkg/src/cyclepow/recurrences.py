"""Second-order linear recurrences attached to each correction factor.

Every factor carries two sibling sequences with seeds s_0 = 0, s_1 = 1 and
rule s_{n+1} = c*s_n - s_{n-1}:

  * the full-index form uses c = gamma (the root itself) and has the Binet
    expression (rho^n - rho^-n)/(rho - 1/rho);
  * the half-index form uses c = delta where delta = sigma + 1/sigma for a
    square root sigma of rho (so delta^2 = gamma + 2).

The geometric correction ratio that enters the closed-form hitting time,

    (1 - rho^ell)(1 - rho^(N-ell)) / ((1/rho - rho)(1 - rho^N)),

equals W_ell * W_{N-ell} / (delta * W_N) for the half-index sequence W, for
either choice of sigma.  The analogous full-index ratio V_ell * V_{N-ell} /
V_N does NOT reproduce it (off by more than a unit already at N=6, k=2), so
the exponential and half-index forms are the trusted evaluation paths and the
full-index ratio is kept only for erratum reporting.  The exponential form is
also the default for large N: |rho| < 1 keeps it uniformly well-conditioned,
whereas |W_N| grows like |rho|^(-N/2).
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp

from .errors import DegeneracyError, ParameterError
from .spectral import (
    DEFAULT_PRECISION_BITS,
    FactorData,
    separation_tolerance,
)

__all__ = [
    "RecurrenceSpec",
    "correction_ratio",
    "full_index_ratio",
    "full_index_spec",
    "half_index_spec",
    "term_by_binet",
    "term_by_recurrence",
]

_GUARD_BITS = 32


@dataclass(frozen=True)
class RecurrenceSpec:
    """Coefficient of s_{n+1} = coefficient*s_n - s_{n-1}, seeds 0 and 1."""

    coefficient: object


def full_index_spec(factor: FactorData) -> RecurrenceSpec:
    """Recurrence driven by the root itself (Binet base rho)."""
    return RecurrenceSpec(factor.root)


def half_index_spec(
    factor: FactorData,
    branch: int = 1,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> RecurrenceSpec:
    """Recurrence driven by delta = sigma + 1/sigma with sigma^2 = rho.

    `branch` picks the square root: +1 for the principal one, -1 for its
    negative.  Either branch yields the same correction ratio (the sequence
    flips sign as (-1)^(n-1) and delta flips with it).  Note
    delta^2 = gamma + 2.
    """
    if branch not in (1, -1):
        raise ParameterError("branch must be +1 or -1")
    with mp.workprec(precision_bits + _GUARD_BITS):
        sigma = mp.sqrt(mp.mpc(factor.inner_root))
        if branch == -1:
            sigma = -sigma
        delta = sigma + 1 / sigma
    return RecurrenceSpec(delta)


def _terms(coefficient, indices):
    """One pass of the recurrence, collecting the requested indices."""
    wanted = set(indices)
    top = max(wanted)
    values = {}
    previous = coefficient * 0
    current = previous + 1
    if 0 in wanted:
        values[0] = previous
    if top >= 1 and 1 in wanted:
        values[1] = current
    for i in range(2, top + 1):
        previous, current = current, coefficient * current - previous
        if i in wanted:
            values[i] = current
    return values


def term_by_recurrence(spec: RecurrenceSpec, n: int, precision_bits: int | None = None):
    """s_n by the three-term recurrence in O(n) steps.

    Arithmetic happens at `precision_bits` when given, otherwise in the
    ambient mpmath context (exact for int/Fraction coefficients either way).
    """
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    if precision_bits is None:
        return _terms(spec.coefficient, (n,))[n]
    with mp.workprec(precision_bits + _GUARD_BITS):
        return _terms(spec.coefficient, (n,))[n]


def term_by_binet(base, n: int, precision_bits: int = DEFAULT_PRECISION_BITS):
    """(base^n - base^-n) / (base - 1/base).

    Rejects bases within 2^(-precision_bits/4) of +-1, where the denominator
    degenerates.
    """
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    with mp.workprec(precision_bits + _GUARD_BITS):
        b = mp.mpc(base)
        if min(abs(b - 1), abs(b + 1)) <= separation_tolerance(precision_bits):
            raise DegeneracyError("Binet base too close to +-1")
        if n == 0:
            return mp.mpc(0)
        return (b**n - b**-n) / (b - 1 / b)


def correction_ratio(
    factor: FactorData,
    ell: int,
    n_vertices: int,
    form: str = "exponential",
    precision_bits: int = DEFAULT_PRECISION_BITS,
):
    """The per-factor geometric correction for displacement ell on n_vertices.

    form="exponential" evaluates (1 - rho^ell)(1 - rho^(N-ell)) /
    ((1/rho - rho)(1 - rho^N)) directly from the inner root; form="sequence"
    evaluates W_ell * W_{N-ell} / (delta * W_N) through the half-index
    recurrence.  The two agree to the certified-residual tolerance and are
    symmetric in ell <-> N - ell by construction.
    """
    if not 0 <= ell <= n_vertices:
        raise ParameterError(f"need 0 <= ell <= {n_vertices}, got {ell}")
    with mp.workprec(precision_bits + _GUARD_BITS):
        if form == "exponential":
            rho = mp.mpc(factor.inner_root)
            numerator = (1 - rho**ell) * (1 - rho ** (n_vertices - ell))
            denominator = (1 / rho - rho) * (1 - rho**n_vertices)
            return numerator / denominator
        if form == "sequence":
            spec = half_index_spec(factor, 1, precision_bits)
            delta = spec.coefficient
            terms = _terms(spec.coefficient, (ell, n_vertices - ell, n_vertices))
            return terms[ell] * terms[n_vertices - ell] / (delta * terms[n_vertices])
    raise ParameterError(f"unknown form {form!r}")


def full_index_ratio(
    factor: FactorData,
    ell: int,
    n_vertices: int,
    precision_bits: int = DEFAULT_PRECISION_BITS,
):
    """V_ell * V_{N-ell} / V_N for the full-index sequence.

    Kept solely for erratum reporting: this ratio does not equal the verified
    correction ratio (already at N=6, ell=1 for the square of the cycle it
    gives -55/144 where the true ratio is -5/8).
    """
    if not 0 <= ell <= n_vertices:
        raise ParameterError(f"need 0 <= ell <= {n_vertices}, got {ell}")
    with mp.workprec(precision_bits + _GUARD_BITS):
        terms = _terms(mp.mpc(factor.root), (ell, n_vertices - ell, n_vertices))
        return terms[ell] * terms[n_vertices - ell] / terms[n_vertices]
