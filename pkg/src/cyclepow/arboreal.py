"""Spanning trees, effective resistances, forests, and contracted tree counts.

Everything here comes in (at least) two independent flavours:

  * tau_det        -- exact spanning-tree count: determinant of the reduced
                      Laplacian, fraction-free;
  * tau_eigen      -- the eigenvalue product prod_j phi_k(2 cos(2 pi j/n)) / n;
  * tau_product    -- the same product collapsed onto the inner roots, one
                      geometric factor per root of psi_k;
  * resistance     -- h(0, ell) / (n*k), exact, via the commute-time identity
                      on a vertex-transitive graph;
  * forests        -- two-component spanning forests separating 0 and ell:
                      tau * h / (n*k), exact rational arithmetic that must
                      land on an integer;
  * tau_contracted -- spanning trees of the graph with 0 and ell identified,
                      again an exact determinant; equals forests.

Analytic tree counts are never rounded silently: a value farther than 1e-6
(absolute-or-relative) from an integer fails loudly, since quiet rounding
would mask precision bugs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from . import fractionfree
from .errors import ConsistencyError, ParameterError, PrecisionError
from .graphs import GraphSpec, build_laplacian, contract_vertices
from .hitting import cosine_table, hit_exact
from .polynomials import build_phi, eval_poly
from .spectral import (
    DEFAULT_PRECISION_BITS,
    SpectralFactorization,
    cached_factorization,
    conjugate_pairs,
    residual_tolerance,
)

__all__ = [
    "ArborealCounts",
    "arboreal_counts",
    "forests",
    "nearest_integer",
    "resistance",
    "tau_contracted",
    "tau_det",
    "tau_eigen",
    "tau_product",
]

_GUARD_BITS = 32

# Rounding contract for analytic tree counts.
ROUNDING_DEFECT_LIMIT = 1e-6


def tau_det(spec: GraphSpec) -> int:
    """Spanning trees as the reduced-Laplacian determinant, exact."""
    return fractionfree.determinant(build_laplacian(spec).delete_row_col(0).rows)


def tau_eigen(spec: GraphSpec, precision_bits: int = DEFAULT_PRECISION_BITS):
    """Spanning trees as the eigenvalue product, in high precision.

    The nonzero Laplacian eigenvalues are the values of the symbol phi_k at
    2*cos(2*pi*j/n); their product over j = 1..n-1, divided by n, counts
    spanning trees.
    """
    n = spec.n
    phi = build_phi(spec.k)
    cosines = cosine_table(n, precision_bits)
    with mp.workprec(precision_bits + _GUARD_BITS):
        product = mp.mpf(1)
        for j in range(1, n):
            product *= eval_poly(phi, 2 * cosines[j])
        return product / n


def tau_product(
    spec: GraphSpec, factorization: SpectralFactorization | None = None
):
    """Spanning trees via one geometric factor per inner root.

    Each root contributes prod_{j>=1}(x_j - gamma) where x_j = 2 cos(2 pi j/n);
    in terms of the inner root this is

        (-1)^(n-1) * ((1 - rho^n)/(1 - rho))^2 / rho^(n-1).

    Conjugate factors are folded pairwise into |.|^2 (their alternating signs
    cancel), which halves the complex work and forces a real result; leftover
    real roots are multiplied directly, each carrying the (-1)^(n-1) sign that
    makes the product positive for even n as well.  Grouping the square before
    dividing by rho^(n-1) keeps intermediates tame for large n.
    """
    if factorization is None:
        factorization = cached_factorization(spec.k, DEFAULT_PRECISION_BITS)
    if factorization.k != spec.k:
        raise ParameterError(
            f"factorization was built for k={factorization.k}, spec has k={spec.k}"
        )
    n = spec.n
    bits = factorization.precision_bits
    with mp.workprec(bits + _GUARD_BITS):
        reals, pairs = conjugate_pairs(factorization.factors, bits)
        accumulator = mp.mpf(n)
        parity = -1 if n % 2 == 0 else 1
        for factor in reals:
            rho = mp.mpc(factor.inner_root)
            value = ((1 - rho**n) / (1 - rho)) ** 2 / rho ** (n - 1) * parity
            if abs(mp.im(value)) > residual_tolerance(bits) * max(1, abs(value)):
                raise PrecisionError(
                    "real-root tree factor has a nonreal residue beyond tolerance"
                )
            accumulator *= mp.re(value)
        for upper, _lower in pairs:
            rho = mp.mpc(upper.inner_root)
            value = ((1 - rho**n) / (1 - rho)) ** 2 / rho ** (n - 1)
            accumulator *= abs(value) ** 2
        return accumulator


def resistance(spec: GraphSpec, ell: int) -> Fraction:
    """Effective resistance R(0, ell) = h(0, ell) / (n*k), exact.

    On a vertex-transitive graph the commute-time identity collapses to
    h = m * R with m = n*k edges.
    """
    return hit_exact(spec, ell) / spec.num_edges


def forests(spec: GraphSpec, ell: int) -> int:
    """Two-component spanning forests separating 0 and ell.

    tau * h(0, ell) / (n*k) computed in exact rational arithmetic; the result
    must reduce to an integer, anything else indicates a broken invariant.
    """
    if not 1 <= ell < spec.n:
        raise ParameterError(f"need 1 <= ell < {spec.n}, got {ell}")
    value = tau_det(spec) * hit_exact(spec, ell) / spec.num_edges
    if value.denominator != 1:
        raise ConsistencyError(
            f"forest count {value} is not an integer for n={spec.n}, "
            f"k={spec.k}, ell={ell}"
        )
    return int(value)


def tau_contracted(spec: GraphSpec, ell: int) -> int:
    """Spanning trees of the multigraph with vertices 0 and ell identified."""
    if not 1 <= ell < spec.n:
        raise ParameterError(f"need 1 <= ell < {spec.n}, got {ell}")
    contracted = contract_vertices(build_laplacian(spec), 0, ell)
    return fractionfree.determinant(contracted.delete_row_col(0).rows)


def nearest_integer(value, max_defect: float = ROUNDING_DEFECT_LIMIT) -> int:
    """Round an analytic count to the integer it must equal, or fail loudly."""
    with mp.workprec(mp.prec + _GUARD_BITS):
        nearest = mp.nint(value)
        defect = abs(value - nearest) / max(1, abs(nearest))
        if defect > max_defect:
            raise PrecisionError(
                f"refusing to round {mp.nstr(mp.mpf(value), 12)} to an integer "
                f"(defect {mp.nstr(mp.mpf(defect), 4)}); increase the working "
                "precision"
            )
        return int(nearest)


@dataclass(frozen=True)
class ArborealCounts:
    """Exact counts with their analytic cross-checks for one (spec, ell).

    forest_count and contracted_tree_count are populated only when ell is
    given; they are equal by construction (a mismatch raises instead).
    """

    spec: GraphSpec
    ell: int | None
    tree_count: int
    tree_count_eigen: object
    tree_count_product: object
    resistance: Fraction | None
    forest_count: int | None
    contracted_tree_count: int | None


def arboreal_counts(
    spec: GraphSpec,
    ell: int | None = None,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    factorization: SpectralFactorization | None = None,
) -> ArborealCounts:
    """Bundle every count for (spec, ell), cross-checking all routes."""
    if factorization is None:
        factorization = cached_factorization(spec.k, precision_bits)
    tau = tau_det(spec)
    eigen = tau_eigen(spec, precision_bits)
    product = tau_product(spec, factorization)
    with mp.workprec(precision_bits + _GUARD_BITS):
        if nearest_integer(eigen) != tau:
            raise ConsistencyError(
                f"eigenvalue tree product {mp.nstr(eigen, 20)} disagrees with "
                f"the determinant count {tau}"
            )
        if nearest_integer(product) != tau:
            raise ConsistencyError(
                f"root tree product {mp.nstr(product, 20)} disagrees with "
                f"the determinant count {tau}"
            )
    if ell is None:
        return ArborealCounts(spec, None, tau, eigen, product, None, None, None)
    res = resistance(spec, ell)
    forest_count = forests(spec, ell) if ell != 0 else None
    contracted = tau_contracted(spec, ell) if ell != 0 else None
    if forest_count is not None and forest_count != contracted:
        raise ConsistencyError(
            f"forest count {forest_count} != contracted tree count {contracted}"
        )
    return ArborealCounts(
        spec, ell, tau, eigen, product, res, forest_count, contracted
    )
