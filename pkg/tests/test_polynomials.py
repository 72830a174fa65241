from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp

from cyclepow import (
    ConsistencyError,
    IntPolynomial,
    basis_term,
    build_phi,
    build_psi,
    derivative,
    eval_poly,
)
from cyclepow.errors import ParameterError
from cyclepow.polynomials import divide_exact


def test_basis_term_small_cases():
    assert basis_term(0).coeffs == (2,)
    assert basis_term(1).coeffs == (0, 1)
    assert basis_term(2).coeffs == (-2, 0, 1)
    assert basis_term(3).coeffs == (0, -3, 0, 1)


def test_basis_term_rejects_negative():
    with pytest.raises(ParameterError):
        basis_term(-1)


def test_phi_small_cases():
    assert build_phi(1).coeffs == (2, -1)
    assert build_phi(2).coeffs == (6, -1, -1)  # (2-x)(x+3)
    assert build_phi(3).coeffs == (8, 2, -1, -1)  # (2-x)(x^2+3x+4)


def test_psi_small_cases():
    assert build_psi(1).coeffs == (1,)
    assert build_psi(2).coeffs == (3, 1)
    assert build_psi(3).coeffs == (4, 3, 1)


@pytest.mark.parametrize("k", range(1, 13))
def test_factorization_exact(k):
    assert IntPolynomial((2, -1)) * build_psi(k) == build_phi(k)


@pytest.mark.parametrize("k", range(1, 13))
def test_psi_at_two_square_pyramidal(k):
    assert 6 * eval_poly(build_psi(k), 2) == k * (k + 1) * (2 * k + 1)


@pytest.mark.parametrize("k", range(1, 13))
def test_phi_slope_at_two(k):
    assert 6 * eval_poly(derivative(build_phi(k)), 2) == -k * (k + 1) * (2 * k + 1)


def test_eval_examples():
    assert eval_poly(build_psi(3), 2) == 14
    assert eval_poly(build_psi(2), -3) == 0
    for k in range(1, 9):
        assert eval_poly(build_phi(k), 2) == 0


def test_eval_preserves_numeric_kind():
    psi = build_psi(3)
    assert isinstance(eval_poly(psi, Fraction(1, 2)), Fraction)
    assert eval_poly(psi, Fraction(1, 2)) == Fraction(23, 4)
    with mp.workprec(128):
        value = eval_poly(psi, mp.mpf("0.5"))
        assert abs(value - mp.mpf(23) / 4) < mp.mpf(2) ** -100


def test_derivative_examples():
    assert derivative(build_psi(3)).coeffs == (3, 2)
    assert derivative(build_psi(2)).coeffs == (1,)
    assert derivative(IntPolynomial((2,))).coeffs == (0,)


def test_zero_polynomial_canonical():
    zero = IntPolynomial((0, 0, 0))
    assert zero.coeffs == (0,)
    assert zero.degree == -1
    assert zero.is_zero


def test_divide_exact_rejects_remainder():
    with pytest.raises(ConsistencyError):
        divide_exact(IntPolynomial((1, 0, 1)), IntPolynomial((2, -1)))
    with pytest.raises(ConsistencyError):
        divide_exact(IntPolynomial((1, 3)), IntPolynomial((0, 2)))


def test_divide_exact_by_zero_rejected():
    with pytest.raises(ParameterError):
        divide_exact(IntPolynomial((1, 1)), IntPolynomial((0,)))


small_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=6).map(
    lambda cs: IntPolynomial(tuple(cs))
)


@given(small_polys, small_polys, st.integers(-5, 5))
@settings(max_examples=100, deadline=None)
def test_ring_homomorphism_under_evaluation(p, q, x):
    assert eval_poly(p * q, x) == eval_poly(p, x) * eval_poly(q, x)
    assert eval_poly(p + q, x) == eval_poly(p, x) + eval_poly(q, x)


@given(small_polys, small_polys)
@settings(max_examples=100, deadline=None)
def test_exact_division_roundtrip(p, q):
    if q.is_zero or p.is_zero:
        return
    assert divide_exact(p * q, q) == p


def test_spectrum_arc_positivity():
    # phi_k(2 cos theta) is the Laplacian symbol; it must be positive at
    # every nonzero Fourier mode of every valid graph
    with mp.workprec(128):
        for k in range(1, 7):
            phi = build_phi(k)
            for n in range(2 * k + 1, 33):
                for j in range(1, n):
                    value = eval_poly(phi, 2 * mp.cospi(mp.mpf(2 * j) / n))
                    assert value > 0
