import random
from fractions import Fraction

import pytest
from mpmath import mp

from cyclepow import (
    DegeneracyError,
    ParameterError,
    build_psi,
    check_decomposition,
    conjugate_pairs,
    find_roots,
    inner_root,
    partial_fractions,
)


def test_find_roots_degenerate_and_linear():
    assert find_roots(build_psi(1)) == []
    roots = find_roots(build_psi(2))
    assert len(roots) == 1
    assert roots[0] == -3


def test_find_roots_conjugate_pair_k3():
    roots = find_roots(build_psi(3))
    assert len(roots) == 2
    with mp.workprec(256):
        half_root7 = mp.sqrt(7) / 2
        lower, upper = sorted(roots, key=lambda z: z.imag)
        assert abs(lower - mp.mpc(mp.mpf(-3) / 2, -half_root7)) < mp.mpf(2) ** -100
        assert abs(upper - mp.mpc(mp.mpf(-3) / 2, half_root7)) < mp.mpf(2) ** -100


@pytest.mark.parametrize("k", range(1, 9))
def test_root_count_and_residuals(k):
    roots = find_roots(build_psi(k), 256)
    assert len(roots) == k - 1
    psi = build_psi(k)
    with mp.workprec(288):
        from cyclepow import eval_poly

        for gamma in roots:
            assert abs(eval_poly(psi, gamma)) <= mp.mpf(2) ** -128


def test_find_roots_requires_64_bits():
    with pytest.raises(ParameterError):
        find_roots(build_psi(3), 32)


def test_inner_root_examples():
    with mp.workprec(256):
        rho = inner_root(mp.mpc(-3))
        assert abs(rho - (-3 + mp.sqrt(5)) / 2) < mp.mpf(2) ** -120
        assert abs(inner_root(mp.mpf("2.5")) - mp.mpf("0.5")) < mp.mpf(2) ** -120


def test_inner_root_complex_residual():
    with mp.workprec(160):
        gamma = mp.mpc(mp.mpf(-3) / 2, mp.sqrt(7) / 2)
        rho = inner_root(gamma, 128)
        assert abs(rho) < 1
        assert abs(rho + 1 / rho - gamma) < mp.mpf(2) ** -64


def test_inner_root_degenerate_on_arc():
    with pytest.raises(DegeneracyError):
        inner_root(mp.mpc(2))
    with pytest.raises(DegeneracyError):
        inner_root(mp.mpc(0))  # rho = +-i sits on the unit circle


def test_partial_fractions_k1():
    sf = partial_fractions(1)
    assert sf.pole_coefficient == Fraction(2)
    assert sf.factors == ()


def test_partial_fractions_k2():
    sf = partial_fractions(2)
    assert sf.pole_coefficient == Fraction(4, 5)
    (factor,) = sf.factors
    with mp.workprec(256):
        assert abs(factor.root - (-3)) < mp.mpf(2) ** -120
        assert abs(factor.coefficient - Fraction(-4, 5)) < mp.mpf(2) ** -120


def test_partial_fractions_k3():
    sf = partial_fractions(3)
    with mp.workprec(256):
        upper = next(f for f in sf.factors if mp.im(f.root) > 0)
        expected = mp.mpf(-3) / 14 * (1 - mp.mpc(0, 1) * mp.sqrt(7))
        assert abs(upper.coefficient - expected) < mp.mpf(2) ** -100


@pytest.mark.parametrize("k", range(1, 9))
def test_pole_coefficient_formula(k):
    sf = partial_fractions(k)
    assert sf.pole_coefficient == Fraction(12, (k + 1) * (2 * k + 1))


@pytest.mark.parametrize("k", range(2, 9))
def test_roots_avoid_spectrum_arc(k):
    with mp.workprec(256):
        for factor in partial_fractions(k).factors:
            re, im = mp.re(factor.root), mp.im(factor.root)
            if -2 <= re <= 2:
                distance = abs(im)
            else:
                distance = min(abs(factor.root - 2), abs(factor.root + 2))
            assert distance > mp.mpf(2) ** -32
            assert abs(factor.inner_root) < 1


@pytest.mark.parametrize("k", range(2, 9))
def test_conjugate_closure(k):
    sf = partial_fractions(k)
    with mp.workprec(256):
        tol = mp.mpf(2) ** -120
        for factor in sf.factors:
            assert any(
                abs(mp.conj(factor.root) - other.root) < tol
                and abs(mp.conj(factor.inner_root) - other.inner_root) < tol
                and abs(mp.conj(factor.coefficient) - other.coefficient) < tol
                for other in sf.factors
            )


def test_conjugate_pairs_partition():
    sf3 = partial_fractions(3)
    reals, pairs = conjugate_pairs(sf3.factors, 256)
    assert reals == [] and len(pairs) == 1
    with mp.workprec(256):
        assert mp.im(pairs[0][0].root) > 0 > mp.im(pairs[0][1].root)
    sf4 = partial_fractions(4)
    reals, pairs = conjugate_pairs(sf4.factors, 256)
    assert len(reals) == 1 and len(pairs) == 1


def test_check_decomposition_fixed_points():
    with mp.workprec(256):
        assert check_decomposition(partial_fractions(2), 0) <= mp.mpf(2) ** -100
        assert check_decomposition(partial_fractions(3), 1) <= mp.mpf(2) ** -100
        assert check_decomposition(partial_fractions(1), 0) <= mp.mpf(2) ** -100


def test_check_decomposition_rejects_near_pole():
    sf = partial_fractions(2)
    with pytest.raises(ParameterError):
        check_decomposition(sf, 2.001)
    with pytest.raises(ParameterError):
        check_decomposition(sf, -3.0000001)


@pytest.mark.parametrize("k", range(1, 9))
def test_check_decomposition_random_points(k):
    rng = random.Random(1234 + k)
    sf = partial_fractions(k)
    with mp.workprec(288):
        poles = [mp.mpc(2)] + [f.root for f in sf.factors]
        done = 0
        while done < 16:
            point = mp.mpc(rng.uniform(-6, 6), rng.uniform(-3, 3))
            if any(abs(point - pole) <= 0.25 for pole in poles):
                continue
            assert check_decomposition(sf, point) <= mp.mpf(2) ** -128
            done += 1


def test_factorization_rejects_bad_k():
    with pytest.raises(ParameterError):
        partial_fractions(0)
