"""Acceptance suite: every release criterion at its stated tolerance.

Each test prints one PASS/FAIL line (run with `pytest -s` to see them on
success; FAIL lines always surface with the assertion).  Runtime budgets are
asserted where stated.
"""

import time
from contextlib import contextmanager
from fractions import Fraction

from click.testing import CliRunner
from mpmath import mp

from cyclepow import (
    GraphSpec,
    cached_factorization,
    conjugate_pairs,
    correction_ratio,
    hit_closed,
    hit_exact,
    hit_exact_all,
    hit_simulate,
    hit_spectral,
    tau_det,
    tau_eigen,
    tau_product,
)
from cyclepow.cli import main as cli_main
from cyclepow.hitting import cosine_table

from oracles import fibonacci

PRECISION = 256
ORACLE_RTOL = 1e-10


@contextmanager
def criterion(num, description, budget=None):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if budget is not None and elapsed >= budget:
            raise AssertionError(
                f"criterion {num} took {elapsed:.1f}s, budget {budget}s"
            )
    except BaseException:
        print(f"ACCEPTANCE {num}: FAIL - {description}")
        raise
    print(f"ACCEPTANCE {num}: PASS - {description} [{elapsed:.1f}s]")


def test_criterion_01_cycle_quadratic_formula():
    with criterion(1, "k=1 hitting times equal ell*(n-ell) exactly, n<=64",
                   budget=10):
        for n in range(3, 65):
            profile = hit_exact_all(GraphSpec(n, 1))
            for ell in range(n):
                assert profile[ell] == Fraction(ell * (n - ell))


def test_criterion_02_four_method_agreement():
    with criterion(
        2, "spectral and closed forms match the exact oracle to 1e-10 "
        "for k<=6, n<=48", budget=120,
    ):
        with mp.workprec(PRECISION + 32):
            for k in range(1, 7):
                sf = cached_factorization(k, PRECISION)
                for n in range(2 * k + 1, 49):
                    spec = GraphSpec(n, k)
                    exact = hit_exact_all(spec)
                    for ell in range(n):
                        reference = (
                            mp.mpf(exact[ell].numerator) / exact[ell].denominator
                        )
                        scale = max(1, abs(reference))
                        spectral = hit_spectral(spec, ell, PRECISION)
                        assert abs(spectral - reference) <= ORACLE_RTOL * scale, (
                            n, k, ell, "spectral",
                        )
                        closed = hit_closed(spec, ell, sf)
                        assert abs(closed - reference) <= ORACLE_RTOL * scale, (
                            n, k, ell, "closed",
                        )


def test_criterion_03_complete_graph_degeneracy():
    with criterion(
        3, "n=2k+1: hitting times are exactly 2k and tau = n^(n-2)",
    ):
        for k in range(1, 7):
            n = 2 * k + 1
            spec = GraphSpec(n, k)
            profile = hit_exact_all(spec)
            assert all(profile[ell] == Fraction(2 * k) for ell in range(1, n))
            assert tau_det(spec) == n ** (n - 2)


def test_criterion_04_spanning_tree_triple_agreement():
    with criterion(
        4, "tau by determinant, eigenvalue product, and root product agree "
        "to 1e-10 for k<=5, n<=40", budget=60,
    ):
        with mp.workprec(PRECISION + 32):
            for k in range(1, 6):
                sf = cached_factorization(k, PRECISION)
                for n in range(2 * k + 1, 41):
                    spec = GraphSpec(n, k)
                    tau = tau_det(spec)
                    eigen = tau_eigen(spec, PRECISION)
                    product = tau_product(spec, sf)
                    scale = max(1, tau)
                    assert abs(eigen - tau) <= ORACLE_RTOL * scale, (n, k)
                    assert abs(product - tau) <= ORACLE_RTOL * scale, (n, k)
                    assert int(mp.nint(eigen)) == tau
                    assert int(mp.nint(product)) == tau


def test_criterion_05_forest_contraction_exactness():
    with criterion(
        5, "forest count equals contracted tree count and tau*h/(nk) is an "
        "integer for k<=4, n<=24", budget=120,
    ):
        from cyclepow import forests, tau_contracted

        for k in range(1, 5):
            for n in range(2 * k + 1, 25):
                spec = GraphSpec(n, k)
                tau = tau_det(spec)
                profile = hit_exact_all(spec)
                for ell in range(1, n):
                    scaled = tau * profile[ell] / spec.num_edges
                    assert scaled.denominator == 1, (n, k, ell)
                    assert forests(spec, ell) == tau_contracted(spec, ell), (
                        n, k, ell,
                    )


def test_criterion_06_resolvent_periodization_identity():
    with criterion(
        6, "direct resolvent sums equal n * correction ratio to 1e-10 "
        "for k=2,3, n<=32",
    ):
        with mp.workprec(PRECISION + 32):
            for k in (2, 3):
                sf = cached_factorization(k, PRECISION)
                for n in range(2 * k + 1, 33):
                    cosines = cosine_table(n, PRECISION)
                    for factor in sf.factors:
                        gamma = mp.mpc(factor.root)
                        for ell in range(n):
                            direct = mp.mpc(0)
                            for j in range(1, n):
                                direct += (1 - cosines[(j * ell) % n]) / (
                                    gamma - 2 * cosines[j]
                                )
                            via_ratio = n * correction_ratio(
                                factor, ell, n, "exponential", PRECISION
                            )
                            scale = max(1, abs(direct), abs(via_ratio))
                            assert abs(direct - via_ratio) <= ORACLE_RTOL * scale, (
                                n, k, ell,
                            )


def test_criterion_07_fibonacci_closed_form_and_erratum():
    with criterion(
        7, "k=2 closed form (2/5)l(n-l) + (4/5)n F_l F_(n-l)/F_n is exact "
        "for n<=48; the doubled-index variant deviates by >= 1 at "
        "(6,2,1) without failing the run",
    ):
        for n in range(5, 49):
            profile = hit_exact_all(GraphSpec(n, 2))
            f_n = fibonacci(n)
            for ell in range(n):
                value = Fraction(2, 5) * ell * (n - ell) + Fraction(4, 5) * n * \
                    Fraction(fibonacci(ell) * fibonacci(n - ell), f_n)
                assert value == profile[ell], (n, ell)
        # erratum fixture: the doubled-index form misses the oracle by >= 1
        printed = Fraction(2, 5) * 1 * 5 + Fraction(4, 5) * 6 * Fraction(
            fibonacci(2) * fibonacci(10), fibonacci(12)
        )
        oracle = hit_exact(GraphSpec(6, 2), 1)
        deviation = abs(printed - oracle)
        assert deviation >= 1
        print(
            f"  erratum fixture: doubled-index form gives {float(printed):.4f} "
            f"vs oracle {oracle} at (n=6, k=2, ell=1); deviation "
            f"{float(deviation):.4f} reported, run not failed"
        )


def test_criterion_08_k3_fixtures_and_conjugate_pair_form():
    with criterion(
        8, "k=3 root/coefficient fixtures to 2^-100 and the conjugate-pair "
        "closed form matches the oracle for n=7..24",
    ):
        sf = cached_factorization(3, PRECISION)
        with mp.workprec(PRECISION + 32):
            tol = mp.mpf(2) ** -100
            half_root7 = mp.sqrt(7) / 2
            roots = sorted((f.root for f in sf.factors), key=lambda z: z.imag)
            assert abs(roots[0] - mp.mpc(mp.mpf(-3) / 2, -half_root7)) <= tol
            assert abs(roots[1] - mp.mpc(mp.mpf(-3) / 2, half_root7)) <= tol
            (_, pairs) = conjugate_pairs(sf.factors, PRECISION)
            upper = pairs[0][0]
            expected_coeff = mp.mpf(-3) / 14 * (1 - mp.mpc(0, 1) * mp.sqrt(7))
            assert abs(upper.coefficient - expected_coeff) <= tol
            for n in range(7, 25):
                spec = GraphSpec(n, 3)
                exact = hit_exact_all(spec)
                for ell in range(n):
                    quadratic = mp.mpf(3 * ell * (n - ell)) / 14
                    ratio = correction_ratio(upper, ell, n, "exponential",
                                             PRECISION)
                    value = quadratic + 2 * n * mp.re(upper.coefficient * ratio)
                    reference = mp.mpf(exact[ell].numerator) / exact[ell].denominator
                    assert abs(value - reference) <= ORACLE_RTOL * max(
                        1, abs(reference)
                    ), (n, ell)


def test_criterion_09_monte_carlo_sanity_and_reproducibility():
    with criterion(
        9, "(n=12, k=2, ell=5) with 1e5 walks lands within 4 standard "
        "errors; fixed seed reproduces bytes", budget=30,
    ):
        spec = GraphSpec(12, 2)
        exact = float(hit_exact(spec, 5))
        result = hit_simulate(spec, 5, 10**5, 20240601)
        assert abs(result.mean - exact) <= 4 * result.stderr
        runner = CliRunner()
        args = ["hit", "--n", "12", "--k", "2", "--ell", "5", "--method",
                "simulate", "--walks", "2000", "--seed", "20240601",
                "--format", "json"]
        first = runner.invoke(cli_main, args)
        second = runner.invoke(cli_main, args)
        assert first.output == second.output
        assert first.exit_code == second.exit_code == 0


def test_criterion_10_cycle_eigenvalue_product():
    with criterion(
        10, "prod_j (2 - 2cos(2 pi j/n)) = n^2 to 1e-12 for n<=64",
    ):
        with mp.workprec(PRECISION + 32):
            for n in range(3, 65):
                cosines = cosine_table(n, PRECISION)
                product = mp.mpf(1)
                for j in range(1, n):
                    product *= 2 - 2 * cosines[j]
                assert abs(product - n * n) <= 1e-12 * n * n, n
