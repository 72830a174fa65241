import pytest

from cyclepow import ParameterError, run_verification


def test_run_verification_small_bounds_all_pass():
    results = run_verification(kmax=2, nmax=10)
    ids = [r.check_id for r in results]
    assert len(ids) == len(set(ids))
    assert all(r.passed for r in results)
    assert any(r.check_id == "hitting-oracle-spectral" for r in results)
    assert any(r.check_id == "hitting-oracle-closed" for r in results)


def test_erratum_fixtures_are_informational():
    results = run_verification(kmax=2, nmax=8)
    erratum = [r for r in results if r.informational]
    assert {r.check_id for r in erratum} == {
        "erratum-full-index-ratio",
        "erratum-doubled-index-form",
    }
    for fixture in erratum:
        assert fixture.passed  # informational checks never fail the run
        assert fixture.statistic >= 1.0
        assert "3.83" in fixture.description


def test_erratum_fixtures_absent_below_their_range():
    results = run_verification(kmax=1, nmax=12)
    assert not any(r.informational for r in results)


def test_bounds_validation():
    with pytest.raises(ParameterError):
        run_verification(kmax=0, nmax=10)
    with pytest.raises(ParameterError):
        run_verification(kmax=9, nmax=40)
    with pytest.raises(ParameterError):
        run_verification(kmax=3, nmax=6)


def test_k3_bounds_exercise_conjugate_checks():
    results = run_verification(kmax=3, nmax=12)
    by_id = {r.check_id: r for r in results}
    assert by_id["ratio-conjugation"].cases > 0
    assert by_id["ratio-conjugation"].passed
    assert all(r.passed for r in results)
