import random

import pytest
from sadic import verification
from sadic.config import DEFAULT_BUDGETS
from sadic.constructions import CheckResult
from sadic.errors import GrowthStallError, InvalidArgumentError
from sadic.verification import run_suite


def check_always_passes(rng, budgets):
    return CheckResult("always-passes", True)


def check_budget_runs_out(rng, budgets):
    msg = "no growth"
    raise GrowthStallError(msg, depth=4, min_length=1)


@pytest.mark.parametrize("suite", [pytest.param("words", marks=pytest.mark.slow), "morphisms"])
def test_suite_passes(suite):
    results = run_suite(suite)
    assert results
    assert all(result.passed for result in results), [result.line() for result in results]


def test_unknown_suite():
    with pytest.raises(InvalidArgumentError):
        run_suite("everything")


def test_errors_become_failures(monkeypatch):
    monkeypatch.setitem(verification.SUITES, "morphisms", (check_budget_runs_out,))
    [result] = run_suite("morphisms")
    assert not result.passed
    assert result.name == "budget-runs-out"
    assert result.line().startswith("FAIL budget-runs-out GrowthStallError")


def test_all_runs_every_suite(monkeypatch):
    monkeypatch.setattr(verification, "SUITES", {"a": (check_always_passes,), "b": (check_always_passes,) * 2})
    assert [result.line() for result in run_suite("all")] == ["PASS always-passes"] * 3


@pytest.mark.slow
@pytest.mark.parametrize("check", [verification.check_cover, verification.check_power_bounds])
def test_full_size_checks(check):
    result = check(random.Random(0), DEFAULT_BUDGETS)
    assert result.passed, result.line()
