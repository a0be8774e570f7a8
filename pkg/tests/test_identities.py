from fractions import Fraction

import pytest

from anchor_moments.identities import SUITES, run_suite, suite_names
from anchor_moments.special_functions import HalfIntValue, gamma_half_int


def test_suite_names_cover_cli_contract():
    assert suite_names() == [
        "all", "stirling", "eulerian", "beta", "gould", "finite-diff", "technical2b",
    ]


@pytest.mark.parametrize("name", ["stirling", "eulerian", "gould", "finite-diff", "technical2b"])
def test_each_suite_passes(name):
    results = run_suite(name)
    assert results, f"suite {name} is empty"
    for r in results:
        assert r.passed, f"{r.name}: residual={r.residual} {r.detail}"


def test_beta_suite_passes():
    for r in run_suite("beta"):
        assert r.passed, f"{r.name}: residual={r.residual}"
        assert r.residual <= 1e-12


def test_all_suite_is_union():
    all_names = [r.name for r in run_suite("all")]
    member_count = sum(len(checks) for checks in SUITES.values()) + 4  # + technical2b rows
    assert len(all_names) == member_count
    assert len(set(all_names)) == len(all_names)


def test_unknown_suite_raises():
    with pytest.raises(KeyError):
        run_suite("bogus")


def test_alternating_reciprocal_hand_value_third_order():
    # cubic case by hand: 1 - 1/3 = 2/3 on the left; the right side is
    # sqrt(pi) 1! / (2 Gamma(5/2)) = 1/(2 * 3/4) = 2/3 as well
    lhs = Fraction(1) - Fraction(1, 3)
    rhs = HalfIntValue(Fraction(1), 0, 1) / (2 * gamma_half_int(5))
    assert lhs == Fraction(2, 3)
    assert rhs == HalfIntValue(Fraction(2, 3))


def test_results_are_deterministic():
    first = run_suite("beta")
    second = run_suite("beta")
    assert first == second
