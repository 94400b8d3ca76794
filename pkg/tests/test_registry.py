import pytest

from resolvedim.core.errors import UsageError
from resolvedim.theorems.registry import CLAIMS, get_claim, run_registry, verify_claim
from resolvedim.theorems.schemas import ClaimStatus


def test_registry_ids():
    ids = {claim.id for claim in CLAIMS}
    assert {
        "JFG-beta", "JFG-psi", "JFG-sdim", "JFG-adjdim", "JFG-diam",
        "CP-beta", "CP-psi", "CP-sdim", "CP-iso-zn", "CP-iso-d2n",
    } <= ids
    assert len(ids) == len(CLAIMS)


def test_unknown_claim():
    with pytest.raises(UsageError):
        get_claim("JFG-gamma")


@pytest.mark.parametrize("claim_id", ["JFG-psi", "JFG-sdim", "CP-adjdim", "D2N-dims", "CP-iso-d2n"])
def test_single_claim_passes(claim_id):
    outcomes = run_registry([claim_id])
    claim = get_claim(claim_id)
    assert len(outcomes) == len(claim.default_params)
    assert all(outcome.status is ClaimStatus.PASS for outcome in outcomes), outcomes


@pytest.mark.slow
def test_full_registry_passes():
    outcomes = run_registry()
    failures = [outcome for outcome in outcomes if outcome.status is not ClaimStatus.PASS]
    assert failures == []


def test_outside_guard_is_not_a_failure():
    outcome = verify_claim(get_claim("JFG-beta"), (3, 1))
    assert outcome.status is ClaimStatus.OUTSIDE_GUARD
    assert outcome.passed
    assert "m >= 2" in outcome.detail
    assert verify_claim(get_claim("CP-beta"), (9,)).status is ClaimStatus.OUTSIDE_GUARD


def test_wrong_formula_fails():
    broken = get_claim("JFG-beta").model_copy(update={"formula": lambda n, m: n * m})
    outcome = verify_claim(broken, (3, 2))
    assert outcome.status is ClaimStatus.FAIL
    assert not outcome.passed
    assert outcome.expected == 6
    assert outcome.observed == 3


def test_outcome_records_value():
    outcome = verify_claim(get_claim("JFG-diam"), (8, 1))
    assert outcome.status is ClaimStatus.PASS
    assert outcome.expected == outcome.observed == 6
