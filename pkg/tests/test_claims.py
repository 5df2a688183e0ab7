import pytest

from yarts.errors import InvariantViolation
from yarts.verify import claims
from yarts.verify.claim_registry import register_all_claims
from yarts.verify.claims import (
    ClaimResult,
    claim,
    claims_of,
    error,
    expect,
    measured,
    run_suite,
    warning,
)
from yarts.verify.cli import print_results


def run(func):
    result = ClaimResult("test", "a test claim")
    keep_going = claims._run_claim(func, None, result)
    return result, keep_going


def test_every_suite_has_claims():
    register_all_claims()
    for suite in claims.SUITES:
        assert claims_of(suite), suite


def test_claim_names_are_unique_per_suite():
    register_all_claims()
    for suite in claims.SUITES:
        names = [func._claim_name for func in claims_of(suite)]
        assert len(names) == len(set(names)), suite


def test_claim_registration_checks():
    with pytest.raises(ValueError):
        claim("x", suite="q4n4", fact="")
    with pytest.raises(ValueError):
        claim("x", suite="q3n3", fact="", after=["field-properties"])


def test_expect():
    assert expect("size", 352, 352) == ("value", "size", 352)
    assert expect("size", 350, 352) == ("error", "size", "size = 350, expected 352")


def test_results_are_collected():
    def func(ws):
        yield measured("size", 3)
        yield warning("formula", "differs")
        yield error("count", "wrong")

    result, keep_going = run(func)
    assert keep_going
    assert result.status == "fail"
    assert result.values == {"size": 3}
    assert result.to_json()["warnings"] == ["formula: differs"]
    assert result.to_json()["errors"] == ["count: wrong"]


def test_returning_false_stops():
    def func(ws):
        yield measured("size", 3)
        return False

    result, keep_going = run(func)
    assert not keep_going
    assert result.status == "pass"


def test_invariant_violations_fail_the_claim():
    def func(ws):
        yield measured("size", 3)
        raise InvariantViolation("spectrum does not add up")

    result, keep_going = run(func)
    assert keep_going
    assert result.status == "fail"
    assert result.errors == [("invariant", "spectrum does not add up")]


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("q4n4", None)


def test_print_results(capsys):
    def func(ws):
        yield warning("formula", "differs")
        yield error("count", "wrong")

    result, _ = run(func)
    assert print_results({"q3n3": [result]}) == 1
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "FAIL    q3n3/test: a test claim"
    assert lines[1:] == ["W formula: differs", "E count: wrong", "1 warnings, 1 errors"]
