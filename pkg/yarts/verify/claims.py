"""Verification claims."""

import dataclasses

from ..errors import InvariantViolation

SUITES = ("q3n3", "q5n3", "q3n5", "q2n5-lst", "q3n4-gd", "q5n5-candidates", "q7-dab")

_CLAIMS = []

# A claim is a generator which yields measurements, warnings and errors.
# The generator can return False to stop the rest of its suite.


def claim(name, *, suite, fact, after=None):
    """
    Decorate claims.

    `fact` is the statement the claim checks, quoted in reports. To order
    claims, use `after` with a list of other claims (NB claims, not names)
    that must have already run.
    """
    if suite not in SUITES:
        raise ValueError(f"{suite!r} is not a suite")
    if after is not None:
        for other in after:
            if isinstance(other, str):
                raise ValueError(f"{other!r} is not a claim, only a name")
            if not hasattr(other, "_claim_name"):
                raise ValueError(f"{other!r} is not a registered claim")

    def decorator(func):
        func._claim_name = name
        func._claim_suite = suite
        func._claim_fact = fact
        _CLAIMS.append(func)
        return func

    return decorator


def error(code, message):
    """
    Produce an error in a claim to be emitted.

    Usage:
    >>> yield error("size", "|L| = 350, expected 352")
    """
    return "error", code, message


def warning(code, message):
    """Produce a warning in a claim to be emitted."""
    return "warning", code, message


def measured(code, value):
    """Record a measured value for the report."""
    return "value", code, value


def expect(code, actual, expected):
    """An error if actual differs from expected, else the measurement."""
    if actual != expected:
        return error(code, f"{code} = {actual}, expected {expected}")
    return measured(code, actual)


@dataclasses.dataclass
class ClaimResult:
    name: str
    fact: str
    status: str = "pass"
    values: dict = dataclasses.field(default_factory=dict)
    warnings: list = dataclasses.field(default_factory=list)
    errors: list = dataclasses.field(default_factory=list)

    def to_json(self):
        return {
            "name": self.name,
            "fact": self.fact,
            "status": self.status,
            "values": self.values,
            "warnings": [f"{code}: {message}" for code, message in self.warnings],
            "errors": [f"{code}: {message}" for code, message in self.errors],
        }


def _run_claim(func, workspace, result):
    """Run a single claim."""
    generator = func(workspace)
    try:
        while True:
            level, code, payload = next(generator)
            if level == "error":
                result.errors.append((code, payload))
            elif level == "warning":
                result.warnings.append((code, payload))
            elif level == "value":
                result.values[code] = payload
            else:
                raise ValueError(f"Unknown level {level!r}")
    except StopIteration as e:
        if result.errors:
            result.status = "fail"
        if e.value is False:
            return False
    except InvariantViolation as e:
        result.errors.append(("invariant", str(e)))
        result.status = "fail"
    return True


def claims_of(suite):
    return [func for func in _CLAIMS if func._claim_suite == suite]


def run_suite(suite, workspace):
    """
    Run every claim of a suite.

    Returns the list of ClaimResults, in registration order.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    results = []
    stopped = False
    for func in claims_of(suite):
        result = ClaimResult(func._claim_name, func._claim_fact)
        if stopped:
            result.status = "skipped"
        elif not _run_claim(func, workspace, result):
            stopped = True
        results.append(result)
    return results
