"""Claims at q = 5, n = 5, with long lines from the canonical candidates."""

from ..catalog import distinguish
from .claims import claim, error, expect, measured

SUITE = "q5n5-candidates"
DA = {"a": "g"}
DAB = {"b": "g"}


def _check_verdict(verdict, expected):
    """Every applicable family is excluded, for the expected invariant where given."""
    yield measured("verdict", verdict.to_json()["families"])
    for family in verdict.families:
        if family.status == "not-applicable":
            continue
        if family.status != "excluded":
            yield error("not-excluded", f"{family.name} is {family.status}")
            continue
        invariants = [reason.invariant for reason in family.reasons]
        if family.name in expected and not any(i.startswith(expected[family.name]) for i in invariants):
            yield error("reason", f"{family.name} excluded by {invariants}, expected {expected[family.name]}")
        if not all(reason.citation for reason in family.reasons):
            yield error("citation", f"{family.name} excluded without a citation")


@claim("dA-nuclei", suite=SUITE, fact="dA nuclei (q^n, q, q^2, q) = (3125, 5, 25, 5)")
def claim_da_nuclei(ws):
    yield expect("spreadset", ws.nuclei("dA", 5, 5, **DA).as_tuple(), (3125, 5, 25, 5))


@claim("dAB-nuclei", suite=SUITE, fact="dAB nuclei (q^n, q, q, q) = (3125, 5, 5, 5)")
def claim_dab_nuclei(ws):
    yield expect("spreadset", ws.nuclei("dAB", 5, 5, **DAB).as_tuple(), (3125, 5, 5, 5))


@claim("dA-not-pseudoregulus", suite=SUITE, fact="L_A is maximum scattered but not of pseudoregulus type")
def claim_da_not_pseudoregulus(ws):
    sig = ws.signature("dA", 5, 5, mode="candidates", **DA)
    yield expect("size", sig.size, (5**10 - 1) // 4)
    yield expect("scattered", sig.scattered, True)
    yield expect("r1_weight", sig.named_line("r1")["weight"], 5)
    yield expect("r1_pseudoregulus", sig.named_line("r1")["pseudoregulus"], False)
    yield expect("pseudoregulus", sig.pseudoregulus, False)


@claim("dAB-lines", suite=SUITE, fact="N(b^2) = -1: |L| = (q^(2n+1) + q^(2n) - q^n - 1)/(q^2 - 1), x_2 = 26; r_1 of pseudoregulus type, r_1^perp not")
def claim_dab_lines(ws):
    sig = ws.signature("dAB", 5, 5, mode="candidates", **DAB)
    yield expect("size", sig.size, (5**11 + 5**10 - 5**5 - 1) // 24)
    yield expect("x_2", sig.spectrum[1], 26)
    yield expect("r1", sig.named_line("r1")["pseudoregulus"], True)
    yield expect("r1_perp", sig.named_line("r1_perp")["pseudoregulus"], False)
    yield measured("long_lines", sig.long_line_count)


@claim("dA-distinguish", suite=SUITE, after=[claim_da_not_pseudoregulus], fact="no known family survives for dA")
def claim_da_distinguish(ws):
    verdict = distinguish(ws.signature("dA", 5, 5, mode="candidates", **DA))
    gtf = next(family for family in verdict.families if family.name == "GTF")
    yield from _check_verdict(verdict, {"GTF": "pseudoregulus", "K17": "nuclei", "K19": "nuclei"})
    if gtf.reasons and gtf.reasons[0].mode != "candidates":
        yield error("mode", "the GTF exclusion is not tagged with the candidate mode")


@claim("dAB-distinguish", suite=SUITE, after=[claim_dab_lines], fact="no known family survives for dAB")
def claim_dab_distinguish(ws):
    verdict = distinguish(ws.signature("dAB", 5, 5, mode="candidates", **DAB))
    yield from _check_verdict(
        verdict,
        {
            "EMPT1": "points of weight",
            "GD(s=0 or t=0)": "shape",
            "GD scattered, s ≠ t, s + t ≠ n": "scattered",
            "GTF": "nuclei",
        },
    )
