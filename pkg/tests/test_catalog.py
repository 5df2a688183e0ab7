import dataclasses

import pytest

from yarts.catalog import (
    COMPATIBLE,
    distinguish,
    gtf_nuclei_discrepancy,
    gtf_printed_nuclei,
    known_table,
    rule,
)
from yarts.nuclei import NucleiReport
from yarts.signature import GeoSignature


def make_signature(**overrides):
    """A maximum scattered signature of pseudoregulus type at q = 5, n = 3."""
    data = dict(
        label="synthetic",
        q=5,
        n=3,
        rank=6,
        nuclei=NucleiReport(125, 5, 25, 5, "spreadset"),
        size=3906,
        spectrum=(3906, 0, 0),
        scattered=True,
        long_line_mode="exhaustive",
        long_line_count=126,
        long_line_weights=(3,) * 126,
        long_line_pr=(True,) * 126,
        pseudoregulus=True,
        transversal_classes=("external", "external"),
        transversals_polar=True,
        transversal_consistent=True,
        disjoint_from_quadric=True,
        span_dimension=4,
        in_plane=False,
        cone=False,
        named_lines=(),
    )
    data.update(overrides)
    return GeoSignature(**data)


def reasons_of(verdict, name):
    return [reason.invariant for family in verdict.families if family.name == name for reason in family.reasons]


def test_table_applicability():
    names = {record.name: record.applicable for record in known_table(5, 3)}
    assert names["TP"] is False
    assert names["EMPT2"] is False
    assert names["GD scattered, s ≠ t, s + t ≠ n"] is False
    assert names["JMPT"] is True
    assert {record.name: record.applicable for record in known_table(3, 4)}["EMPT2"] is True


def test_only_gtf_survives():
    verdict = distinguish(make_signature())
    assert verdict.compatible() == ["GTF"]
    assert verdict.status_of("K17") == "excluded"
    assert verdict.status_of("TP") == "not-applicable"
    assert reasons_of(verdict, "K17")[0] == "nuclei (middle, right)"
    assert verdict.to_json()["families"]["GTF"]["status"] == COMPATIBLE


def test_transversal_position_excludes_gtf():
    verdict = distinguish(make_signature(transversal_classes=("contained", "contained")))
    assert verdict.status_of("GTF") == "excluded"
    assert reasons_of(verdict, "GTF") == ["transversal lines vs quadric"]


def test_candidate_mode_is_undetermined():
    sig = make_signature(
        long_line_mode="candidates",
        pseudoregulus=None,
        transversal_classes=(),
        transversals_polar=None,
        transversal_consistent=None,
    )
    verdict = distinguish(sig)
    assert verdict.status_of("GTF") == "undetermined"
    assert verdict.compatible() == []


def test_non_pseudoregulus_exclusion_records_the_mode():
    sig = make_signature(long_line_mode="candidates", pseudoregulus=False, long_line_pr=(False, True))
    verdict = distinguish(sig)
    gtf = next(family for family in verdict.families if family.name == "GTF")
    assert gtf.status == "excluded"
    assert gtf.reasons[0].invariant == "pseudoregulus type"
    assert gtf.reasons[0].mode == "candidates"
    assert gtf.reasons[0].citation


def test_heavy_points():
    base = dict(
        q=3,
        n=3,
        size=352,
        nuclei=NucleiReport(27, 9, 9, 9, "spreadset"),
        scattered=False,
        pseudoregulus=False,
        transversal_classes=(),
        transversals_polar=None,
    )
    enough = distinguish(make_signature(spectrum=(348, 4, 0), **base))
    assert enough.status_of("JMPT") == "compatible"
    too_few = distinguish(make_signature(spectrum=(361, 1, 0), **base))
    assert reasons_of(too_few, "JMPT") == ["points of weight ≥ 2"]


def test_shape():
    sig = make_signature(
        nuclei=NucleiReport(125, 5, 5, 5, "spreadset"),
        scattered=False,
        pseudoregulus=False,
        in_plane=True,
        cone=True,
        transversal_classes=(),
        transversals_polar=None,
    )
    verdict = distinguish(sig)
    assert verdict.status_of("GD(s=0 or t=0)") == "compatible"


def test_missing_nuclei_are_undetermined():
    verdict = distinguish(make_signature(nuclei=None))
    assert verdict.status_of("GTF") == "undetermined"
    # the transversal rule still applies without nuclei
    assert reasons_of(verdict, "K17") == ["transversal lines vs quadric"]


def test_gtf_formula():
    assert gtf_printed_nuclei(5, 3, 1) == (25, 5)
    assert gtf_nuclei_discrepancy(5, 3, 1, (25, 5)) is None
    message = gtf_nuclei_discrepancy(5, 3, 1, (5, 25))
    assert "printed formula gives (25, 5)" in message


def test_rule_order_needs_rules():
    with pytest.raises(ValueError):
        rule("bad", after=["nuclei"])


def test_signature_is_frozen():
    with pytest.raises(dataclasses.FrozenInstanceError):
        make_signature().size = 1


def test_non_scattered_dickson_needs_composite_n():
    for n in (3, 5, 7):
        names = {record.name: record.applicable for record in known_table(5, n)}
        assert names["GD non-scattered"] is False


def test_weight_two_points_exclude_non_scattered_dickson():
    sig = make_signature(
        n=9,
        nuclei=NucleiReport(5**9, 5, 5, 5, "spreadset"),
        spectrum=(1000, 26, 0, 0, 0, 0, 0, 0, 0),
        scattered=False,
        pseudoregulus=False,
        transversal_classes=(),
        transversals_polar=None,
    )
    verdict = distinguish(sig)
    # (s, t) = (3, 1) has nuclei (q, q), so only the weights rule can exclude it
    assert reasons_of(verdict, "GD non-scattered") == ["weights above 1"]
