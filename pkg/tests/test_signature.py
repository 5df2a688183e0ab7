import pytest

from yarts.linset import build_linear_set
from yarts.presemifield import PresemifieldSpec, build_family
from yarts.signature import linear_set_signature, signature


@pytest.fixture(scope="module")
def dA():
    return build_family(PresemifieldSpec.from_json({"family": "dA", "p": 3, "n": 3, "a": "g"}))


@pytest.fixture(scope="module")
def sig(dA):
    return signature(dA)


def test_dA_signature(sig):
    assert (sig.q, sig.n, sig.rank) == (3, 3, 6)
    assert sig.size == 352
    assert sig.spectrum == (348, 4, 0)
    assert not sig.scattered
    assert sig.pseudoregulus is False
    assert sig.long_line_mode == "exhaustive"
    assert sig.disjoint_from_quadric
    assert not sig.in_plane
    assert not sig.cone
    assert sig.nuclei.as_tuple() == (27, 3, 9, 3)
    assert sig.named_line("r1")["weight"] == 3
    assert set(sig.named_line("r1_perp")) == {"weight", "pseudoregulus"}


def test_heavy_points(sig):
    assert sig.heavy_points(1) == 352
    assert sig.heavy_points(2) == 4
    assert sig.heavy_points(3) == 0


def test_invariants_leave_out_presentation(sig):
    invariants = sig.invariants()
    assert "label" not in invariants
    assert "named_lines" not in invariants
    assert "method" not in invariants["nuclei"]
    assert invariants["long_lines"]["exact"] is True


def test_transpose_has_the_same_geometry(dA, sig):
    transposed = linear_set_signature(build_linear_set(dA.transpose()))
    expected = sig.invariants()
    expected["nuclei"] = None
    assert transposed.invariants() == expected
