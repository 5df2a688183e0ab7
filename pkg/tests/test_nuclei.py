import pytest

from yarts.errors import CapExceeded, ParameterError
from yarts.nuclei import compute_nuclei
from yarts.presemifield import PresemifieldSpec, build_family


def spread(data):
    return build_family(PresemifieldSpec.from_json(data)).spread_set()


@pytest.fixture
def dA():
    return spread({"family": "dA", "p": 3, "n": 3, "a": "g"})


def test_dA_spreadset(dA):
    report = compute_nuclei(dA)
    assert report.as_tuple() == (27, 3, 9, 3)
    assert report.to_json()["unit"] == "e = (1, 0)"


def test_dA_sampled(dA):
    assert compute_nuclei(dA, "sampled", seed=3).as_tuple() == (27, 3, 9, 3)


@pytest.mark.slow
def test_dA_bruteforce(dA):
    assert compute_nuclei(dA, "bruteforce").as_tuple() == (27, 3, 9, 3)


@pytest.mark.slow
@pytest.mark.parametrize(
    "data",
    [
        {"family": "dA", "p": 3, "n": 3, "a": "g"},
        {"family": "k17", "p": 3, "n": 3},
        {"family": "gd", "p": 3, "n": 3, "s": 1, "t": 2},
    ],
)
def test_bruteforce_agrees_with_fast_paths(data):
    S = spread(data)
    expected = compute_nuclei(S, "bruteforce").as_tuple()
    assert compute_nuclei(S).as_tuple() == expected
    assert compute_nuclei(S.transpose()).as_tuple() == compute_nuclei(S.transpose(), "bruteforce").as_tuple()
    assert compute_nuclei(S, "sampled").as_tuple() == expected


def test_transpose_swaps_middle_and_right(dA):
    report = compute_nuclei(dA)
    transposed = compute_nuclei(dA.transpose())
    assert (transposed.middle, transposed.right) == (report.right, report.middle)


def test_knuth17():
    S = spread({"family": "k17", "p": 3, "n": 3})
    assert compute_nuclei(S).middle == 27
    assert compute_nuclei(S.transpose()).right == 27


def test_dB_q5():
    S = spread({"family": "dB", "p": 5, "n": 3, "b": "g"})
    assert compute_nuclei(S).as_tuple() == (125, 5, 25, 5)


def test_bruteforce_cap():
    S = spread({"family": "dB", "p": 5, "n": 3, "b": "g"})
    with pytest.raises(CapExceeded):
        compute_nuclei(S, "bruteforce")


def test_unknown_method(dA):
    with pytest.raises(ParameterError):
        compute_nuclei(dA, "guess")


def test_dAB_q5():
    S = spread({"family": "dAB", "p": 5, "n": 3, "b": "g"})
    assert compute_nuclei(S).as_tuple() == (125, 5, 5, 5)
