import numpy as np
import pytest

from yarts.errors import ParameterError
from yarts.ffield import make_field
from yarts.presemifield import (
    PresemifieldSpec,
    build_family,
    default_xi,
    dempwolff_condition,
    dempwolff_maps,
    dempwolff_transpose,
    multiply,
    normalize_spread,
    swap_isotope,
    transpose_spread,
    zero_divisor_check,
)


def dA(**params):
    return PresemifieldSpec.from_json({"family": "dA", "p": 3, "n": 3, "a": "g", **params})


def test_spec_rejects_unknown_keys():
    with pytest.raises(ParameterError, match="unknown spec keys: q"):
        PresemifieldSpec.from_json({"family": "dA", "p": 3, "q": 3})


def test_spec_json_skips_unset():
    assert dA().to_json() == {"family": "dA", "p": 3, "h": 1, "n": 3, "r": 1, "a": "g"}


def test_dA_is_a_presemifield():
    spec = dA()
    S = build_family(spec)
    assert S.label == "dA"
    assert dempwolff_condition(*dempwolff_maps(S.ctx, spec)).holds
    assert zero_divisor_check(S)


def test_default_xi_is_a_nonsquare_of_fq():
    ctx = make_field(5, 1, 3)
    xi = default_xi(ctx)
    assert int(xi) == 2
    assert xi ** 2 != 1


def test_first_row_is_the_parameter():
    S = build_family(dA())
    ctx = S.ctx
    x = ctx.elements
    y = ctx.elements[::-1]
    first, second = multiply(S, 1, 0, x, y)
    assert np.all(first == x)
    assert np.all(second == y)


def test_transpose_is_dempwolff_with_inverse():
    spec = dA()
    S = build_family(spec)
    F1, F2, xi = dempwolff_maps(S.ctx, spec)
    T = dempwolff_transpose(F1, F2, xi)
    # both spread sets must be the same F_p-space of matrices
    assert np.all(S.transpose().spread_set().contains(T.spread_set().basis))
    assert np.all(T.spread_set().contains(S.transpose().spread_set().basis))


def test_normalized_spread_set_contains_identity():
    spread = build_family(dA()).spread_set()
    assert normalize_spread(spread).is_normalized()
    assert normalize_spread(spread.transpose()).is_normalized()


@pytest.mark.parametrize(
    "data, message",
    [
        ({"family": "dB", "p": 3, "b": "g"}, "N_q\\(b\\) ∈ \\{±1\\} for all b when q=3"),
        ({"family": "dA", "p": 3, "a": "1"}, "N_q\\(a\\) = 1"),
        ({"family": "dA", "p": 3, "n": 4, "a": "g"}, "n ≥ 3 odd"),
        ({"family": "dA", "p": 2, "a": "g"}, "q odd"),
        ({"family": "dA", "p": 5, "r": 3, "a": "g"}, "gcd\\(r, n\\) = 3"),
        ({"family": "dA", "p": 5, "a": "g", "xi": "1"}, "is a square"),
        ({"family": "gd", "p": 3, "n": 4}, "\\(s, t\\) ≠ \\(0, 0\\)"),
        ({"family": "gd", "p": 3, "n": 4, "s": 2, "t": 2}, "gcd\\(s, t, n\\) = 1"),
        ({"family": "nope", "p": 3}, "unknown family"),
        ({"family": "custom", "p": 3}, "needs entries"),
    ],
)
def test_family_constraints(data, message):
    with pytest.raises(ParameterError, match=message):
        build_family(PresemifieldSpec.from_json(data))


def test_dAB_pairs_A_of_b_squared_with_B_minus_r():
    spec = PresemifieldSpec.from_json({"family": "dAB", "p": 5, "n": 3, "b": "g"})
    ctx = make_field(5, 1, 3)
    F1, F2, xi = dempwolff_maps(ctx, spec)
    x = ctx.elements
    g = ctx.generator
    assert np.all(F1(x) == ctx.frobenius(x, 1) - g * g * ctx.frobenius(x, -1))
    assert dempwolff_condition(F1, F2, xi).holds


def test_knuth_and_dickson_are_presemifields():
    for data in (
        {"family": "k17", "p": 3, "n": 3},
        {"family": "gd", "p": 3, "n": 3, "s": 1, "t": 2},
    ):
        assert zero_divisor_check(build_family(PresemifieldSpec.from_json(data)))


def test_transpose_spread():
    S = build_family(dA())
    assert transpose_spread(S).label == "dA^T"
    assert transpose_spread(S.spread_set()).label == "dA^T"


def test_swap_isotope_is_a_presemifield():
    spec = PresemifieldSpec.from_json({"family": "dAB", "p": 5, "n": 3, "b": "g"})
    F1, F2, xi = dempwolff_maps(make_field(5, 1, 3), spec)
    swapped = swap_isotope(F1, F2, xi)
    assert swapped.m21.gy == F2
    assert zero_divisor_check(swapped)
