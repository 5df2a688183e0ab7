import numpy as np
import pytest

from yarts.errors import ParameterError
from yarts.ffield import make_field
from yarts.linpoly import monomial
from yarts.linset import (
    build_linear_set,
    build_Lst,
    coordinate_swap_keys,
    cone_vertex,
    disjoint_from_Q,
    graph_linear_set,
    is_graph_shape,
    line_weight,
    long_lines,
    span_dimension,
    translation_dual,
    weight_spectrum,
)
from yarts.presemifield import PresemifieldSpec, build_family
from yarts.projective import r1, r1_perp


@pytest.fixture(scope="module")
def dA():
    return build_family(PresemifieldSpec.from_json({"family": "dA", "p": 3, "n": 3, "a": "g"}))


@pytest.fixture(scope="module")
def L(dA):
    return build_linear_set(dA)


def test_dA_linear_set(L):
    assert L.rank == 6
    assert L.size == 352
    assert weight_spectrum(L) == (348, 4, 0)
    assert L.max_weight() == 2
    assert not L.is_scattered()


def test_points_are_off_the_quadric(L):
    # the points are the nonzero matrices of a spread set
    assert disjoint_from_Q(L)


def test_shape(L):
    assert span_dimension(L) == 4
    assert cone_vertex(L) is None


def test_r1_and_r1_perp_are_long(L):
    assert line_weight(L, r1(L.ctx)) == 3
    assert line_weight(L, r1_perp(L.ctx)) == 3


def test_transpose_swaps_coordinates(dA, L):
    transposed = build_linear_set(dA.transpose())
    assert np.array_equal(transposed.keys, coordinate_swap_keys(L))


def test_translation_dual(dA, L):
    dual = translation_dual(dA)
    assert dual.label == "dA^perp"
    assert is_graph_shape(dual)
    assert weight_spectrum(build_linear_set(dual)) == weight_spectrum(L)


def test_graph_of_frobenius_is_scattered():
    ctx = make_field(3, 1, 3)
    L = graph_linear_set(ctx, monomial(ctx, 1))
    assert L.size == 13
    assert L.is_scattered()


def test_Lst_is_scattered():
    L = build_Lst(make_field(2, 1, 5), 1, 1)
    assert L.size == 1023
    assert L.is_scattered()
    assert weight_spectrum(L) == (1023, 0, 0, 0, 0)


@pytest.mark.slow
def test_Lst_long_lines():
    ctx = make_field(2, 1, 5)
    assert len(long_lines(build_Lst(ctx, 1, 1))) == 33
    assert len(long_lines(build_Lst(ctx, 1, 2))) == 2


def test_long_line_modes(L):
    with pytest.raises(ParameterError):
        long_lines(L, "guess")
    found = long_lines(L, "candidates")
    assert not found.exhaustive
    assert found.to_json()["exact"] is False
