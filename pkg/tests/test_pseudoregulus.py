import pytest

from yarts.errors import IncompleteLongLines, ParameterError
from yarts.ffield import make_field
from yarts.linpoly import monomial, zero_poly
from yarts.linset import build_Lst, graph_linear_set, long_lines
from yarts.pseudoregulus import (
    coprime_exponents,
    line_pr_test,
    line_pr_test_graph,
    line_pr_test_pair,
    space_pr_test,
)


@pytest.fixture
def f125():
    return make_field(5, 1, 3)


def test_coprime_exponents():
    assert coprime_exponents(5) == [1, 2, 3, 4]
    assert coprime_exponents(6) == [1, 5]


def test_frobenius_graph(f125):
    verdict = line_pr_test_graph(monomial(f125, 1))
    assert verdict.pseudoregulus
    assert verdict.m == 1
    assert verdict.to_json()["method"] == "graph"


def test_non_scattered_graph(f125):
    with pytest.raises(ParameterError):
        line_pr_test_graph(zero_poly(f125))
    verdict = line_pr_test_graph(zero_poly(f125), strict=False)
    assert not verdict.pseudoregulus
    assert verdict.reason == "not scattered"


def test_line_linear_set(f125):
    L = graph_linear_set(f125, monomial(f125, 2, f125.generator))
    assert line_pr_test(L).pseudoregulus


def test_transversal_pair(f125):
    L = graph_linear_set(f125, monomial(f125, 1))
    verdict = line_pr_test_pair(L, f125.GF([1, 0]), f125.GF([0, 1]))
    assert verdict.pseudoregulus
    assert verdict.m == 1


def test_space_test_needs_exhaustive_lines():
    L = build_Lst(make_field(2, 1, 5), 1, 1)
    with pytest.raises(IncompleteLongLines):
        space_pr_test(L, long_lines(L, "candidates"))


@pytest.mark.slow
def test_space_test():
    L = build_Lst(make_field(2, 1, 5), 1, 1)
    verdict = space_pr_test(L, long_lines(L))
    assert verdict.pseudoregulus
    assert len(verdict.transversals) == 2
