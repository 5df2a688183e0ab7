import numpy as np
import pytest

from yarts.errors import ParameterError
from yarts.ffield import make_field
from yarts.projective import (
    bilinear_form,
    classify_line,
    line_through,
    lines_meet,
    meet_point,
    perp,
    plucker,
    quadric,
    r1,
    r1_perp,
)


@pytest.fixture
def f9():
    return make_field(3, 1, 2)


def test_r1_perp_is_polar_of_r1(f9):
    assert perp(r1(f9)) == r1_perp(f9)
    assert perp(r1_perp(f9)) == r1(f9)


def test_line_has_q_plus_one_points(f9):
    points = r1(f9).points()
    assert len(points) == 10
    assert len({tuple(int(x) for x in p) for p in points}) == 10


def test_classify(f9):
    assert classify_line(r1(f9)) == "secant"
    assert classify_line(r1_perp(f9)) == "secant"
    assert classify_line(line_through(f9, [1, 0, 0, 0], [0, 1, 0, 0])) == "contained"


def test_contained_line_is_self_polar(f9):
    line = line_through(f9, [1, 0, 0, 0], [0, 1, 0, 0])
    assert perp(line) == line
    assert np.all(quadric(line.points()) == 0)


def test_meet(f9):
    assert meet_point(f9, r1(f9), r1_perp(f9)) is None
    point = meet_point(f9, r1(f9), line_through(f9, [1, 0, 0, 0], [0, 1, 0, 0]))
    assert [int(x) for x in point] == [1, 0, 0, 0]


def test_plucker_meet(f9):
    a = plucker(r1(f9).rows)
    b = plucker(r1_perp(f9).rows)
    c = plucker(line_through(f9, [1, 0, 0, 0], [0, 1, 0, 0]).rows)
    assert not lines_meet(a, b)
    assert lines_meet(a, c)
    assert lines_meet(b, c)


def test_line_through_dependent_vectors(f9):
    with pytest.raises(ParameterError):
        line_through(f9, [1, 0, 0, 0], [2, 0, 0, 0])


def test_polar_lines_are_orthogonal(f9):
    a = r1(f9).points()
    b = r1_perp(f9).points()
    assert np.all(bilinear_form(a[:, np.newaxis], b[np.newaxis]) == 0)
    assert not np.all(bilinear_form(a[:, np.newaxis], a[np.newaxis]) == 0)
