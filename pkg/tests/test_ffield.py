import numpy as np
import pytest

from yarts.errors import CapExceeded, ParameterError
from yarts.ffield import format_element, gcd, make_field, parse_element, quad_ext


@pytest.fixture
def f27():
    return make_field(3, 1, 3)


def test_tower(f27):
    assert f27.q == 3
    assert f27.order == 27
    assert f27.degree == 3
    assert len(f27.elements) == 27
    assert len(np.unique(f27.elements.view(np.ndarray))) == 27


def test_frobenius_has_order_n(f27):
    xs = f27.elements
    assert np.all(f27.frobenius(xs, 3) == xs)
    assert not np.all(f27.frobenius(xs, 1) == xs)


def test_trace_and_norm_land_in_fq(f27):
    xs = f27.elements
    assert np.all(f27.subfield_test(f27.trace_q(xs), 1))
    assert np.all(f27.subfield_test(f27.norm_q(xs), 1))


def test_norm_of_generator_is_minus_one_for_q3(f27):
    assert f27.norm_q(f27.generator) == -f27.one()


def test_least_fq_nonsquare(f27):
    assert int(f27.least_fq_nonsquare()) == 2


def test_parse_element(f27):
    g = f27.generator
    assert parse_element(f27, "0") == 0
    assert parse_element(f27, "-1") == -f27.one()
    assert parse_element(f27, "g") == g
    assert parse_element(f27, "g^5") == g**5
    assert parse_element(f27, "-g^2") == -(g**2)
    assert parse_element(f27, "g^-1") == g**25
    assert parse_element(f27, "[0, 1]") == g


@pytest.mark.parametrize("text", ["h", "g^", "[3]", "[1,1,1,1]"])
def test_parse_element_rejects(f27, text):
    with pytest.raises(ParameterError):
        parse_element(f27, text)


def test_format_element(f27):
    assert format_element(f27, f27.zero()) == "0"
    assert format_element(f27, f27.generator**7) == "g^7"


def test_make_field_checks():
    with pytest.raises(ParameterError):
        make_field(4, 1, 2)
    with pytest.raises(CapExceeded):
        make_field(2, 1, 30)


def test_quadratic_extension_norm_is_multiplicative():
    qext = quad_ext(make_field(3, 1, 1))
    a = qext.elements()
    b = (a[0][::-1], a[1][::-1])
    assert np.all(qext.norm(qext.mul(a, b)) == qext.norm(a) * qext.norm(b))


def test_quadratic_extension_frobenius_is_conjugation():
    ctx = make_field(3, 1, 1)
    qext = quad_ext(ctx)
    a = qext.elements()
    # z^(q^n) with q^n = 3 here
    frob = qext.frobenius(a, 1)
    conj = qext.conj(a)
    assert np.all(frob[0] == conj[0]) and np.all(frob[1] == conj[1])


def test_gcd():
    assert gcd(4, 6, 9) == 1
    assert gcd(6, 9) == 3


def test_dlog(f27):
    assert int(f27.dlog(f27.generator**5)) == 5
    assert int(f27.dlog(f27.one())) == 0
    with pytest.raises(ParameterError):
        f27.dlog(f27.zero())


def test_enumeration_order(f27):
    elements = list(f27.enumerate_field())
    assert len(elements) == 27
    assert elements[0] == 0
    assert elements[1] == 1
    assert elements[2] == f27.generator
