import numpy as np
import pytest

from yarts.errors import NonLinearTableError, ParameterWarning, SingularMapError
from yarts.ffield import make_field
from yarts.linpoly import (
    family_A,
    family_B,
    family_H,
    identity,
    lp_adjoint,
    lp_compose,
    lp_from_fp_pairs,
    lp_from_table,
    lp_inverse,
    lp_rank,
    monomial,
    to_text,
)


@pytest.fixture
def f125():
    return make_field(5, 1, 3)


def test_inverse(f125):
    A = family_A(f125, f125.generator, 1)
    assert lp_compose(A, lp_inverse(A)) == identity(f125)
    assert lp_compose(lp_inverse(A), A) == identity(f125)


def test_inverse_undoes_H_everywhere(f125):
    H = family_H(f125, f125.generator, 1)
    inverse = lp_inverse(H)
    x = f125.elements
    assert np.all(H(inverse(x)) == x)
    assert np.all(inverse(H(x)) == x)
    assert inverse != H


def test_singular_map(f125):
    H = family_H(f125, 1, 1)
    rank, kernel = lp_rank(H)
    assert rank == 2
    assert np.all(H(kernel) == 0)
    with pytest.raises(SingularMapError) as e:
        lp_inverse(H)
    assert e.value.kernel_dimension == 1


def test_B_from_H(f125):
    b = f125.generator
    H = family_H(f125, b, 1)
    B = family_B(f125, b, 1)
    # H ∘ (2 H^(-1) - 1) = 2 - H
    assert lp_compose(H, B) + H == identity(f125).scale(2)
    x = f125.elements
    assert np.all(B(H(x)) == 2 * x - H(x))


def test_B_warns_on_norm_minus_one(f125):
    b = f125.generator**2
    assert f125.norm_q(b) == -f125.one()
    with pytest.warns(ParameterWarning):
        family_B(f125, b, 1)


def test_adjoint_trace_identity(f125):
    rng = np.random.default_rng(1)
    f = monomial(f125, 1, f125.generator) + monomial(f125, 2, f125.generator**3)
    x = f125.random(40, rng)
    y = f125.random(40, rng)
    adjoint = lp_adjoint(f)
    assert np.all(f125.trace_q(x * f(y)) == f125.trace_q(adjoint(x) * y))
    assert lp_adjoint(adjoint) == f


def test_interpolation_from_table(f125):
    f = family_A(f125, f125.generator**5, 1)
    assert lp_from_table(f125, f.table) == f


def test_interpolation_from_fp_pairs(f125):
    f = family_A(f125, f125.generator**5, 2)
    xs = f125.fp_basis * f125.generator
    assert lp_from_fp_pairs(f125, xs, f(xs)) == f


def test_nonlinear_table(f125):
    with pytest.raises(NonLinearTableError):
        lp_from_table(f125, f125.elements**2)


def test_to_text(f125):
    assert to_text(identity(f125)) == "g^0 X^[0]"
    assert to_text(monomial(f125, 1, 0)) == "0"
