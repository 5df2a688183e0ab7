"""
Linearized polynomials.

A `LinearizedPoly` is the q-polynomial x ↦ Σ a_i x^(q^i), i < n, which
is the unique canonical form of an F_q-linear map of F_{q^n}. Inversion and
kernels go through the F_p-matrix of the map; interpolation goes through
the Moore matrix of an F_q-basis.
"""

import dataclasses
import functools
import math
import warnings

import numpy as np

from .errors import NonLinearTableError, ParameterError, ParameterWarning, SingularMapError
from .ffield import format_element, parse_element


@dataclasses.dataclass(frozen=True, eq=False)
class LinearizedPoly:
    """An F_q-linear map of F_{q^n} in q-polynomial form."""

    ctx: object
    coeffs: object

    def __post_init__(self):
        coeffs = self.ctx.element(self.coeffs)
        if coeffs.shape != (self.ctx.n,):
            raise ParameterError(
                f"a linearized polynomial over {self.ctx!r} needs {self.ctx.n} coefficients"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def key(self):
        return self.ctx.key, tuple(int(c) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LinearizedPoly):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"LinearizedPoly({to_text(self)})"

    def __call__(self, x):
        return lp_eval(self, x)

    def __add__(self, other):
        _check_same_ctx(self, other)
        return LinearizedPoly(self.ctx, self.coeffs + other.coeffs)

    def __sub__(self, other):
        _check_same_ctx(self, other)
        return LinearizedPoly(self.ctx, self.coeffs - other.coeffs)

    def __neg__(self):
        return LinearizedPoly(self.ctx, -self.coeffs)

    def scale(self, c):
        """The map x ↦ c·f(x)."""
        return LinearizedPoly(self.ctx, self.ctx.element(c) * self.coeffs)

    def is_zero(self):
        return not np.any(self.coeffs.view(np.ndarray))

    @functools.cached_property
    def table(self):
        """Values on every element, in the context's enumeration order."""
        return lp_eval(self, self.ctx.elements)


def _check_same_ctx(f, g):
    if not f.ctx.same_as(g.ctx):
        raise ParameterError(f"context mismatch: {f.ctx!r} and {g.ctx!r}")


def zero_poly(ctx):
    return LinearizedPoly(ctx, ctx.GF.Zeros(ctx.n))


def monomial(ctx, r, c=1):
    """The map x ↦ c·x^(q^r)."""
    coeffs = ctx.GF.Zeros(ctx.n)
    coeffs[r % ctx.n] = ctx.element(c)
    return LinearizedPoly(ctx, coeffs)


def identity(ctx):
    return monomial(ctx, 0)


def lp_eval(f, x):
    """Evaluate a linearized polynomial at one element or an array of them."""
    x = f.ctx.element(x)
    result = f.ctx.GF.Zeros(x.shape)
    for i, a in enumerate(f.coeffs):
        if a != 0:
            result = result + a * x ** (f.ctx.q**i)
    return result


def lp_interpolate(ctx, xs, ys):
    """
    Recover the q-polynomial taking the values ys on an F_q-basis xs.

    Solves the Moore system Σ_i a_i x_j^(q^i) = y_j.
    """
    xs = ctx.element(xs)
    ys = ctx.element(ys)
    if xs.shape != (ctx.n,) or ys.shape != (ctx.n,):
        raise ParameterError(f"interpolation needs exactly {ctx.n} points")
    moore = ctx.GF(
        np.stack([(xs ** (ctx.q**i)).view(np.ndarray) for i in range(ctx.n)], axis=1)
    )
    try:
        coeffs = np.linalg.solve(moore, ys)
    except np.linalg.LinAlgError:
        raise ParameterError("interpolation points are not an F_q-basis") from None
    return LinearizedPoly(ctx, coeffs)


def lp_from_table(ctx, table):
    """
    Interpolate a map given by its full value table (enumeration order).

    The result is checked against every entry of the table.
    """
    table = ctx.element(table)
    if table.shape != (ctx.order,):
        raise ParameterError(f"a value table needs {ctx.order} entries")
    # fq_basis[i] = g^i sits at enumeration index i + 1
    f = lp_interpolate(ctx, ctx.fq_basis, table[1 : ctx.n + 1])
    if not np.array_equal(f.table.view(np.ndarray), table.view(np.ndarray)):
        raise NonLinearTableError("the value table is not F_q-linear")
    return f


def lp_from_fp_pairs(ctx, xs, ys):
    """
    Interpolate an F_q-linear map from its values ys on an F_p-basis xs.

    Raises NonLinearTableError if the pairs describe an F_p-linear map that
    is not F_q-linear, and ParameterError if xs is not an F_p-basis.
    """
    xs = ctx.element(xs)
    ys = ctx.element(ys)
    if xs.shape != (ctx.degree,) or ys.shape != (ctx.degree,):
        raise ParameterError(f"F_p interpolation needs exactly {ctx.degree} pairs")
    basis_coords = ctx.coords(xs)
    try:
        inverse = np.linalg.inv(basis_coords)
    except np.linalg.LinAlgError:
        raise ParameterError("the points are not an F_p-basis") from None
    # Row j of `mixing` writes fq_basis[j] in terms of xs
    mixing = ctx.coords(ctx.fq_basis) @ inverse
    values = ctx.embed_prime(mixing.view(np.ndarray)) @ ys
    f = lp_interpolate(ctx, ctx.fq_basis, values)
    if not np.array_equal(f(xs).view(np.ndarray), ys.view(np.ndarray)):
        raise NonLinearTableError("the map is F_p-linear but not F_q-linear")
    return f


def lp_compose(f, g):
    """The q-polynomial of x ↦ f(g(x))."""
    _check_same_ctx(f, g)
    ctx = f.ctx
    n = ctx.n
    coeffs = ctx.GF.Zeros(n)
    for i in range(n):
        if f.coeffs[i] == 0:
            continue
        # f_i (Σ_j g_j x^(q^j))^(q^i) = Σ_j f_i g_j^(q^i) x^(q^(i+j))
        twisted = f.coeffs[i] * g.coeffs ** (ctx.q**i)
        coeffs = coeffs + twisted[(np.arange(n) - i) % n]
    return LinearizedPoly(ctx, coeffs)


def lp_matrix(f):
    """F_p matrix M of the map: coords(f(x)) = M @ coords(x)."""
    return f.ctx.coords(f(f.ctx.fp_basis)).T


def lp_rank(f):
    """Return (rank over F_q, F_p-basis of the kernel as field elements)."""
    matrix = lp_matrix(f)
    rank_p = np.linalg.matrix_rank(matrix)
    kernel = matrix.null_space()
    if kernel.shape[0] == 0:
        return rank_p // f.ctx.h, f.ctx.GF.Zeros(0)
    return rank_p // f.ctx.h, f.ctx.from_coords(kernel.view(np.ndarray))


def lp_inverse(f):
    """Compositional inverse of a bijective linearized polynomial."""
    ctx = f.ctx
    rank, _ = lp_rank(f)
    if rank < ctx.n:
        raise SingularMapError(f"{to_text(f)} is not bijective", ctx.n - rank)
    inverse = np.linalg.inv(lp_matrix(f))
    preimages = ctx.from_coords((inverse @ ctx.coords(ctx.fq_basis).T).T.view(np.ndarray))
    return lp_interpolate(ctx, ctx.fq_basis, preimages)


def lp_adjoint(f):
    """
    The adjoint with respect to the trace form.

    Coefficient a_i moves to index n - i and is raised to q^(n - i), so that
    Tr(x·f(y)) = Tr(adjoint(f)(x)·y).
    """
    ctx = f.ctx
    n = ctx.n
    coeffs = ctx.GF.Zeros(n)
    for i in range(n):
        j = (n - i) % n
        coeffs[j] = f.coeffs[i] ** (ctx.q**j)
    return LinearizedPoly(ctx, coeffs)


def family_A(ctx, a, r):
    """A_{a,r}(x) = x^(q^r) - a·x^(q^(-r))."""
    a = ctx.element(a)
    if math.gcd(r, ctx.n) != 1:
        warnings.warn(f"A_{{a,r}} with gcd(r, n) = {math.gcd(r, ctx.n)}", ParameterWarning)
    if ctx.norm_q(a) == 1:
        warnings.warn("A_{a,r} with N_q(a) = 1", ParameterWarning)
    return monomial(ctx, r) - monomial(ctx, -r, a)


def family_H(ctx, b, r):
    """H_{b,r}(x) = x - b·x^(q^r)."""
    return identity(ctx) - monomial(ctx, r, b)


def family_B(ctx, b, r):
    """B_{b,r}(x) = 2·H_{b,r}^(-1)(x) - x."""
    if ctx.p == 2:
        raise ParameterError("B_{b,r} needs odd characteristic")
    b = ctx.element(b)
    if math.gcd(r, ctx.n) != 1:
        warnings.warn(f"B_{{b,r}} with gcd(r, n) = {math.gcd(r, ctx.n)}", ParameterWarning)
    if ctx.norm_q(b) == -ctx.one():
        warnings.warn("B_{b,r} with N_q(b) = -1", ParameterWarning)
    h_inverse = lp_inverse(family_H(ctx, b, r))
    return h_inverse.scale(2) - identity(ctx)


def to_text(f):
    """Format as "a_0 X^[0] + a_1 X^[1] + ..." skipping zero terms."""
    terms = [
        f"{format_element(f.ctx, a)} X^[{i}]"
        for i, a in enumerate(f.coeffs)
        if a != 0
    ]
    return " + ".join(terms) if terms else "0"


def to_json(f):
    return [format_element(f.ctx, a) for a in f.coeffs]


def from_json(ctx, items):
    return LinearizedPoly(ctx, ctx.GF([int(parse_element(ctx, item)) for item in items]))
