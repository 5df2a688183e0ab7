"""
Rank-two presemifields as spread sets.

A presemifield on F_{q^n} × F_{q^n} multiplies as (u,v)∗(x,y) = (u,v)·M(x,y)
where every entry of the 2×2 matrix M(x,y) is F_q-linear in (x,y). A
`SpreadMap` holds the four entries as pairs of linearized polynomials; a
`SpreadSet` is the F_p-basis of the resulting F_p-space of matrices, which
is what every invariant computation consumes.

Matrices are stored flat as (m11, m12, m21, m22) along the last axis, which
is also the point (X0, X1, X2, X3) of the associated linear set.
"""

import dataclasses
import functools
import math

import numpy as np

from . import progress, span
from .errors import CapExceeded, InvariantViolation, ParameterError
from .ffield import LOOKUP_CAP, format_element, gcd, make_field, parse_element, quad_ext
from .linpoly import (
    LinearizedPoly,
    family_A,
    family_B,
    from_json,
    identity,
    lp_inverse,
    monomial,
    to_json,
    zero_poly,
)

FAMILIES = ("dA", "dB", "dAB", "k17", "k19", "gd", "gtf", "custom")
DEMPWOLFF_FAMILIES = ("dA", "dB", "dAB")

ZERO_DIVISOR_SEARCH_CAP = 3**6
GTF_SAMPLES = 256


# -- 2×2 matrices over F_{q^n}, stored flat -------------------------------


def mat_mul(a, b):
    """Multiply flat 2×2 matrices, broadcasting over leading axes."""
    a11, a12, a21, a22 = (a[..., i] for i in range(4))
    b11, b12, b21, b22 = (b[..., i] for i in range(4))
    return _stack(
        a11 * b11 + a12 * b21,
        a11 * b12 + a12 * b22,
        a21 * b11 + a22 * b21,
        a21 * b12 + a22 * b22,
    )


def mat_det(a):
    return a[..., 0] * a[..., 3] - a[..., 1] * a[..., 2]


def mat_inv(a):
    det = mat_det(a)
    return _stack(a[..., 3] / det, -a[..., 1] / det, -a[..., 2] / det, a[..., 0] / det)


def mat_transpose(a):
    return a[..., [0, 2, 1, 3]]


def row_times(v, a):
    """Row vectors (..., 2) times flat matrices (..., 4)."""
    return _stack(v[..., 0] * a[..., 0] + v[..., 1] * a[..., 2], v[..., 0] * a[..., 1] + v[..., 1] * a[..., 3])


def _stack(*columns):
    field = type(columns[0])
    return field(np.stack([c.view(np.ndarray) for c in np.broadcast_arrays(*columns)], axis=-1))


def identity_matrix(ctx):
    return ctx.GF([1, 0, 0, 1])


# -- spread maps ------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class SpreadEntry:
    """A matrix entry fx(x) + gy(y)."""

    fx: LinearizedPoly
    gy: LinearizedPoly

    def value(self, x, y):
        return self.fx(x) + self.gy(y)

    def to_json(self):
        return {"fx": to_json(self.fx), "gy": to_json(self.gy)}


def entry(ctx, fx=None, gy=None):
    """Build an entry, with missing halves meaning the zero map."""
    return SpreadEntry(fx or zero_poly(ctx), gy or zero_poly(ctx))


@dataclasses.dataclass(frozen=True)
class SpreadMap:
    """The matrix map (x, y) ↦ M(x, y) of a rank-two presemifield."""

    ctx: object
    m11: SpreadEntry
    m12: SpreadEntry
    m21: SpreadEntry
    m22: SpreadEntry
    label: str = "custom"

    @property
    def entries(self):
        return (self.m11, self.m12, self.m21, self.m22)

    def matrix(self, x, y):
        """Flat matrices M(x, y) for arrays of parameters."""
        x = self.ctx.element(x)
        y = self.ctx.element(y)
        return _stack(*(e.value(x, y) for e in self.entries))

    def spread_set(self):
        """The F_p-basis of the spread set, parameters (e_k, 0) then (0, e_k)."""
        ctx = self.ctx
        basis = ctx.fp_basis
        zeros = ctx.GF.Zeros(ctx.degree)
        rows = np.concatenate(
            [
                self.matrix(basis, zeros).view(np.ndarray),
                self.matrix(zeros, basis).view(np.ndarray),
            ]
        )
        return SpreadSet(ctx, ctx.GF(rows), self.matrix(ctx.one(), ctx.zero()), self.label)

    def transpose(self):
        return SpreadMap(self.ctx, self.m11, self.m21, self.m12, self.m22, f"{self.label}^T")

    def to_json(self):
        return {name: e.to_json() for name, e in zip(("m11", "m12", "m21", "m22"), self.entries)}


def multiply(S, u, v, x, y):
    """(u, v)∗(x, y) = (u, v)·M(x, y)."""
    ctx = S.ctx
    m = S.matrix(x, y)
    u = ctx.element(u)
    v = ctx.element(v)
    return u * m[..., 0] + v * m[..., 2], u * m[..., 1] + v * m[..., 3]


@dataclasses.dataclass(frozen=True, eq=False)
class SpreadSet:
    """
    An F_p-space of flat 2×2 matrices over F_{q^n}.

    `basis` has shape (2·h·n, 4); `unit` is the matrix at parameter (1, 0),
    used as M_0 by normalization and by the unitized product.
    """

    ctx: object
    basis: object
    unit: object
    label: str = "custom"

    @property
    def dimension(self):
        return self.basis.shape[0]

    def elements(self):
        """Every matrix of the spread set, in chunks."""
        yield from span.span_chunks(self.ctx, self.basis)

    def transpose(self):
        return SpreadSet(self.ctx, mat_transpose(self.basis), mat_transpose(self.unit), f"{self.label}^T")

    @functools.cached_property
    def annihilator(self):
        """F_p-functionals vanishing exactly on the spread set."""
        return span.flat_coords(self.ctx, self.basis).null_space()

    def contains(self, matrices):
        """Membership of flat matrices (..., 4) in the spread set."""
        vectors = span.flat_coords(self.ctx, matrices)
        residue = vectors @ self.annihilator.T
        return ~np.any(residue.view(np.ndarray), axis=-1)

    def is_normalized(self):
        return bool(self.contains(identity_matrix(self.ctx)))


def normalize_spread(S, unit=None):
    """
    Left-multiply a spread set by M_0^(-1) so that it contains the identity.

    M_0 defaults to the matrix at parameter (1, 0).
    """
    unit = S.unit if unit is None else S.ctx.element(unit)
    if mat_det(unit) == 0:
        raise ParameterError("the spread set has zero divisors: M_0 is singular")
    inverse = mat_inv(unit)
    return SpreadSet(S.ctx, mat_mul(inverse, S.basis), identity_matrix(S.ctx), S.label)


def transpose_spread(S):
    """The transposed spread set (or spread map)."""
    return S.transpose()


# -- presemifield checks ------------------------------------------------------


def zero_divisor_check(S):
    """
    Whether every nonzero matrix of the spread set is nonsingular.

    Scans all p^(2hn) - 1 nonzero F_p-combinations of the basis, so a
    dependent basis is reported as a zero divisor too.
    """
    if isinstance(S, SpreadMap):
        S = S.spread_set()
    first = True
    for chunk in progress.bar(
        span.span_chunks(S.ctx, S.basis), desc="Zero-divisor scan", total=span.chunk_count(S.ctx, S.basis)
    ):
        determinants = mat_det(chunk).view(np.ndarray)
        if first:
            # the zero combination comes first
            determinants = determinants[1:]
            first = False
        if np.any(determinants == 0):
            return False
    return True


def zero_divisor_search(S, *, cap=ZERO_DIVISOR_SEARCH_CAP):
    """
    Search all pairs (u,v), (x,y) for a zero product.

    Returns a witness ((u, v), (x, y)) or None.
    """
    ctx = S.ctx
    size = ctx.order**2
    if size > cap:
        raise CapExceeded("zero-divisor search over q^(2n) elements", size, cap)
    ints = np.arange(1, size)
    xs = ctx.GF(ints // ctx.order)
    ys = ctx.GF(ints % ctx.order)
    us = xs
    vs = ys
    matrices = S.matrix(xs, ys)
    for index in progress.trange(len(ints), desc="Zero-divisor search"):
        m = matrices[index]
        first = us * m[0] + vs * m[2]
        second = us * m[1] + vs * m[3]
        hits = np.flatnonzero((first.view(np.ndarray) == 0) & (second.view(np.ndarray) == 0))
        if len(hits):
            hit = hits[0]
            return (us[hit], vs[hit]), (xs[index], ys[index])
    return None


@dataclasses.dataclass(frozen=True)
class ConditionReport:
    """Image sizes and disjointness for the Dempwolff condition."""

    size_1: int
    size_2: int
    expected: int
    disjoint: bool

    @property
    def holds(self):
        return self.size_1 == self.expected and self.size_2 == self.expected and self.disjoint

    def to_json(self):
        return {
            "image_size_1": self.size_1,
            "image_size_2": self.size_2,
            "expected": self.expected,
            "disjoint": self.disjoint,
            "holds": self.holds,
        }


def dempwolff_condition(F1, F2, xi):
    """
    Check the image condition on P_F(x) = F(x)·x over nonzero x.

    Both images must have (q^n - 1)/2 elements and the image of F1 must be
    disjoint from xi times the image of F2.
    """
    ctx = F1.ctx
    xi = ctx.element(xi)
    nonzero = ctx.elements[1:]
    image_1 = np.unique((F1(nonzero) * nonzero).view(np.ndarray))
    image_2 = np.unique((xi * F2(nonzero) * nonzero).view(np.ndarray))
    return ConditionReport(
        size_1=len(image_1),
        size_2=len(image_2),
        expected=(ctx.order - 1) // 2,
        disjoint=not np.any(np.isin(image_1, image_2)),
    )


# -- family constructors -------------------------------------------------------


def dempwolff_spread(F1, F2, xi, label="dempwolff"):
    """The spread map [[x, y], [F1(y), xi·F2(x)]] (no parameter checks)."""
    ctx = F1.ctx
    return SpreadMap(
        ctx,
        entry(ctx, fx=identity(ctx)),
        entry(ctx, gy=identity(ctx)),
        entry(ctx, gy=F1),
        entry(ctx, fx=F2.scale(xi)),
        label,
    )


def dempwolff_transpose(F1, F2, xi, label="dempwolff^T"):
    """S(F1^(-1), F2), which is the transpose of S(F1, F2)."""
    return dempwolff_spread(lp_inverse(F1), F2, xi, label)


def swap_isotope(F1, F2, xi, label="dempwolff-swapped"):
    """S(F2, F1), isotopic to S(F1, F2)."""
    return dempwolff_spread(F2, F1, xi, label)


def knuth17_spread(ctx, f, g, r):
    """[[x, y], [f·y^(q^r), x^(q^r) + g·y^(q^r)]]."""
    return SpreadMap(
        ctx,
        entry(ctx, fx=identity(ctx)),
        entry(ctx, gy=identity(ctx)),
        entry(ctx, gy=monomial(ctx, r, f)),
        entry(ctx, fx=monomial(ctx, r), gy=monomial(ctx, r, g)),
        "k17",
    )


def knuth19_spread(ctx, f, g, r):
    """[[x, y], [f·y^(q^(n-r)), x^(q^r) + g·y]]."""
    return SpreadMap(
        ctx,
        entry(ctx, fx=identity(ctx)),
        entry(ctx, gy=identity(ctx)),
        entry(ctx, gy=monomial(ctx, -r, f)),
        entry(ctx, fx=monomial(ctx, r), gy=monomial(ctx, 0, g)),
        "k19",
    )


def dickson_spread(ctx, f, s, t):
    """[[x, y], [f·y^(q^t), x^(q^s)]]."""
    return SpreadMap(
        ctx,
        entry(ctx, fx=identity(ctx)),
        entry(ctx, gy=identity(ctx)),
        entry(ctx, gy=monomial(ctx, t, f)),
        entry(ctx, fx=monomial(ctx, s)),
        "gd",
    )


def gtf_spread(qext, c, t, *, seed=0):
    """
    Right multiplications of x ⋆ y = y·x - c·y^(q^t)·x^(q^n) on F_{q^{2n}}.

    The parameter y = y0 + ω·y1 plays the role of (x, y) in `SpreadMap`;
    each matrix is that of x ↦ x ⋆ y in the basis {1, ω}.
    """
    ctx = qext.base
    c = qext.element(*c)
    if math.gcd(t, ctx.n) != 1:
        raise ParameterError(f"GTF needs gcd(t, n) = 1, got t = {t}")
    if not gtf_parameter_valid(qext, c, t):
        raise ParameterError("c lies in the subgroup of values y^(1-q^t)·x^(1-q^n)")
    _sample_gtf(qext, c, t, seed)

    c0, c1 = c
    s = qext.s
    sigma = s ** ((ctx.q**t - 1) // 2)
    frob = monomial(ctx, t)
    one = identity(ctx)
    return SpreadMap(
        ctx,
        SpreadEntry(one - frob.scale(c0), frob.scale(-s * c1 * sigma)),
        SpreadEntry(frob.scale(-c1), one - frob.scale(c0 * sigma)),
        SpreadEntry(frob.scale(s * c1), one.scale(s) + frob.scale(s * c0 * sigma)),
        SpreadEntry(one + frob.scale(c0), frob.scale(s * c1 * sigma)),
        "gtf",
    )


def gtf_parameter_valid(qext, c, t):
    """
    Whether c avoids every value y^(1-q^t)·x^(1-q^n).

    Those values form the subgroup of order (q^(2n) - 1)/d of the
    multiplicative group, d = gcd(q^t - 1, q^n - 1).
    """
    ctx = qext.base
    if bool(qext.is_zero(c)):
        return True
    d = gcd(ctx.q**t - 1, ctx.order - 1)
    power = qext.power(c, (qext.order - 1) // d)
    return not (power[0] == 1 and power[1] == 0)


def _sample_gtf(qext, c, t, seed):
    """Cross-check the subgroup shortcut: random nonzero x, y give x ⋆ y ≠ 0."""
    ctx = qext.base
    rng = np.random.default_rng(seed)
    x = (ctx.random(GTF_SAMPLES, rng), ctx.random(GTF_SAMPLES, rng))
    y = (ctx.random(GTF_SAMPLES, rng), ctx.random(GTF_SAMPLES, rng))
    keep = ~(qext.is_zero(x) | qext.is_zero(y))
    x = (x[0][keep], x[1][keep])
    y = (y[0][keep], y[1][keep])
    c_arr = qext.element(np.full(len(x[0]), int(c[0])), np.full(len(x[0]), int(c[1])))
    product = qext.sub(qext.mul(y, x), qext.mul(qext.mul(c_arr, qext.frobenius(y, t)), qext.conj(x)))
    if np.any(qext.is_zero(product)):
        raise InvariantViolation("GTF subgroup shortcut disagrees with a sampled zero product")


def find_gtf_parameter(qext, t):
    """The first nonzero c (enumeration order) valid for GTF with this t."""
    ctx = qext.base
    for c0 in ctx.elements:
        for c1 in ctx.elements[1:]:
            c = (c0, c1)
            if gtf_parameter_valid(qext, c, t):
                return c
    raise ParameterError(f"no valid GTF parameter for t = {t}")


def knuth_condition(ctx, f, g, r):
    """Whether x^(q^r+1) + g·x - f never vanishes."""
    x = ctx.elements
    values = x ** (ctx.q ** (r % ctx.n) + 1) + ctx.element(g) * x - ctx.element(f)
    return not np.any(values.view(np.ndarray) == 0)


def find_knuth_parameters(ctx, r):
    """The first (f, g) in enumeration order satisfying the Knuth condition."""
    for g in ctx.elements:
        for f in ctx.elements[1:]:
            if knuth_condition(ctx, f, g, r):
                return f, g
    raise ParameterError(f"no Knuth parameters for r = {r}")


def dickson_condition(ctx, f, s, t):
    """Whether x^(q^s+1) - f·y^(q^t+1) vanishes only at (0, 0)."""
    f = ctx.element(f)
    if f == 0:
        return False
    nonzero = ctx.elements[1:]
    left = np.unique((nonzero ** (ctx.q**s + 1)).view(np.ndarray))
    right = np.unique((f * nonzero ** (ctx.q**t + 1)).view(np.ndarray))
    return not np.any(np.isin(left, right))


def find_dickson_parameter(ctx, s, t):
    """The first f in enumeration order satisfying the Dickson condition."""
    for f in ctx.elements[1:]:
        if dickson_condition(ctx, f, s, t):
            return f
    raise ParameterError(f"no Dickson parameter for s = {s}, t = {t}")


def default_xi(ctx):
    """The least non-square of F_q, embedded in F_{q^n}."""
    return ctx.least_fq_nonsquare()


# -- specs ---------------------------------------------------------------------


@dataclasses.dataclass
class PresemifieldSpec:
    """A family tag, field parameters and family parameters (element strings)."""

    family: str
    p: int
    h: int = 1
    n: int = 3
    r: int = 1
    s: int = None
    t: int = None
    a: str = None
    b: str = None
    c: str = None
    f: str = None
    g: str = None
    xi: str = None
    entries: dict = None

    @classmethod
    def from_json(cls, data):
        known = {field.name for field in dataclasses.fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ParameterError(f"unknown spec keys: {', '.join(sorted(unknown))}")
        return cls(**data)

    def to_json(self):
        return {key: value for key, value in dataclasses.asdict(self).items() if value is not None}


def _element(ctx, text, name):
    if text is None:
        raise ParameterError(f"parameter {name} is required")
    return parse_element(ctx, text)


def _gtf_element(qext, text):
    """Parse "c0|c1" (meaning c0 + ω c1) or a base-field element."""
    parts = text.split("|")
    if len(parts) > 2:
        raise ParameterError(f"cannot parse GTF parameter {text!r}")
    c0 = parse_element(qext.base, parts[0])
    c1 = parse_element(qext.base, parts[1]) if len(parts) == 2 else qext.base.zero()
    return c0, c1


def resolve_xi(ctx, spec):
    """The non-square xi of F_q given in a PresemifieldSpec, or the default."""
    if spec.xi is None:
        return default_xi(ctx)
    xi = parse_element(ctx, spec.xi)
    if not ctx.subfield_test(xi, 1):
        raise ParameterError(f"xi = {spec.xi} is not in F_q")
    if xi == 0 or xi ** ((ctx.q - 1) // 2) == 1:
        raise ParameterError(f"xi = {spec.xi} is a square in F_q")
    return xi


def _check_dempwolff_field(ctx, spec):
    if ctx.p == 2:
        raise ParameterError("Dempwolff families need q odd")
    if ctx.n < 3 or ctx.n % 2 == 0:
        raise ParameterError(f"Dempwolff families need n ≥ 3 odd, got n = {ctx.n}")
    if math.gcd(spec.r, ctx.n) != 1:
        raise ParameterError(f"gcd(r, n) = {math.gcd(spec.r, ctx.n)} for r = {spec.r}")


def _check_b_norm(ctx, b, text):
    norm = ctx.norm_q(b)
    if norm == 1 or norm == -ctx.one():
        if ctx.q == 3:
            raise ParameterError("N_q(b) ∈ {±1} for all b when q=3")
        raise ParameterError(f"N_q(b) = {format_element(ctx, norm)} ∈ {{±1}} for b = {text}")


def dempwolff_maps(ctx, spec):
    """The pair (F1, F2) and xi of a Dempwolff spec, validated."""
    _check_dempwolff_field(ctx, spec)
    xi = resolve_xi(ctx, spec)
    r = spec.r
    if spec.family == "dA":
        a = _element(ctx, spec.a, "a")
        if a == 0:
            raise ParameterError("a must be nonzero")
        if ctx.norm_q(a) == 1:
            raise ParameterError(f"N_q(a) = 1 for a = {spec.a}")
        A = family_A(ctx, a, r)
        return A, A, xi
    b = _element(ctx, spec.b, "b")
    if b == 0:
        raise ParameterError("b must be nonzero")
    _check_b_norm(ctx, b, spec.b)
    if spec.family == "dB":
        B = family_B(ctx, b, r)
        return B, B, xi
    return family_A(ctx, b * b, r), family_B(ctx, b, -r), xi


def build_family(spec, *, lookup_cap=LOOKUP_CAP):
    """Build the spread map of a spec, enforcing every family constraint."""
    if spec.family not in FAMILIES:
        raise ParameterError(f"unknown family {spec.family!r}")
    ctx = make_field(spec.p, spec.h, spec.n, lookup_cap=lookup_cap)
    family = spec.family

    if family in DEMPWOLFF_FAMILIES:
        F1, F2, xi = dempwolff_maps(ctx, spec)
        return dempwolff_spread(F1, F2, xi, family)

    if family in ("k17", "k19"):
        r = spec.r
        if math.gcd(r, ctx.n) != 1:
            raise ParameterError(f"gcd(r, n) = {math.gcd(r, ctx.n)} for r = {r}")
        if spec.f is None and spec.g is None:
            f, g = find_knuth_parameters(ctx, r)
        else:
            f = _element(ctx, spec.f, "f")
            g = parse_element(ctx, spec.g) if spec.g is not None else ctx.zero()
        if not knuth_condition(ctx, f, g, r):
            raise ParameterError(f"x^(q^r+1) + g x - f vanishes for f = {spec.f}, g = {spec.g}")
        builder = knuth17_spread if family == "k17" else knuth19_spread
        return builder(ctx, f, g, r)

    if family == "gd":
        s = 0 if spec.s is None else spec.s
        t = 0 if spec.t is None else spec.t
        if ctx.n < 2:
            raise ParameterError("GD needs n > 1")
        if not (0 <= s < ctx.n and 0 <= t < ctx.n):
            raise ParameterError(f"s, t must lie in [0, n), got s = {s}, t = {t}")
        if (s, t) == (0, 0):
            raise ParameterError("GD needs (s, t) ≠ (0, 0)")
        if gcd(s, t, ctx.n) != 1:
            raise ParameterError(f"GD needs gcd(s, t, n) = 1, got {gcd(s, t, ctx.n)}")
        f = find_dickson_parameter(ctx, s, t) if spec.f is None else parse_element(ctx, spec.f)
        if not dickson_condition(ctx, f, s, t):
            raise ParameterError(f"x^(q^s+1) - f y^(q^t+1) vanishes for f = {spec.f}")
        return dickson_spread(ctx, f, s, t)

    if family == "gtf":
        qext = quad_ext(ctx)
        t = 1 if spec.t is None else spec.t
        c = find_gtf_parameter(qext, t) if spec.c is None else _gtf_element(qext, spec.c)
        return gtf_spread(qext, c, t)

    if not spec.entries:
        raise ParameterError("a custom spec needs entries")
    parts = []
    for name in ("m11", "m12", "m21", "m22"):
        item = spec.entries.get(name, {})
        parts.append(
            SpreadEntry(
                from_json(ctx, item["fx"]) if "fx" in item else zero_poly(ctx),
                from_json(ctx, item["gy"]) if "gy" in item else zero_poly(ctx),
            )
        )
    return SpreadMap(ctx, *parts, "custom")
