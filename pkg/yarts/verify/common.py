"""Checks shared by several suites."""

import numpy as np

from ..linpoly import family_A, family_H, lp_adjoint, lp_compose, lp_from_table, lp_inverse
from ..linset import build_linear_set, coordinate_swap_keys, translation_dual, weight_spectrum
from ..presemifield import (
    dempwolff_condition,
    dempwolff_maps,
    dempwolff_spread,
    dempwolff_transpose,
    zero_divisor_check,
)
from .claims import error, expect, measured


def _all_equal(a, b):
    return bool(np.array_equal(a.view(np.ndarray), b.view(np.ndarray)))


def field_properties(ctx):
    """Frobenius, trace, norm, adjoint and interpolation laws over the whole field."""
    xs = ctx.elements
    ys = xs[::-1]
    fq = ctx.fq_elements

    if not _all_equal(ctx.frobenius(xs + ys, 1), ctx.frobenius(xs, 1) + ctx.frobenius(ys, 1)):
        yield error("frobenius", "x^q is not additive")
    if not _all_equal(ctx.frobenius(xs, ctx.n), xs):
        yield error("frobenius", "x^(q^n) ≠ x")

    traces = ctx.trace_q(xs)
    if not np.all(ctx.subfield_test(traces, 1)):
        yield error("trace", "a trace lies outside F_q")
    if not _all_equal(ctx.trace_q(xs + ys), traces + ctx.trace_q(ys)):
        yield error("trace", "the trace is not additive")
    if not _all_equal(ctx.trace_q(ctx.frobenius(xs, 1)), traces):
        yield error("trace", "Tr(x^q) ≠ Tr(x)")
    c = fq[-1]
    if not _all_equal(ctx.trace_q(c * xs), c * traces):
        yield error("trace", "the trace is not F_q-linear")

    norms = ctx.norm_q(xs)
    if not np.all(ctx.subfield_test(norms, 1)):
        yield error("norm", "a norm lies outside F_q")
    if not _all_equal(ctx.norm_q(xs * ys), norms * ctx.norm_q(ys)):
        yield error("norm", "the norm is not multiplicative")

    g = ctx.generator
    f = family_A(ctx, g, 1) if ctx.norm_q(g) != 1 else family_H(ctx, g, 1)
    adjoint = lp_adjoint(f)
    if not _all_equal(ctx.trace_q(xs * f(ys)), ctx.trace_q(adjoint(xs) * ys)):
        yield error("adjoint", "Tr(x·f(y)) ≠ Tr(adjoint(f)(x)·y)")
    if lp_from_table(ctx, f.table) != f:
        yield error("interpolation", "interpolating the value table does not give f back")

    # H_{b,1} is invertible exactly when N(b) ≠ 1
    b = next(x for x in xs[1:] if ctx.norm_q(x) != 1)
    H = family_H(ctx, b, 1)
    composed = lp_compose(H, lp_inverse(H))
    if not composed.coeffs[0] == 1 or np.any(composed.coeffs[1:].view(np.ndarray)):
        yield error("inverse", "H∘H^(-1) is not the identity")
    yield measured("field_order", ctx.order)


def condition_and_zero_divisors(ws, family, p, n, **params):
    """The image condition holds and the zero-divisor scan passes."""
    S = ws.family(family, p, n, **params)
    F1, F2, xi = dempwolff_maps(S.ctx, ws.spec(family, p, n, **params))
    report = dempwolff_condition(F1, F2, xi)
    yield measured(f"{family}_condition", report.to_json())
    if not report.holds:
        yield error("condition", f"{family}: {report.to_json()}")
    if not zero_divisor_check(S):
        yield error("zero-divisors", f"{family} has zero divisors")


def transpose_closure(ws, family, p, n, **params):
    """
    The transpose is S(F1^(-1), F2) and its linear set is the X1↔X2 swap.

    The translation dual keeps the shape S(F1^, F2^) and the spectrum.
    """
    S = ws.family(family, p, n, **params)
    ctx = S.ctx
    F1, F2, xi = dempwolff_maps(ctx, ws.spec(family, p, n, **params))
    L = ws.linear_set(family, p, n, **params)

    transpose = build_linear_set(S.transpose())
    in_family = build_linear_set(dempwolff_transpose(F1, F2, xi))
    if not np.array_equal(transpose.keys, coordinate_swap_keys(L)):
        yield error("transpose", f"{family}: the transpose is not the X1↔X2 swap of L")
    if not np.array_equal(in_family.keys, transpose.keys):
        yield error("transpose", f"{family}: S(F1^(-1), F2) differs from the transpose")

    dual = translation_dual(S)
    reshaped = dempwolff_spread(lp_adjoint(F1), lp_adjoint(F2), xi)
    if dual.entries != reshaped.entries:
        yield error("translation-dual", f"{family}: the translation dual is not S(F1^, F2^)")
    yield expect(f"{family}_dual_spectrum", weight_spectrum(build_linear_set(dual)), weight_spectrum(L))
