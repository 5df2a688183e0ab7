"""
F_q-linear sets.

A `LinearSet` is the set of points of PG(k-1, q^n) (k = 4 or 2) spanned by
the nonzero vectors of an F_q-subspace U, stored as sorted point keys
together with the number of nonzero vectors of U on each point. A point of
weight w carries q^w - 1 vectors, which gives the weights directly and the
counting identities for free.
"""

import dataclasses
import functools

import numpy as np

from . import cache, progress, span
from .errors import CapExceeded, InvariantViolation, ParameterError
from .linpoly import identity, lp_adjoint
from .presemifield import SpreadMap, SpreadSet, entry, zero_divisor_check
from .projective import (
    check_key_range,
    decode_line,
    decode_points,
    disjoint_from_quadric,
    join_keys,
    line_through,
    normalize_points,
    point_keys,
    r1,
    r1_perp,
)

MAX_PAIRS = 10**8
CANDIDATE_POINT_CAP = 64
CONE_CANDIDATE_CAP = 8


@dataclasses.dataclass(frozen=True, eq=False)
class LinearSet:
    """The linear set of an F_p-basis of U inside F_{q^n}^k."""

    ctx: object
    basis: object
    keys: object
    counts: object
    label: str = ""

    @property
    def dimension(self):
        """Length of the vectors of U (4 for PG(3, q^n), 2 for a line)."""
        return self.basis.shape[1]

    @property
    def rank(self):
        return self.basis.shape[0] // self.ctx.h

    @property
    def size(self):
        return len(self.keys)

    @functools.cached_property
    def weights(self):
        return _weights_from_counts(self.ctx, self.counts)

    @functools.cached_property
    def points(self):
        return decode_points(self.ctx, self.keys, self.dimension)

    def weight_of(self, points):
        """Weights of normalized points, 0 for points outside the set."""
        keys = np.atleast_1d(point_keys(self.ctx, points))
        if self.size == 0:
            return np.zeros(len(keys), dtype=np.int64)
        index = np.minimum(np.searchsorted(self.keys, keys), self.size - 1)
        return np.where(self.keys[index] == keys, self.weights[index], 0)

    def max_weight(self):
        return int(self.weights.max()) if self.size else 0

    def is_scattered(self):
        return self.max_weight() <= 1

    def to_json(self):
        return {
            "label": self.label,
            "rank": self.rank,
            "size": self.size,
            "spectrum": list(weight_spectrum(self)),
            "scattered": self.is_scattered(),
        }


def _weights_from_counts(ctx, counts):
    weights = np.zeros(len(counts), dtype=np.int64)
    matched = np.zeros(len(counts), dtype=bool)
    for w in range(1, ctx.n + 1):
        hit = counts == ctx.q**w - 1
        weights[hit] = w
        matched |= hit
    if not np.all(matched):
        bad = int(counts[~matched][0])
        raise InvariantViolation(f"a point carries {bad} vectors, which is not q^w - 1")
    return weights


def _enumerate(ctx, basis, label):
    """Enumerate the span of an F_p-basis and collect point counts."""
    check_key_range(ctx, basis.shape[1])
    key_parts = []
    count_parts = []
    first = True
    chunks = span.span_chunks(ctx, basis)
    for chunk in progress.bar(chunks, desc=f"Points of {label}", total=span.chunk_count(ctx, basis)):
        if first:
            # the zero vector comes first
            chunk = chunk[1:]
            first = False
        if len(chunk) == 0:
            continue
        try:
            points = normalize_points(chunk)
        except ParameterError:
            raise ParameterError(f"the basis of {label} is F_p-dependent") from None
        keys, counts = np.unique(point_keys(ctx, points), return_counts=True)
        key_parts.append(keys)
        count_parts.append(counts)

    if not key_parts:
        return LinearSet(ctx, basis, np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64), label)
    all_keys = np.concatenate(key_parts)
    all_counts = np.concatenate(count_parts)
    keys, inverse = np.unique(all_keys, return_inverse=True)
    counts = np.bincount(inverse, weights=all_counts).astype(np.int64)
    result = LinearSet(ctx, basis, keys, counts, label)
    _check_identities(result)
    return result


def _check_identities(L):
    ctx = L.ctx
    total = int(L.counts.sum())
    expected = ctx.p ** L.basis.shape[0] - 1
    if total != expected:
        raise InvariantViolation(f"{L.label}: {total} vectors counted, expected {expected}")
    if L.size % ctx.q != 1 % ctx.q:
        raise InvariantViolation(f"{L.label}: |L| = {L.size} is not 1 mod q")
    # weights are validated on access
    _ = L.weights


def build_linear_set(S, label=None):
    """The linear set {⟨M⟩ : M ∈ S, M ≠ 0} of a spread set (or spread map) in PG(3, q^n)."""
    if isinstance(S, SpreadMap):
        S = S.spread_set()
    if not isinstance(S, SpreadSet):
        raise ParameterError(f"cannot build a linear set from {S!r}")
    progress.note(f"Building linear set of {S.label}...")
    L = _enumerate(S.ctx, S.basis, label or S.label)
    progress.note(f"  ...done, {L.size} points")
    return L


def graph_linear_set(ctx, G, label="graph"):
    """{⟨(x, G(x))⟩ : x ≠ 0} on PG(1, q^n)."""
    xs = ctx.fp_basis
    vectors = ctx.GF(np.stack([xs.view(np.ndarray), G(xs).view(np.ndarray)], axis=-1))
    return _enumerate(ctx, vectors, label)


def build_Lst(ctx, s, t):
    """L_{s,t} = {⟨(x, x^(q^s), y, y^(q^t))⟩}."""
    xs = ctx.fp_basis
    zeros = ctx.GF.Zeros(ctx.degree).view(np.ndarray)
    first = np.stack([xs.view(np.ndarray), ctx.frobenius(xs, s).view(np.ndarray), zeros, zeros], axis=-1)
    second = np.stack([zeros, zeros, xs.view(np.ndarray), ctx.frobenius(xs, t).view(np.ndarray)], axis=-1)
    label = f"L_{{{s},{t}}}"
    progress.note(f"Building {label}...")
    return _enumerate(ctx, ctx.GF(np.concatenate([first, second])), label)


def weight_spectrum(L):
    """
    The numbers (x_1, ..., x_n) of points of each weight.

    Checks |L| = Σ x_i and Σ x_i (q^i - 1)/(q - 1) = (q^k - 1)/(q - 1).
    """
    ctx = L.ctx
    spectrum = np.bincount(L.weights, minlength=ctx.n + 1)[1 : ctx.n + 1]
    if int(spectrum.sum()) != L.size:
        raise InvariantViolation(f"{L.label}: spectrum {spectrum} does not add up to |L| = {L.size}")
    weighted = sum(int(x) * (ctx.q ** (i + 1) - 1) // (ctx.q - 1) for i, x in enumerate(spectrum))
    expected = (ctx.p ** L.basis.shape[0] - 1) // (ctx.q - 1)
    if weighted != expected:
        raise InvariantViolation(f"{L.label}: weighted spectrum {weighted}, expected {expected}")
    return tuple(int(x) for x in spectrum)


# -- lines -----------------------------------------------------------------------


def line_subspace(L, line):
    """The vectors of U on a line, as an F_p-basis in the line's coordinates."""
    ctx = L.ctx
    a, b = line.pivots
    B = L.basis
    residual = B - B[:, a : a + 1] * line.rows[0] - B[:, b : b + 1] * line.rows[1]
    combinations = span.left_null_space(span.flat_coords(ctx, residual))
    if combinations.shape[0] == 0:
        return ctx.GF.Zeros((0, 2))
    vectors = span.combine(ctx, combinations.view(np.ndarray), B)
    return line.coordinates(vectors)


def line_weight(L, line):
    """dim_{F_q} of U ∩ the line."""
    dimension = line_subspace(L, line).shape[0]
    if dimension % L.ctx.h:
        raise InvariantViolation(f"U meets {line!r} in F_p-dimension {dimension}")
    return dimension // L.ctx.h


def restrict_to_line(L, line, label=None):
    """The linear set L ∩ line on PG(1, q^n), in the line's coordinates."""
    label = label or f"{L.label} ∩ line"
    return _enumerate(L.ctx, line_subspace(L, line), label)


@dataclasses.dataclass(frozen=True)
class LongLines:
    """Lines of weight at least n, with the search mode that found them."""

    mode: str
    lines: tuple
    weights: tuple

    @property
    def exhaustive(self):
        return self.mode == "exhaustive"

    def __len__(self):
        return len(self.lines)

    def to_json(self):
        return {
            "mode": self.mode,
            "count": len(self.lines),
            "exact": self.exhaustive,
            "lines": [
                {"line": line.to_json(), "weight": weight}
                for line, weight in zip(self.lines, self.weights)
            ],
        }


def _line_sums(L, index, others):
    """Keys of the lines joining point `index` to `others`, with vector totals."""
    points = L.points
    keys = join_keys(L.ctx, points[index], points[others])
    unique, inverse = np.unique(keys, return_inverse=True)
    sums = np.bincount(inverse, weights=L.counts[others]).astype(np.int64)
    return unique, sums + L.counts[index]


def _basis_key(L, prefix):
    return cache.cache_key(prefix, L.ctx.key, L.basis.view(np.ndarray).astype(np.int64).tobytes())


def long_lines_exhaustive(L, *, max_pairs=MAX_PAIRS):
    """
    Every line of weight at least n, by hashing all joins of point pairs.

    A line is found from its first point, i.e. through pairs (i, j > i);
    a partial total reaching q^n - 1 makes it a candidate, and the weights
    of the candidates are then computed exactly.
    """
    ctx = L.ctx
    if L.size**2 > max_pairs:
        raise CapExceeded("exhaustive long-line search over |L|^2 pairs", L.size**2, max_pairs)
    key = _basis_key(L, "long-lines")
    cached = cache.get_cache(key)
    if cached is not None:
        progress.note("Using cached long lines")
        line_keys, weights = cached
    else:
        target = ctx.order - 1
        found = []
        for i in progress.trange(L.size - 1, desc="Long lines"):
            unique, totals = _line_sums(L, i, np.arange(i + 1, L.size))
            found.append(unique[totals >= target])
        line_keys = np.unique(np.concatenate(found)) if found else np.zeros(0, dtype=np.int64)
        weights = [line_weight(L, decode_line(ctx, k)) for k in line_keys]
        line_keys = [int(k) for k, w in zip(line_keys, weights) if w >= ctx.n]
        weights = [w for w in weights if w >= ctx.n]
        cache.set_cache(key, (line_keys, weights))
    return LongLines(
        "exhaustive",
        tuple(decode_line(ctx, k) for k in line_keys),
        tuple(weights),
    )


def candidate_lines(L, extra=(), *, point_cap=CANDIDATE_POINT_CAP):
    """r_1, r_1^⊥, supplied lines, and joins of points of weight at least 2."""
    ctx = L.ctx
    lines = [r1(ctx), r1_perp(ctx), *extra]
    heavy = np.flatnonzero(L.weights >= 2)[:point_cap]
    points = L.points
    for position, i in enumerate(heavy):
        for j in heavy[position + 1 :]:
            lines.append(line_through(ctx, points[i], points[j]))
    unique = {}
    for line in lines:
        unique.setdefault(line.key, line)
    return [unique[k] for k in sorted(unique)]


def long_lines_candidates(L, lines):
    """The long lines among the supplied candidates."""
    n = L.ctx.n
    found = []
    for line in progress.bar(lines, desc="Candidate lines"):
        weight = line_weight(L, line)
        if weight >= n:
            found.append((line, weight))
    return LongLines("candidates", tuple(line for line, _ in found), tuple(w for _, w in found))


def long_lines(L, mode="exhaustive", *, candidates=(), max_pairs=MAX_PAIRS):
    """Long lines in exhaustive or candidates mode."""
    if mode == "exhaustive":
        return long_lines_exhaustive(L, max_pairs=max_pairs)
    if mode == "candidates":
        return long_lines_candidates(L, candidate_lines(L, candidates))
    raise ParameterError(f"unknown long-line mode {mode!r}")


# -- global shape ------------------------------------------------------------------


def disjoint_from_Q(L):
    """Whether no point of L lies on the quadric X0 X3 = X1 X2."""
    if L.dimension != 4:
        raise ParameterError("the quadric lives in PG(3, q^n)")
    return disjoint_from_quadric(L.points)


def span_dimension(L):
    """Vector dimension of the F_{q^n}-span of L."""
    return int(np.linalg.matrix_rank(L.basis))


def cone_vertex(L, *, cap=CONE_CANDIDATE_CAP):
    """
    A point P of weight n such that L is a union of lines through P.

    Every line joining P to another point of L must then have weight
    greater than n. Returns the point, or None.
    """
    ctx = L.ctx
    for i in np.flatnonzero(L.weights == ctx.n)[:cap]:
        others = np.delete(np.arange(L.size), i)
        if len(others) == 0:
            continue
        _, totals = _line_sums(L, i, others)
        if np.all(totals > ctx.order - 1):
            return L.points[i]
    return None


def coordinate_swap_keys(L):
    """Point keys of L after exchanging X1 and X2."""
    swapped = L.points[..., [0, 2, 1, 3]]
    return np.sort(point_keys(L.ctx, normalize_points(swapped)))


# -- translation dual -----------------------------------------------------------------


def translation_shape(S):
    """(f, g) for a spread map of shape [[x, y], [f(y), g(x)]]."""
    ctx = S.ctx
    one = identity(ctx)
    if (
        S.m11 != entry(ctx, fx=one)
        or S.m12 != entry(ctx, gy=one)
        or not S.m21.fx.is_zero()
        or not S.m22.gy.is_zero()
    ):
        raise ParameterError(f"{S.label} is not of shape (x, y, f(y), g(x))")
    return S.m21.gy, S.m22.fx


def translation_dual(S, *, check=True):
    """
    The translation dual [[x, y], [f^(y), g^(x)]] with adjoint entries.

    With check, the zero-divisor scan is re-run on the result.
    """
    f, g = translation_shape(S)
    ctx = S.ctx
    dual = SpreadMap(
        ctx,
        S.m11,
        S.m12,
        entry(ctx, gy=lp_adjoint(f)),
        entry(ctx, fx=lp_adjoint(g)),
        f"{S.label}^perp",
    )
    if check and not zero_divisor_check(dual):
        raise InvariantViolation(f"the translation dual of {S.label} has zero divisors")
    return dual


def is_graph_shape(S):
    """Whether a spread map is [[x, y], [f(y), g(x)]]."""
    try:
        translation_shape(S)
    except ParameterError:
        return False
    return True

