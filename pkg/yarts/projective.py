"""
Points, lines and the hyperbolic quadric of PG(3, q^n).

Points are normalized so that their first nonzero coordinate is 1 and are
hashed to int64 keys in base q^n. Lines are canonical reduced row echelon
2×4 matrices; their keys combine the pivot pair with the four free
entries. Everything is vectorised over leading axes.
"""

import dataclasses
import functools
import itertools

import numpy as np

from .errors import CapExceeded, ParameterError
from .ffield import format_elements

PIVOT_PAIRS = tuple(itertools.combinations(range(4), 2))
_PAIR_INDEX = {pair: index for index, pair in enumerate(PIVOT_PAIRS)}
_FREE_COLUMNS = np.array(
    [[c for c in range(4) if c not in pair] for pair in PIVOT_PAIRS], dtype=np.int64
)
_PAIR_TABLE = np.full((4, 4), -1, dtype=np.int64)
for (_a, _b), _index in _PAIR_INDEX.items():
    _PAIR_TABLE[_a, _b] = _index

QUADRIC_CLASSES = ("external", "tangent", "secant", "contained")


def check_key_range(ctx, dimension=4):
    """Point and line keys must fit in int64."""
    if (len(PIVOT_PAIRS) + 1) * ctx.order**dimension >= 2**63:
        raise CapExceeded("int64 keys in base q^n", (len(PIVOT_PAIRS) + 1) * ctx.order**dimension, 2**63)


def _first_nonzero(ints):
    return np.argmax(ints != 0, axis=-1)


def normalize_points(points):
    """Scale vectors (..., k) so that the first nonzero coordinate is 1."""
    field = type(points)
    ints = points.view(np.ndarray)
    if not np.all(np.any(ints != 0, axis=-1)):
        raise ParameterError("the zero vector is not a projective point")
    first = _first_nonzero(ints)
    pivot = field(np.take_along_axis(ints, first[..., np.newaxis], axis=-1))
    return points / pivot


def point_keys(ctx, points):
    """Integer keys of normalized points."""
    ints = points.view(np.ndarray).astype(np.int64)
    keys = np.zeros(ints.shape[:-1], dtype=np.int64)
    for i in range(ints.shape[-1]):
        keys = keys * ctx.order + ints[..., i]
    return keys


def decode_points(ctx, keys, dimension=4):
    """Normalized points from their keys."""
    keys = np.asarray(keys, dtype=np.int64)
    columns = []
    for _ in range(dimension):
        columns.append(keys % ctx.order)
        keys = keys // ctx.order
    return ctx.GF(np.stack(columns[::-1], axis=-1))


# -- lines ---------------------------------------------------------------------


def join_keys(ctx, base, others):
    """
    Canonical line keys of the lines joining one normalized point to others.

    `base` is a single normalized point (4,), `others` normalized points
    (k, 4) all different from it. Returns int64 keys (k,).
    """
    field = type(base)
    a = int(_first_nonzero(base.view(np.ndarray)))
    # eliminate column a from the others
    residual = others - others[:, a : a + 1] * base
    residual = normalize_points(residual)
    b = _first_nonzero(residual.view(np.ndarray))
    base_b = field(base.view(np.ndarray)[b])
    reduced = base - base_b[:, np.newaxis] * residual
    # order the two rows by pivot column
    swap = (b < a)[:, np.newaxis]
    top = field(np.where(swap, residual.view(np.ndarray), reduced.view(np.ndarray)))
    bottom = field(np.where(swap, reduced.view(np.ndarray), residual.view(np.ndarray)))
    pairs = _PAIR_TABLE[np.minimum(a, b), np.maximum(a, b)]
    return _line_keys(ctx, pairs, top, bottom)


def _line_keys(ctx, pairs, top, bottom):
    free = _FREE_COLUMNS[pairs]
    top_free = np.take_along_axis(top.view(np.ndarray).astype(np.int64), free, axis=-1)
    bottom_free = np.take_along_axis(bottom.view(np.ndarray).astype(np.int64), free, axis=-1)
    keys = pairs.astype(np.int64)
    for column in (top_free[:, 0], top_free[:, 1], bottom_free[:, 0], bottom_free[:, 1]):
        keys = keys * ctx.order + column
    return keys


def decode_line(ctx, key):
    """The canonical 2×4 matrix of a line key."""
    key = int(key)
    values = []
    for _ in range(4):
        values.append(key % ctx.order)
        key //= ctx.order
    t1, t2, b1, b2 = values[::-1]
    a, b = PIVOT_PAIRS[key]
    c1, c2 = _FREE_COLUMNS[key]
    rows = np.zeros((2, 4), dtype=np.int64)
    rows[0, a] = 1
    rows[1, b] = 1
    rows[0, c1], rows[0, c2] = t1, t2
    rows[1, c1], rows[1, c2] = b1, b2
    return ProjLine(ctx, ctx.GF(rows))


@dataclasses.dataclass(frozen=True, eq=False)
class ProjLine:
    """A line of PG(3, q^n) in canonical reduced row echelon form."""

    ctx: object
    rows: object

    @functools.cached_property
    def pivots(self):
        ints = self.rows.view(np.ndarray)
        return int(_first_nonzero(ints[0])), int(_first_nonzero(ints[1]))

    @functools.cached_property
    def key(self):
        pair = np.array([_PAIR_INDEX[self.pivots]])
        return int(_line_keys(self.ctx, pair, self.rows[0:1], self.rows[1:2])[0])

    def __eq__(self, other):
        if not isinstance(other, ProjLine):
            return NotImplemented
        return self.ctx.same_as(other.ctx) and self.key == other.key

    def __hash__(self):
        return hash((self.ctx.key, self.key))

    def __repr__(self):
        return f"ProjLine({format_elements(self.ctx, self.rows)})"

    def points(self):
        """All q^n + 1 normalized points of the line."""
        ctx = self.ctx
        top, bottom = self.rows
        affine = ctx.elements[:, np.newaxis] * top + bottom
        return normalize_points(
            ctx.GF(np.concatenate([top.view(np.ndarray)[np.newaxis], affine.view(np.ndarray)]))
        )

    def coordinates(self, points):
        """Coordinates (λ0, λ1) of points of the line in the basis of its rows."""
        a, b = self.pivots
        return points[..., [a, b]]

    def to_json(self):
        return format_elements(self.ctx, self.rows)


def line_through(ctx, *vectors):
    """The line spanned by vectors (rank 2 required)."""
    matrix = ctx.GF(np.stack([ctx.element(v).view(np.ndarray) for v in vectors]))
    reduced = matrix.row_reduce()
    if np.linalg.matrix_rank(matrix) != 2:
        raise ParameterError("the vectors do not span a line")
    return ProjLine(ctx, reduced[:2])


def r1(ctx):
    """The line X1 = X2 = 0."""
    return line_through(ctx, [1, 0, 0, 0], [0, 0, 0, 1])


def r1_perp(ctx):
    """The line X0 = X3 = 0."""
    return line_through(ctx, [0, 1, 0, 0], [0, 0, 1, 0])


def meet_point(ctx, line, other):
    """
    The intersection point of two lines, or None if they are skew.

    Equal lines raise ParameterError.
    """
    matrix = ctx.GF(np.concatenate([line.rows.view(np.ndarray), other.rows.view(np.ndarray)]))
    kernel = matrix.T.null_space()
    if kernel.shape[0] == 0:
        return None
    if kernel.shape[0] > 1:
        raise ParameterError("the lines coincide")
    point = kernel[0, 0] * line.rows[0] + kernel[0, 1] * line.rows[1]
    return normalize_points(point)


# -- the quadric X0 X3 - X1 X2 = 0 ------------------------------------------------


def quadric(points):
    return points[..., 0] * points[..., 3] - points[..., 1] * points[..., 2]


def bilinear_form(x, y):
    """b(X, Y) = X3 Y0 - X2 Y1 - X1 Y2 + X0 Y3."""
    return x[..., 3] * y[..., 0] - x[..., 2] * y[..., 1] - x[..., 1] * y[..., 2] + x[..., 0] * y[..., 3]


def classify_line(line):
    """External, tangent, secant or contained, by counting quadric points."""
    zeros = int(np.count_nonzero(quadric(line.points()).view(np.ndarray) == 0))
    if zeros == line.ctx.order + 1:
        return "contained"
    if zeros > 2:
        raise ParameterError(f"a line meets the quadric in {zeros} points")
    return QUADRIC_CLASSES[zeros]


def perp_point(point):
    """The polar plane of a point, as plane coordinates (X3, -X2, -X1, X0)."""
    field = type(point)
    signs = field([1, 0, 0, 1]) - field([0, 1, 1, 0])
    return point[..., [3, 2, 1, 0]] * signs


def perp(line):
    """The polar line of a line."""
    ctx = line.ctx
    planes = perp_point(line.rows)
    kernel = planes.null_space()
    return line_through(ctx, *kernel)


def disjoint_from_quadric(points):
    return not np.any(quadric(points).view(np.ndarray) == 0)


# -- Plücker coordinates ---------------------------------------------------------


def plucker(rows):
    """Plücker coordinates (p01, p02, p03, p12, p13, p23) of lines (..., 2, 4)."""
    top = rows[..., 0, :]
    bottom = rows[..., 1, :]
    field = type(rows)
    columns = [
        (top[..., i] * bottom[..., j] - top[..., j] * bottom[..., i]).view(np.ndarray)
        for i, j in PIVOT_PAIRS
    ]
    return field(np.stack(columns, axis=-1))


def meet_form(p, r):
    """Zero exactly when the lines with Plücker coordinates p and r meet."""
    return (
        p[..., 0] * r[..., 5]
        - p[..., 1] * r[..., 4]
        + p[..., 2] * r[..., 3]
        + p[..., 3] * r[..., 2]
        - p[..., 4] * r[..., 1]
        + p[..., 5] * r[..., 0]
    )


def lines_meet(p, r):
    return meet_form(p, r).view(np.ndarray) == 0
