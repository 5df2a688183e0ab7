"""
Nuclei of rank-two presemifields.

Nuclei are those of the unitized isotope x∘y = R_e^(-1)(x) ∗ L_e^(-1)(y)
with e = (1, 0); their sizes do not depend on that choice. Three methods
are available:

* ``spreadset``: F_p-linear algebra on a normalized spread set (fast path);
* ``bruteforce``: the full multiplication table, for q^(2n) up to a cap;
* ``sampled``: linear constraints from random probes, then exact
  verification on F_p-basis triples.
"""

import dataclasses

import numpy as np

from . import progress, span
from .errors import CapExceeded, InvariantViolation, NotNormalizedError, ParameterError
from .presemifield import mat_inv, mat_mul, normalize_spread, row_times

BRUTEFORCE_CAP = 3**6
SAMPLE_PROBES = 64
METHODS = ("spreadset", "bruteforce", "sampled")


@dataclasses.dataclass(frozen=True)
class NucleiReport:
    """Nucleus and center sizes, each a power of q."""

    left: int
    middle: int
    right: int
    center: int
    method: str

    def as_tuple(self):
        return self.left, self.middle, self.right, self.center

    def to_json(self):
        return {
            "left": self.left,
            "middle": self.middle,
            "right": self.right,
            "center": self.center,
            "method": self.method,
            "unit": "e = (1, 0)",
        }


def _check_sizes(ctx, report):
    for name, size in zip(("left", "middle", "right", "center"), report.as_tuple()):
        exponent = round(np.log(size) / np.log(ctx.q))
        if ctx.q**exponent != size:
            raise InvariantViolation(f"{name} nucleus size {size} is not a power of q = {ctx.q}")
    if any(report.center > size for size in report.as_tuple()):
        raise InvariantViolation(f"center {report.center} exceeds a nucleus in {report.as_tuple()}")
    return report


def _solution_size(ctx, constraints, unknowns):
    rank = np.linalg.matrix_rank(constraints) if constraints.shape[0] else 0
    return ctx.p ** (unknowns - rank)


def _columns(ctx, values):
    """
    Turn values (k, ..., entries) over F_{q^n}, linear in the k-th unknown,
    into an F_p constraint matrix with one column per unknown.
    """
    coords = span.flat_coords(ctx, values)
    k = coords.shape[0]
    return coords.reshape(k, -1).T


def nuclei_sizes(S):
    """
    Nuclei from a normalized spread set S (identity included).

    With M_y the matrix of S with first row y: the middle nucleus is
    {M : M·S ⊆ S}, the right nucleus {M : S·M ⊆ S}, the left nucleus the
    vectors a with a·(M_x M_y - M_(x M_y)) = 0, and the center the
    commuting elements of all three.
    """
    if not S.is_normalized():
        raise NotNormalizedError("the spread set does not contain the identity")
    ctx = S.ctx
    B = S.basis
    d = S.dimension
    annihilator = S.annihilator

    # products[k, j] = B_k · B_j
    products = mat_mul(B[:, np.newaxis, :], B[np.newaxis, :, :])
    outside = (span.flat_coords(ctx, products).reshape(d * d, -1) @ annihilator.T).reshape(d, d, -1)
    middle = outside.transpose(1, 2, 0).reshape(-1, d)
    right = outside.transpose(0, 2, 1).reshape(-1, d)

    first_rows = span.flat_coords(ctx, B[:, :2])
    try:
        selector = np.linalg.inv(first_rows)
    except np.linalg.LinAlgError:
        raise ParameterError("the spread set has zero divisors") from None
    # M_(x_i M_(y_j)) for the basis, then the associator defects
    weights = span.flat_coords(ctx, products[..., :2]).reshape(d * d, -1) @ selector
    closure = span.combine(ctx, weights.view(np.ndarray), B).reshape(d, d, 4)
    defects = products - closure
    left = _columns(ctx, row_times(B[:, np.newaxis, np.newaxis, :2], defects[np.newaxis]))

    swapped = products.transpose(1, 0, 2)
    commute = _columns(ctx, (products - swapped)[..., :2])

    center = np.concatenate(
        [c.view(np.ndarray) for c in (middle, right, left, commute)], axis=0
    )
    return _check_sizes(
        ctx,
        NucleiReport(
            left=_solution_size(ctx, left, d),
            middle=_solution_size(ctx, middle, d),
            right=_solution_size(ctx, right, d),
            center=_solution_size(ctx, ctx.prime_field(center), d),
            method="spreadset",
        ),
    )


class UnitizedProduct:
    """The product x∘y = R_e^(-1)(x) ∗ L_e^(-1)(y) on F_{q^n}^2, e = (1, 0)."""

    def __init__(self, S):
        self.ctx = S.ctx
        self.basis = S.basis
        self.unit_inverse = mat_inv(S.unit)
        # L_e sends the parameter λ to the first row of Σ λ_k B_k
        self.selector = np.linalg.inv(span.flat_coords(self.ctx, S.basis[:, :2]))
        self.identity = S.unit[:2]

    def matrices(self, y):
        """M(L_e^(-1)(y)) for vectors y (..., 2)."""
        y = self.ctx.element(y)
        coords = span.flat_coords(self.ctx, y)
        weights = coords.reshape(-1, coords.shape[-1]) @ self.selector
        matrices = span.combine(self.ctx, weights.view(np.ndarray), self.basis)
        return matrices.reshape(y.shape[:-1] + (4,))

    def __call__(self, x, y):
        return row_times(row_times(self.ctx.element(x), self.unit_inverse), self.matrices(y))


def nuclei_bruteforce(S, *, cap=BRUTEFORCE_CAP):
    """Nuclei from the full multiplication table of the unitized product."""
    ctx = S.ctx
    size = ctx.order**2
    if size > cap:
        raise CapExceeded("brute-force nuclei over q^(2n) elements", size, cap)
    product = UnitizedProduct(S)
    ints = np.arange(size)
    vectors = ctx.GF(np.stack([ints // ctx.order, ints % ctx.order], axis=-1))

    progress.note("Building multiplication table...")
    matrices = product.matrices(vectors)
    lefts = row_times(vectors, product.unit_inverse)
    table = row_times(lefts[:, np.newaxis, :], matrices[np.newaxis, :, :])
    table = table.view(np.ndarray).astype(np.int64)
    T = table[..., 0] * ctx.order + table[..., 1]

    left, middle, right, center = [], [], [], []
    for a in progress.trange(size, desc="Associativity scan"):
        in_left = np.array_equal(T[T[a, :], :], T[a, T])
        in_middle = np.array_equal(T[T[:, a], :], T[:, T[a, :]])
        in_right = np.array_equal(T[:, a][T], T[:, T[:, a]])
        left.append(in_left)
        middle.append(in_middle)
        right.append(in_right)
        center.append(in_left and in_middle and in_right and np.array_equal(T[a, :], T[:, a]))
    return _check_sizes(
        ctx,
        NucleiReport(
            left=sum(left),
            middle=sum(middle),
            right=sum(right),
            center=sum(center),
            method="bruteforce",
        ),
    )


def _defects(product, kind, a, x, y):
    """Associator (or commutator) defects, linear in each of a, x, y."""
    a = a[:, np.newaxis, :]
    x = x[np.newaxis, :, :]
    y = y[np.newaxis, :, :]
    if kind == "left":
        return product(product(a, x), y) - product(a, product(x, y))
    if kind == "middle":
        return product(product(x, a), y) - product(x, product(a, y))
    if kind == "right":
        return product(product(x, y), a) - product(x, product(y, a))
    return product(a, x) - product(x, a)


def nuclei_sampled(S, *, probes=SAMPLE_PROBES, seed=0):
    """
    Nuclei from random probes, verified exactly.

    Each nucleus is an F_p-subspace cut out by linear conditions. Random
    probes (x, y) give a candidate subspace; every candidate basis vector is
    then checked on all F_p-basis pairs, which is exhaustive because the
    defects are additive in each argument. Failures add the basis pairs as
    probes and the candidates are recomputed.
    """
    ctx = S.ctx
    product = UnitizedProduct(S)
    rng = np.random.default_rng(seed)
    m = ctx.degree
    zeros = ctx.GF.Zeros(m)
    unknowns = ctx.GF(
        np.concatenate(
            [
                np.stack([ctx.fp_basis.view(np.ndarray), zeros.view(np.ndarray)], axis=-1),
                np.stack([zeros.view(np.ndarray), ctx.fp_basis.view(np.ndarray)], axis=-1),
            ]
        )
    )
    pair_x = np.repeat(np.arange(2 * m), 2 * m)
    pair_y = np.tile(np.arange(2 * m), 2 * m)
    basis_pairs = (unknowns[pair_x], unknowns[pair_y])

    random_pairs = (ctx.random((probes, 2), rng), ctx.random((probes, 2), rng))
    solutions = {}
    constraints = {}
    for kind in ("left", "middle", "right", "commute"):
        x, y = random_pairs
        while True:
            matrix = _columns(ctx, _defects(product, kind, unknowns, x, y))
            kernel = matrix.null_space()
            candidates = span.combine(ctx, kernel.view(np.ndarray), unknowns)
            check = _defects(product, kind, candidates, *basis_pairs)
            if not np.any(check.view(np.ndarray)):
                break
            x, y = basis_pairs
        solutions[kind] = kernel.shape[0]
        constraints[kind] = matrix

    center = ctx.prime_field(
        np.concatenate([c.view(np.ndarray) for c in constraints.values()], axis=0)
    )
    return _check_sizes(
        ctx,
        NucleiReport(
            left=ctx.p ** solutions["left"],
            middle=ctx.p ** solutions["middle"],
            right=ctx.p ** solutions["right"],
            center=_solution_size(ctx, center, 2 * m),
            method="sampled",
        ),
    )


def compute_nuclei(S, method="spreadset", *, cap=BRUTEFORCE_CAP, seed=0):
    """Dispatch to one of the nucleus methods."""
    if method == "spreadset":
        return nuclei_sizes(normalize_spread(S))
    if method == "bruteforce":
        return nuclei_bruteforce(S, cap=cap)
    if method == "sampled":
        return nuclei_sampled(S, seed=seed)
    raise ParameterError(f"unknown nuclei method {method!r}")
