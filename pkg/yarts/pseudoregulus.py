"""
Pseudoregulus tests.

On a line, a scattered linear set of rank n is of pseudoregulus type when
it is projectively equivalent to {⟨(z, z^(q^m))⟩ : z ≠ 0} for some m with
gcd(m, n) = 1; its transversal points are the images of ⟨(1, 0)⟩ and
⟨(0, 1)⟩. In PG(3, q^n) a maximum scattered linear set is of pseudoregulus
type when it has q^n + 1 pairwise disjoint long lines met by exactly two
lines disjoint from it, the transversal lines.
"""

import dataclasses
import math

import numpy as np

from . import progress, span
from .errors import CapExceeded, IncompleteLongLines, InvariantViolation, ParameterError
from .ffield import format_element, format_elements
from .linpoly import lp_from_fp_pairs
from .linset import line_weight, restrict_to_line
from .projective import (
    line_through,
    lines_meet,
    meet_point,
    normalize_points,
    plucker,
    point_keys,
)

ORACLE_CAP = 10**7
GRAPH_SOLUTION_CAP = 2**16
TRANSVERSAL_CHUNK = 4096


def coprime_exponents(n):
    return [m for m in range(1, n) if math.gcd(m, n) == 1]


@dataclasses.dataclass(frozen=True)
class LinePRVerdict:
    """Outcome of a line pseudoregulus test."""

    ctx: object
    pseudoregulus: bool
    method: str
    m: int = None
    witness: tuple = ()
    transversal_points: tuple = ()
    reason: str = ""

    def to_json(self):
        result = {
            "pseudoregulus": self.pseudoregulus,
            "method": self.method,
        }
        if self.pseudoregulus:
            result["m"] = self.m
            result["witness"] = [format_element(self.ctx, x) for x in self.witness]
            result["transversal_points"] = [format_elements(self.ctx, p) for p in self.transversal_points]
        else:
            result["reason"] = self.reason
        return result


def _scattered_graph(G):
    """Whether {⟨(x, G(x))⟩} has (q^n - 1)/(q - 1) points."""
    ctx = G.ctx
    nonzero = ctx.elements[1:]
    ratios = np.unique((G(nonzero) / nonzero).view(np.ndarray))
    return len(ratios) == (ctx.order - 1) // (ctx.q - 1)


def _graph_constraints(ctx, g, m):
    """
    F_p constraint matrix on (α, β) for exponent m.

    Equating coefficients in G(αz + βz^(q^m)) = γz + δz^(q^m) leaves, for
    k ∉ {0, m}, the equations g_k α^(q^k) + g_(k-m) β^(q^(k-m)) = 0.
    """
    n = ctx.n
    basis = ctx.fp_basis
    zeros = ctx.GF.Zeros(ctx.degree)
    blocks = []
    for k in range(n):
        if k in (0, m % n):
            continue
        g_alpha, g_beta = g[k], g[(k - m) % n]
        if g_alpha == 0 and g_beta == 0:
            continue
        if g_beta == 0:
            # α^(q^k) = 0 forces α = 0
            images = (basis, zeros)
        elif g_alpha == 0:
            images = (zeros, basis)
        else:
            images = (g_alpha * ctx.frobenius(basis, k), g_beta * ctx.frobenius(basis, k - m))
        # columns: unknowns α_1..α_D then β_1..β_D
        block = np.concatenate([ctx.coords(image).view(np.ndarray).T for image in images], axis=1)
        blocks.append(block)
    if not blocks:
        return ctx.prime_field.Zeros((0, 2 * ctx.degree))
    return ctx.prime_field(np.concatenate(blocks, axis=0))


def _graph_solutions(ctx, constraints, rng):
    """All (or a seeded sample of) solutions (α, β) of the constraints."""
    D = ctx.degree
    if constraints.shape[0] == 0:
        kernel = ctx.prime_field(np.eye(2 * D, dtype=np.int64))
    else:
        kernel = constraints.null_space()
    dimension = kernel.shape[0]
    if dimension == 0:
        return None
    if ctx.p**dimension <= GRAPH_SOLUTION_CAP:
        coefficients = span.combinations(ctx.p, dimension)[1:]
    else:
        coefficients = rng.integers(0, ctx.p, size=(GRAPH_SOLUTION_CAP, dimension))
    solutions = ctx.prime_field(coefficients % ctx.p) @ kernel
    ints = solutions.view(np.ndarray)
    return ctx.from_coords(ints[:, :D]), ctx.from_coords(ints[:, D:])


def _transform_keys(ctx, m, witness):
    """Point keys of {⟨(αz + βz^(q^m), γz + δz^(q^m))⟩ : z ≠ 0}."""
    alpha, beta, gamma, delta = witness
    z = ctx.elements[1:]
    zq = ctx.frobenius(z, m)
    vectors = ctx.GF(
        np.stack([(alpha * z + beta * zq).view(np.ndarray), (gamma * z + delta * zq).view(np.ndarray)], axis=-1)
    )
    return np.unique(point_keys(ctx, normalize_points(vectors)))


def _graph_keys(G):
    ctx = G.ctx
    x = ctx.elements[1:]
    vectors = ctx.GF(np.stack([x.view(np.ndarray), G(x).view(np.ndarray)], axis=-1))
    return np.unique(point_keys(ctx, normalize_points(vectors)))


def line_pr_test_graph(G, *, strict=True, seed=0):
    """
    Decide whether {⟨(x, G(x))⟩} is of pseudoregulus type.

    For every m coprime to n, solve the coefficient-matching system for
    (α, β), derive γ = g_0 α + g_(-m) β^(q^(-m)) and δ = g_m α^(q^m) + g_0 β,
    and accept on the first solution with αδ - βγ ≠ 0. Accepted witnesses
    are re-checked by comparing point sets.

    Non-scattered input raises ParameterError if strict, otherwise it is
    rejected.
    """
    ctx = G.ctx
    n = ctx.n
    if not _scattered_graph(G):
        if strict:
            raise ParameterError("the graph linear set is not scattered")
        return LinePRVerdict(ctx, False, "graph", reason="not scattered")
    rng = np.random.default_rng(seed)
    g = G.coeffs
    for m in coprime_exponents(n):
        solutions = _graph_solutions(ctx, _graph_constraints(ctx, g, m), rng)
        if solutions is None:
            continue
        alpha, beta = solutions
        gamma = g[0] * alpha + g[(-m) % n] * ctx.frobenius(beta, -m)
        delta = g[m] * ctx.frobenius(alpha, m) + g[0] * beta
        det = (alpha * delta - beta * gamma).view(np.ndarray)
        hits = np.flatnonzero(det != 0)
        if len(hits) == 0:
            continue
        i = hits[0]
        witness = (alpha[i], beta[i], gamma[i], delta[i])
        if not np.array_equal(_transform_keys(ctx, m, witness), _graph_keys(G)):
            raise InvariantViolation(f"pseudoregulus witness for m = {m} does not reproduce the graph")
        transversals = (
            normalize_points(ctx.GF([int(alpha[i]), int(gamma[i])])),
            normalize_points(ctx.GF([int(beta[i]), int(delta[i])])),
        )
        return LinePRVerdict(ctx, True, "graph", m, witness, transversals)
    return LinePRVerdict(ctx, False, "graph", reason=f"no invertible witness for m in {coprime_exponents(n)}")


def restriction_graph(L):
    """
    (G, swapped) such that L = {⟨(x, G(x))⟩}, or {⟨(G(y), y)⟩} if swapped.

    Returns None when neither coordinate runs over an F_p-basis.
    """
    ctx = L.ctx
    U = L.basis
    if U.shape[0] != ctx.degree:
        raise ParameterError(f"the line linear set has rank {L.rank}, not n = {ctx.n}")
    for swapped, (first, second) in ((False, (0, 1)), (True, (1, 0))):
        xs = U[:, first]
        if np.linalg.matrix_rank(ctx.coords(xs)) == ctx.degree:
            return lp_from_fp_pairs(ctx, xs, U[:, second]), swapped
    return None


def _line_points(ctx):
    """All points of PG(1, q^n), normalized: (1, a) then (0, 1)."""
    ones = np.ones(ctx.order, dtype=np.int64)
    first = np.stack([ones, ctx.elements.view(np.ndarray)], axis=-1)
    return ctx.GF(np.concatenate([first, [[0, 1]]]))


def _monomial_hits(ctx, U, w, vs, exponents):
    """
    First v in vs (with m, ρ) such that U = {λw + ρλ^(q^m) v}.

    Writes each basis vector u of U as λ w + μ v; the map λ ↦ μ is then
    F_q-linear and it is monomial exactly when μ = ρ λ^(q^m) on the basis.
    """
    det = w[0] * vs[:, 1] - w[1] * vs[:, 0]
    u0 = U[np.newaxis, :, 0]
    u1 = U[np.newaxis, :, 1]
    lam = (u0 * vs[:, np.newaxis, 1] - u1 * vs[:, np.newaxis, 0]) / det[:, np.newaxis]
    mu = (w[0] * u1 - w[1] * u0) / det[:, np.newaxis]
    for m in exponents:
        lam_m = ctx.frobenius(lam, m)
        rho = mu[:, 0] / lam_m[:, 0]
        ok = np.all((mu == rho[:, np.newaxis] * lam_m).view(np.ndarray), axis=1)
        hits = np.flatnonzero(ok)
        if len(hits):
            return hits[0], m, rho[hits[0]]
    return None


def _check_oracle_input(L):
    ctx = L.ctx
    if L.dimension != 2 or L.rank != ctx.n:
        raise ParameterError(f"the oracle needs a rank-n linear set on a line, got rank {L.rank}")


def line_pr_test_pair(L, w, v):
    """Test whether ⟨w⟩ and ⟨v⟩ are transversal points of L."""
    ctx = L.ctx
    _check_oracle_input(L)
    if not L.is_scattered():
        return LinePRVerdict(ctx, False, "pair", reason="not scattered")
    hit = _monomial_hits(ctx, L.basis, w, v[np.newaxis], coprime_exponents(ctx.n))
    if hit is None:
        return LinePRVerdict(ctx, False, "pair", reason="the points are not transversal points")
    _, m, rho = hit
    return LinePRVerdict(ctx, True, "pair", m, (rho,), (w, v))


def line_pr_test_oracle(L, *, cap=ORACLE_CAP):
    """
    Decide pseudoregulus type from the points of L alone.

    Tries every pair of points of weight 0 as transversal points.
    """
    ctx = L.ctx
    _check_oracle_input(L)
    if not L.is_scattered():
        return LinePRVerdict(ctx, False, "oracle", reason="not scattered")
    points = _line_points(ctx)
    outside = points[L.weight_of(points) == 0]
    pairs = len(outside) * (len(outside) - 1) // 2
    if pairs > cap:
        raise CapExceeded("pseudoregulus oracle over pairs of outside points", pairs, cap)
    exponents = coprime_exponents(ctx.n)
    for i in progress.trange(len(outside) - 1, desc="Pseudoregulus oracle"):
        hit = _monomial_hits(ctx, L.basis, outside[i], outside[i + 1 :], exponents)
        if hit is not None:
            j, m, rho = hit
            return LinePRVerdict(ctx, True, "oracle", m, (rho,), (outside[i], outside[i + 1 + j]))
    return LinePRVerdict(ctx, False, "oracle", reason="no pair of outside points is transversal")


def line_pr_test(L, *, seed=0):
    """Graph test when L is a graph over a coordinate, the oracle otherwise."""
    _check_oracle_input(L)
    graph = restriction_graph(L)
    if graph is None:
        return line_pr_test_oracle(L)
    G, _ = graph
    return line_pr_test_graph(G, strict=False, seed=seed)


# -- 3-space -------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class SpacePRVerdict:
    """Outcome of the 3-space pseudoregulus test."""

    pseudoregulus: bool
    transversals: tuple = ()
    reason: str = ""

    def to_json(self):
        result = {"pseudoregulus": self.pseudoregulus}
        if self.transversals:
            result["transversals"] = [line.to_json() for line in self.transversals]
        if self.reason:
            result["reason"] = self.reason
        return result


def _stack_rows(lines):
    return lines[0].ctx.GF(np.stack([line.rows.view(np.ndarray) for line in lines]))


def space_pr_test(L, lines):
    """
    Decide pseudoregulus type in PG(3, q^n) from the exhaustive long lines.

    Transversals meet every long line, so they are among the joins ⟨P, Q⟩
    with P on the first long line and Q on the second; the candidates are
    filtered by the third long line, then by all of them, then by being
    disjoint from L.
    """
    ctx = L.ctx
    if not lines.exhaustive:
        raise IncompleteLongLines("the 3-space test needs the exhaustive long-line set")
    if not L.is_scattered():
        return SpacePRVerdict(False, reason="not scattered")
    if L.rank != 2 * ctx.n:
        return SpacePRVerdict(False, reason=f"rank {L.rank} is not 2n")
    if len(lines) != ctx.order + 1:
        return SpacePRVerdict(False, reason=f"{len(lines)} long lines, not q^n + 1 = {ctx.order + 1}")

    coordinates = plucker(_stack_rows(lines.lines))
    meets = lines_meet(coordinates[:, np.newaxis], coordinates[np.newaxis, :])
    np.fill_diagonal(meets, False)
    if np.any(meets):
        return SpacePRVerdict(False, reason="two long lines meet")

    first = lines.lines[0].points()
    second = lines.lines[1].points()
    count = len(first)
    i, j = np.divmod(np.arange(count * count), count)
    rows = ctx.GF(np.stack([first.view(np.ndarray)[i], second.view(np.ndarray)[j]], axis=1))
    candidates = plucker(rows)
    keep = lines_meet(candidates, coordinates[2])
    rows, candidates = rows[keep], candidates[keep]
    for start in range(3, len(lines), TRANSVERSAL_CHUNK):
        block = coordinates[start : start + TRANSVERSAL_CHUNK]
        keep = np.all(lines_meet(candidates[:, np.newaxis], block[np.newaxis]), axis=1)
        rows, candidates = rows[keep], candidates[keep]

    transversals = {}
    for pair in rows:
        line = line_through(ctx, pair[0], pair[1])
        if line.key not in transversals and line_weight(L, line) == 0:
            transversals[line.key] = line
    found = [transversals[k] for k in sorted(transversals)]
    if len(found) != 2:
        return SpacePRVerdict(False, tuple(found), reason=f"{len(found)} transversal lines, not 2")
    return SpacePRVerdict(True, tuple(found))


def long_line_flags(L, lines, transversals=(), *, seed=0):
    """
    Line pseudoregulus flags of every long line.

    With transversal lines, each long line is first tested with its meets
    with them as transversal points; `consistent` records whether that
    worked for every line.
    """
    ctx = L.ctx
    flags = []
    consistent = bool(transversals)
    for line in progress.bar(lines.lines, desc="Long-line tests"):
        restriction = restrict_to_line(L, line)
        if restriction.rank != ctx.n:
            flags.append(False)
            consistent = False
            continue
        verdict = None
        if transversals:
            meets = [meet_point(ctx, line, t) for t in transversals]
            if all(p is not None for p in meets):
                w, v = (normalize_points(line.coordinates(p)) for p in meets)
                verdict = line_pr_test_pair(restriction, w, v)
                if not verdict.pseudoregulus:
                    verdict = None
            if verdict is None:
                consistent = False
        if verdict is None:
            verdict = line_pr_test(restriction, seed=seed)
        flags.append(verdict.pseudoregulus)
    return tuple(flags), consistent
