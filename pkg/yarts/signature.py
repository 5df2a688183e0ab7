"""
Geometric signatures.

A `GeoSignature` collects the isotopy invariants of a rank-two presemifield
that the catalog compares against: nuclei, the weight spectrum of the
associated linear set, its long lines and their pseudoregulus types, the
position of the transversal lines relative to the quadric, and the shape
degeneracies (contained in a plane, union of lines through a point).
"""

import dataclasses

from . import progress
from .linset import (
    build_linear_set,
    cone_vertex,
    disjoint_from_Q,
    line_weight,
    long_lines,
    restrict_to_line,
    span_dimension,
    weight_spectrum,
)
from .nuclei import compute_nuclei
from .presemifield import SpreadMap
from .projective import classify_line, perp, r1, r1_perp
from .pseudoregulus import line_pr_test, long_line_flags, space_pr_test


@dataclasses.dataclass(frozen=True)
class GeoSignature:
    label: str
    q: int
    n: int
    rank: int
    nuclei: object
    size: int
    spectrum: tuple
    scattered: bool
    long_line_mode: str
    long_line_count: int
    long_line_weights: tuple
    long_line_pr: tuple
    pseudoregulus: object
    transversal_classes: tuple
    transversals_polar: object
    transversal_consistent: object
    disjoint_from_quadric: bool
    span_dimension: int
    in_plane: bool
    cone: bool
    named_lines: tuple

    def heavy_points(self, weight):
        """Number of points of weight at least `weight`."""
        return sum(self.spectrum[max(weight, 1) - 1 :])

    def named_line(self, name):
        """Weight and pseudoregulus verdict of r_1 or r_1^perp."""
        return dict(dict(self.named_lines)[name])

    def invariants(self):
        """The fields that do not depend on how the presemifield was presented."""
        data = self.to_json()
        del data["label"]
        # r_1 and r_1^perp depend on the coordinates
        del data["named_lines"]
        if data["nuclei"] is not None:
            del data["nuclei"]["method"]
        return data

    def to_json(self):
        return {
            "label": self.label,
            "q": self.q,
            "n": self.n,
            "rank": self.rank,
            "nuclei": self.nuclei.to_json() if self.nuclei is not None else None,
            "size": self.size,
            "spectrum": list(self.spectrum),
            "scattered": self.scattered,
            "long_lines": {
                "mode": self.long_line_mode,
                "count": self.long_line_count,
                "exact": self.long_line_mode == "exhaustive",
                "weights": list(self.long_line_weights),
                "pseudoregulus": list(self.long_line_pr),
            },
            "pseudoregulus": self.pseudoregulus,
            "transversals": {
                "classes": list(self.transversal_classes),
                "polar": self.transversals_polar,
                "consistent": self.transversal_consistent,
            },
            "disjoint_from_quadric": self.disjoint_from_quadric,
            "span_dimension": self.span_dimension,
            "in_plane": self.in_plane,
            "cone": self.cone,
            "named_lines": {name: dict(data) for name, data in self.named_lines},
        }


def _named_line(L, line, seed):
    weight = line_weight(L, line)
    data = {"weight": weight, "pseudoregulus": None}
    if weight == L.ctx.n:
        data["pseudoregulus"] = line_pr_test(restrict_to_line(L, line), seed=seed).pseudoregulus
    return tuple(sorted(data.items()))


def linear_set_signature(L, *, nuclei=None, mode="exhaustive", candidates=(), max_pairs=None, seed=0):
    """Signature of a linear set in PG(3, q^n), with nuclei if known."""
    ctx = L.ctx
    spectrum = weight_spectrum(L)
    kwargs = {} if max_pairs is None else {"max_pairs": max_pairs}
    lines = long_lines(L, mode, candidates=candidates, **kwargs)

    transversals = ()
    if lines.exhaustive:
        verdict = space_pr_test(L, lines)
        pseudoregulus = verdict.pseudoregulus
        if verdict.pseudoregulus:
            transversals = verdict.transversals
    else:
        pseudoregulus = None
    flags, consistent = long_line_flags(L, lines, transversals, seed=seed)
    if pseudoregulus is None and (not L.is_scattered() or not all(flags)):
        # a long line not of pseudoregulus type rules it out in any mode
        pseudoregulus = False

    classes = tuple(classify_line(t) for t in transversals)
    polar = perp(transversals[0]) == transversals[1] if transversals else None
    progress.note("Checking degeneracies...")
    dimension = span_dimension(L)
    return GeoSignature(
        label=L.label,
        q=ctx.q,
        n=ctx.n,
        rank=L.rank,
        nuclei=nuclei,
        size=L.size,
        spectrum=spectrum,
        scattered=L.is_scattered(),
        long_line_mode=lines.mode,
        long_line_count=len(lines),
        long_line_weights=tuple(sorted(lines.weights)),
        long_line_pr=tuple(sorted(flags)),
        pseudoregulus=pseudoregulus,
        transversal_classes=classes,
        transversals_polar=polar,
        transversal_consistent=consistent if transversals else None,
        disjoint_from_quadric=disjoint_from_Q(L),
        span_dimension=dimension,
        in_plane=dimension <= 3,
        cone=cone_vertex(L) is not None,
        named_lines=(
            ("r1", _named_line(L, r1(ctx), seed)),
            ("r1_perp", _named_line(L, r1_perp(ctx), seed)),
        ),
    )


def signature(
    S,
    *,
    mode="exhaustive",
    nuclei_method="spreadset",
    candidates=(),
    max_pairs=None,
    seed=0,
):
    """Run the full invariant pipeline on a spread map or spread set."""
    spread = S.spread_set() if isinstance(S, SpreadMap) else S
    progress.note(f"Computing nuclei of {spread.label}...")
    nuclei = compute_nuclei(spread, nuclei_method, seed=seed)
    L = build_linear_set(spread)
    return linear_set_signature(
        L,
        nuclei=nuclei,
        mode=mode,
        candidates=candidates,
        max_pairs=max_pairs,
        seed=seed,
    )
