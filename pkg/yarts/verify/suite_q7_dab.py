"""The scattered AB cases at q = 7, where N(b^2) = -1 cannot happen."""

from ..ffield import make_field
from ..linset import graph_linear_set
from ..presemifield import dempwolff_maps
from ..pseudoregulus import line_pr_test_graph
from .claims import claim, error, expect

SUITE = "q7-dab"
DAB = {"b": "g"}
# |L|^2 = 19608^2 for q = 7, n = 3
CASE_I_PAIRS = 4 * 10**8


def _norms(ctx):
    b = ctx.generator
    return int(ctx.norm_q(b)), int(ctx.norm_q(b * b))


@claim("norms", suite=SUITE, fact="b = g has N(b) ∉ {±1} and N(b^2) ≠ -1 for q = 7")
def claim_norms(ws):
    for n in (3, 5):
        norm, norm_squared = _norms(make_field(7, 1, n))
        if norm in (1, 6) or norm_squared == 6:
            yield error("norm", f"n = {n}: N(b) = {norm}, N(b^2) = {norm_squared}")
            return False


@claim("case-i", suite=SUITE, after=[claim_norms], fact="n = 3: L_AB is maximum scattered of pseudoregulus type")
def claim_case_i(ws):
    sig = ws.signature("dAB", 7, 3, max_pairs=CASE_I_PAIRS, **DAB)
    yield expect("size", sig.size, (7**6 - 1) // 6)
    yield expect("scattered", sig.scattered, True)
    yield expect("long_lines", sig.long_line_count, 7**3 + 1)
    yield expect("pseudoregulus", sig.pseudoregulus, True)


@claim("case-ii", suite=SUITE, after=[claim_norms], fact="n = 5: the graph of ξB_{b,-r} (on r_1) is of pseudoregulus type, that of A_{b^2,r} (on r_1^perp) is scattered but not")
def claim_case_ii(ws):
    ctx = make_field(7, 1, 5)
    F1, F2, xi = dempwolff_maps(ctx, ws.spec("dAB", 7, 5, **DAB))
    on_r1 = F2.scale(xi)
    yield expect("r1", line_pr_test_graph(on_r1, seed=ws.seed).pseudoregulus, True)
    yield expect("r1_perp_scattered", graph_linear_set(ctx, F1).is_scattered(), True)
    yield expect("r1_perp", line_pr_test_graph(F1, strict=False, seed=ws.seed).pseudoregulus, False)
