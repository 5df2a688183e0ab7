"""Claims at q = 5, n = 3."""

import itertools

import numpy as np

from ..catalog import distinguish, gtf_nuclei_discrepancy
from ..ffield import make_field
from ..linpoly import family_A, family_B, lp_adjoint
from ..linset import restrict_to_line
from ..presemifield import default_xi
from ..projective import lines_meet, plucker, r1, r1_perp
from ..pseudoregulus import line_pr_test_graph, line_pr_test_oracle, restriction_graph
from .claims import claim, error, expect, measured, warning
from .common import condition_and_zero_divisors, field_properties, transpose_closure

SUITE = "q5n3"
DA = {"a": "g"}
DA_NONSCATTERED = {"a": "g^2"}
DB = {"b": "g"}
DAB = {"b": "g"}


@claim("field-properties", suite=SUITE, fact="field and linearized polynomial laws on F_125")
def claim_field_properties(ws):
    yield from field_properties(make_field(5, 1, 3))


@claim("xi", suite=SUITE, fact="the default non-square of F_5 is 2")
def claim_xi(ws):
    yield expect("xi", int(default_xi(make_field(5, 1, 3))), 2)


@claim("adjoint-identities", suite=SUITE, fact="adjoint(A_{a,r}) = A_{a^(q^r),-r} and adjoint(B_{b,r}) = B_{b^(q^-r),-r}")
def claim_adjoint_identities(ws):
    ctx = make_field(5, 1, 3)
    checked = 0
    norms = ctx.norm_q(ctx.elements[1:])
    valid_a = ctx.elements[1:][norms != 1][:5]
    valid_b = ctx.elements[1:][(norms != 1) & (norms != -ctx.one())][:5]
    for r, a in itertools.product((1, 2), valid_a):
        if lp_adjoint(family_A(ctx, a, r)) != family_A(ctx, ctx.frobenius(a, r), -r):
            yield error("A", f"adjoint identity fails for a = {a}, r = {r}")
        checked += 1
    for r, b in itertools.product((1, 2), valid_b):
        if lp_adjoint(family_B(ctx, b, r)) != family_B(ctx, ctx.frobenius(b, -r), -r):
            yield error("B", f"adjoint identity fails for b = {b}, r = {r}")
        checked += 1
    yield measured("checked", checked)
    if checked < 20:
        yield error("checked", f"only {checked} parameter choices")


@claim("condition", suite=SUITE, fact="image condition and no zero divisors for dA, dB and dAB")
def claim_condition(ws):
    for family, params in (("dA", DA), ("dB", DB), ("dAB", DAB)):
        yield from condition_and_zero_divisors(ws, family, 5, 3, **params)


@claim("nuclei", suite=SUITE, fact="nuclei (125, 5, 25, 5) for dA and dB, (125, 5, 5, 5) for dAB")
def claim_nuclei(ws):
    yield expect("dA", ws.nuclei("dA", 5, 3, **DA).as_tuple(), (125, 5, 25, 5))
    yield expect("dB", ws.nuclei("dB", 5, 3, **DB).as_tuple(), (125, 5, 25, 5))
    yield expect("dAB", ws.nuclei("dAB", 5, 3, **DAB).as_tuple(), (125, 5, 5, 5))


@claim("dA-scattered", suite=SUITE, fact="N(a) ∉ {±1}: L_A is maximum scattered of pseudoregulus type, |L| = 3906")
def claim_da_scattered(ws):
    sig = ws.signature("dA", 5, 3, **DA)
    yield expect("size", sig.size, 3906)
    yield expect("scattered", sig.scattered, True)
    yield expect("pseudoregulus", sig.pseudoregulus, True)


@claim("dA-non-scattered", suite=SUITE, fact="N(a) = -1: |L| = 3876 and x_2 = 6")
def claim_da_non_scattered(ws):
    L = ws.linear_set("dA", 5, 3, **DA_NONSCATTERED)
    spectrum = L.to_json()["spectrum"]
    yield expect("size", L.size, 3876)
    yield expect("x_2", spectrum[1], 6)


@claim("dB-long-lines", suite=SUITE, fact="L_B has exactly 126 pairwise disjoint long lines and two transversals, external and polar")
def claim_db_long_lines(ws):
    sig = ws.signature("dB", 5, 3, **DB)
    yield expect("size", sig.size, 3906)
    yield expect("scattered", sig.scattered, True)
    yield expect("long_lines", sig.long_line_count, 126)
    yield expect("pseudoregulus", sig.pseudoregulus, True)
    yield expect("transversals", sig.transversal_classes, ("external", "external"))
    yield expect("polar", sig.transversals_polar, True)
    yield measured("transversal_consistent", sig.transversal_consistent)


@claim("dB-disjoint", suite=SUITE, after=[claim_db_long_lines], fact="the long lines of L_B are pairwise disjoint")
def claim_db_disjoint(ws):
    lines = ws.long_lines("dB", 5, 3, **DB).lines
    coordinates = plucker(type(lines[0].rows)(np.stack([line.rows.view(np.ndarray) for line in lines])))
    meets = lines_meet(coordinates[:, np.newaxis], coordinates[np.newaxis, :])
    np.fill_diagonal(meets, False)
    yield measured("meeting_pairs", int(meets.sum()) // 2)
    if meets.any():
        yield error("disjoint", "two long lines of L_B meet")


@claim("line-tests-agree", suite=SUITE, fact="the graph test and the point oracle agree on r_1 and r_1^perp")
def claim_line_tests_agree(ws):
    for family, params in (("dA", DA), ("dB", DB), ("dAB", DAB)):
        L = ws.linear_set(family, 5, 3, **params)
        for name, line in (("r1", r1(L.ctx)), ("r1_perp", r1_perp(L.ctx))):
            restriction = restrict_to_line(L, line)
            if restriction.rank != L.ctx.n:
                continue
            graph = restriction_graph(restriction)
            oracle = line_pr_test_oracle(restriction)
            yield measured(f"{family}_{name}", oracle.pseudoregulus)
            if graph is None:
                continue
            verdict = line_pr_test_graph(graph[0], strict=False, seed=ws.seed)
            if verdict.pseudoregulus != oracle.pseudoregulus:
                yield error("disagree", f"{family} on {name}: graph {verdict.pseudoregulus}, oracle {oracle.pseudoregulus}")


@claim("dAB-non-scattered", suite=SUITE, fact="N(b^2) = -1: |L| = 3901 and x_2 = 1")
def claim_dab(ws):
    ctx = make_field(5, 1, 3)
    b = ctx.generator
    yield expect("N(b^2)", int(ctx.norm_q(b * b)), int(-ctx.one()))
    L = ws.linear_set("dAB", 5, 3, **DAB)
    spectrum = L.to_json()["spectrum"]
    yield expect("size", L.size, 3901)
    yield expect("x_2", spectrum[1], 1)


@claim("closure", suite=SUITE, fact="transpose and translation dual stay in their families")
def claim_closure(ws):
    for family, params in (("dA", DA), ("dB", DB), ("dAB", DAB)):
        yield from transpose_closure(ws, family, 5, 3, **params)


@claim(
    "gtf-nuclei",
    suite=SUITE,
    fact="GTF nuclei from the spread set and from sampled probes: middle q^gcd(t+n,2), right q^gcd(t,2) as printed",
)
def claim_gtf_nuclei(ws):
    for t in (1, 2):
        report = ws.nuclei("gtf", 5, 3, t=t)
        yield measured(f"t={t}", report.as_tuple())
        sampled = ws.nuclei("gtf", 5, 3, t=t, method="sampled")
        yield expect(f"t={t}-sampled", sampled.as_tuple(), report.as_tuple())
        message = gtf_nuclei_discrepancy(5, 3, t, (report.middle, report.right))
        if message is not None:
            yield warning("gtf-formula", message)


@claim("dB-vs-gtf", suite=SUITE, after=[claim_db_long_lines], fact="signature(dB) equals the signature of a generalized twisted field")
def claim_db_vs_gtf(ws):
    target = ws.signature("dB", 5, 3, **DB).invariants()
    matched = []
    for t in (1, 2):
        if ws.signature("gtf", 5, 3, t=t).invariants() == target:
            matched.append(t)
    yield measured("matching_t", matched)
    if not matched:
        yield error("gtf", "no GTF with t in {1, 2} has the signature of dB")


@claim("dB-distinguish", suite=SUITE, after=[claim_db_long_lines], fact="GTF is the only known family not excluded for dB")
def claim_db_distinguish(ws):
    verdict = distinguish(ws.signature("dB", 5, 3, **DB))
    yield measured("verdict", verdict.to_json()["families"])
    yield expect("compatible", verdict.compatible(), ["GTF"])
    for family in verdict.families:
        if family.status == "excluded" and not all(reason.citation for reason in family.reasons):
            yield error("citation", f"{family.name} excluded without a citation")
