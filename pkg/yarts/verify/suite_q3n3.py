"""Claims at q = 3, n = 3."""

from ..errors import ParameterError
from ..ffield import format_element, make_field
from ..linpoly import family_H, lp_rank
from ..nuclei import compute_nuclei
from ..presemifield import default_xi, zero_divisor_search
from .claims import claim, error, expect, measured
from .common import condition_and_zero_divisors, field_properties, transpose_closure

SUITE = "q3n3"
DA = {"a": "g"}


@claim("field-properties", suite=SUITE, fact="field and linearized polynomial laws on F_27")
def claim_field_properties(ws):
    yield from field_properties(make_field(3, 1, 3))


@claim("xi", suite=SUITE, fact="the default non-square of F_3 is 2")
def claim_xi(ws):
    yield expect("xi", int(default_xi(make_field(3, 1, 3))), 2)


@claim("norm-forced", suite=SUITE, fact="N(g) = -1 for q = 3, n = 3")
def claim_norm_forced(ws):
    ctx = make_field(3, 1, 3)
    yield expect("N(g)", format_element(ctx, ctx.norm_q(ctx.generator)), format_element(ctx, -ctx.one()))


@claim("h-singular", suite=SUITE, fact="H_{b,1} is singular exactly for the 13 elements b of norm 1")
def claim_h_singular(ws):
    ctx = make_field(3, 1, 3)
    singular = [b for b in ctx.elements[1:] if lp_rank(family_H(ctx, b, 1))[0] < ctx.n]
    yield expect("singular", len(singular), 13)
    if any(ctx.norm_q(b) != 1 for b in singular):
        yield error("singular", "a singular H_{b,1} has N(b) ≠ 1")


@claim("dB-rejected", suite=SUITE, fact="the B family does not exist at q = 3")
def claim_db_rejected(ws):
    try:
        ws.family("dB", 3, 3, b="g")
    except ParameterError as e:
        yield expect("message", str(e), "N_q(b) ∈ {±1} for all b when q=3")
    else:
        yield error("dB", "dB was built at q = 3")


@claim("dA-condition", suite=SUITE, fact="image condition and no zero divisors for dA, N(a) = -1")
def claim_da_condition(ws):
    yield from condition_and_zero_divisors(ws, "dA", 3, 3, **DA)


@claim("dA-zero-divisor-oracle", suite=SUITE, after=[claim_da_condition], fact="no zero product among all pairs")
def claim_da_oracle(ws):
    witness = zero_divisor_search(ws.family("dA", 3, 3, **DA))
    if witness is not None:
        yield error("zero-divisors", f"zero product at {witness}")


@claim("dA-nuclei", suite=SUITE, fact="dA nuclei (left, middle, right, center) = (27, 3, 9, 3) by brute force and fast path")
def claim_da_nuclei(ws):
    brute = ws.nuclei("dA", 3, 3, method="bruteforce", **DA)
    fast = ws.nuclei("dA", 3, 3, **DA)
    yield expect("bruteforce", brute.as_tuple(), (27, 3, 9, 3))
    yield expect("spreadset", fast.as_tuple(), (27, 3, 9, 3))


@claim("dA-linear-set", suite=SUITE, fact="|L| = 352, x_2 = 4 and Σ x_i (q^i - 1)/(q - 1) = 364")
def claim_da_linear_set(ws):
    L = ws.linear_set("dA", 3, 3, **DA)
    spectrum = L.to_json()["spectrum"]
    yield expect("size", L.size, 352)
    yield expect("x_2", spectrum[1], 4)
    yield expect("total", sum(x * (3 ** (i + 1) - 1) // 2 for i, x in enumerate(spectrum)), 364)
    if L.is_scattered():
        yield error("scattered", "L is scattered")
        return False


@claim("dA-closure", suite=SUITE, after=[claim_da_linear_set], fact="transpose and translation dual stay in the A family")
def claim_da_closure(ws):
    yield from transpose_closure(ws, "dA", 3, 3, **DA)


@claim("k17-nuclei", suite=SUITE, fact="K17 has middle nucleus q^n and its transpose has right nucleus q^n")
def claim_k17(ws):
    S = ws.family("k17", 3, 3)
    spread = S.spread_set()
    report = compute_nuclei(spread)
    transposed = compute_nuclei(spread.transpose())
    yield measured("k17", report.as_tuple())
    yield measured("k17^T", transposed.as_tuple())
    yield expect("middle", report.middle, 27)
    yield expect("transpose_right", transposed.right, 27)
