"""Claims at q = 3, n = 5."""

from ..ffield import make_field
from .claims import claim, expect
from .common import condition_and_zero_divisors, field_properties

SUITE = "q3n5"
DA = {"a": "g"}


@claim("field-properties", suite=SUITE, fact="field and linearized polynomial laws on F_243")
def claim_field_properties(ws):
    yield from field_properties(make_field(3, 1, 5))


@claim("dA-condition", suite=SUITE, fact="image condition and no zero divisors for dA")
def claim_da_condition(ws):
    yield from condition_and_zero_divisors(ws, "dA", 3, 5, **DA)


@claim("dA-nuclei", suite=SUITE, fact="dA nuclei (q^n, q, q^2, q) = (243, 3, 9, 3)")
def claim_da_nuclei(ws):
    yield expect("spreadset", ws.nuclei("dA", 3, 5, **DA).as_tuple(), (243, 3, 9, 3))


@claim("dA-linear-set", suite=SUITE, fact="N(a) = -1: |L| = 29404 and x_2 = (3^4 - 1)/2 = 40")
def claim_da_linear_set(ws):
    L = ws.linear_set("dA", 3, 5, **DA)
    spectrum = L.to_json()["spectrum"]
    yield expect("size", L.size, 29404)
    yield expect("x_2", spectrum[1], 40)
    yield expect("heavier", sum(spectrum[2:]), 0)
