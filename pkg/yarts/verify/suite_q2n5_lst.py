"""Claims on the linear sets L_{s,t} at q = 2, n = 5."""

from ..linset import long_lines
from ..pseudoregulus import space_pr_test
from .claims import claim, expect, measured

SUITE = "q2n5-lst"


def _long_lines(ws, s, t):
    return long_lines(ws.lst(2, 5, s, t), max_pairs=ws.max_pairs)


@claim("scattered", suite=SUITE, fact="L_{s,t} with gcd(s,n) = gcd(t,n) = 1 is scattered of size (q^(2n) - 1)/(q - 1)")
def claim_scattered(ws):
    for s, t in ((1, 1), (1, 2), (1, 4)):
        L = ws.lst(2, 5, s, t)
        yield expect(f"size_{s}_{t}", L.size, 1023)
        yield expect(f"scattered_{s}_{t}", L.is_scattered(), True)


@claim("two-long-lines", suite=SUITE, fact="L_{1,2} has exactly two long lines")
def claim_two_long_lines(ws):
    lines = _long_lines(ws, 1, 2)
    yield expect("long_lines", len(lines), 2)
    yield measured("lines", [line.to_json() for line in lines.lines])


@claim("pseudoregulus", suite=SUITE, fact="L_{1,1} and L_{1,4} have q^n + 1 = 33 long lines and are of pseudoregulus type")
def claim_pseudoregulus(ws):
    for s, t in ((1, 1), (1, 4)):
        L = ws.lst(2, 5, s, t)
        lines = _long_lines(ws, s, t)
        yield expect(f"long_lines_{s}_{t}", len(lines), 33)
        verdict = space_pr_test(L, lines)
        yield expect(f"pseudoregulus_{s}_{t}", verdict.pseudoregulus, True)
