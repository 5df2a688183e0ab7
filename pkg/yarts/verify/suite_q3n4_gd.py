"""Weight spectra of generalized Dickson semifields, mostly at q = 3, n = 4."""

import numpy as np

from ..linset import cone_vertex, span_dimension
from .claims import claim, error, expect, measured

SUITE = "q3n4-gd"


def _heavy_points_on(L, weight, zero_columns):
    """Whether every point of this weight has the given coordinates zero."""
    points = L.points[L.weights == weight]
    return not np.any(points[:, zero_columns].view(np.ndarray))


def _size(q, n, *weights):
    """|L| when the points of weight w > 1 fill r, r^perp or both, one weight per line."""
    size = (q**n - 1) ** 2 // (q - 1) if len(weights) == 2 else (q ** (2 * n) - q**n) // (q - 1)
    return size + sum((q**n - 1) // (q**w - 1) for w in weights)


@claim("s-only", suite=SUITE, fact="gcd(s,n) = h > 1, gcd(t,n) = 1: heavy points of weight h on r, |L| = (q^2n - q^n)/(q - 1) + (q^n - 1)/(q^h - 1)")
def claim_s_only(ws):
    L = ws.linear_set("gd", 3, 4, s=2, t=1)
    spectrum = L.to_json()["spectrum"]
    yield expect("size", L.size, 3250)
    yield expect("formula", L.size, _size(3, 4, 2))
    yield expect("x_2", spectrum[1], 10)
    if not _heavy_points_on(L, 2, [1, 2]):
        yield error("position", "a point of weight 2 lies off r")


@claim("t-only", suite=SUITE, fact="gcd(t,n) = k > 1, gcd(s,n) = 1: heavy points of weight k on r^perp, same size")
def claim_t_only(ws):
    L = ws.linear_set("gd", 3, 4, s=1, t=2)
    spectrum = L.to_json()["spectrum"]
    yield expect("size", L.size, _size(3, 4, 2))
    yield expect("x_2", spectrum[1], 10)
    if not _heavy_points_on(L, 2, [0, 3]):
        yield error("position", "a point of weight 2 lies off r^perp")


@claim("both", suite=SUITE, fact="gcd(s,n) = h > 1 and gcd(t,n) = k > 1 (at n = 6, s = 2, t = 3): |L| = (q^n - 1)^2/(q - 1) + (q^n - 1)/(q^h - 1) + (q^n - 1)/(q^k - 1)")
def claim_both(ws):
    L = ws.linear_set("gd", 3, 6, s=2, t=3)
    spectrum = L.to_json()["spectrum"]
    yield expect("size", L.size, 265111)
    yield expect("formula", L.size, _size(3, 6, 2, 3))
    yield expect("x_2", spectrum[1], 91)
    yield expect("x_3", spectrum[2], 28)
    if not _heavy_points_on(L, 2, [1, 2]) or not _heavy_points_on(L, 3, [0, 3]):
        yield error("position", "heavy points off r and r^perp")


@claim("degenerate", suite=SUITE, fact="s = 0: L is a union of lines through (1, 0, 0, 1) inside the plane X0 = X3")
def claim_degenerate(ws):
    L = ws.linear_set("gd", 3, 4, s=0, t=1)
    spectrum = L.to_json()["spectrum"]
    yield measured("spectrum", spectrum)
    yield expect("span_dimension", span_dimension(L), 3)
    vertex = cone_vertex(L)
    if vertex is None:
        yield error("cone", "no vertex found")
    else:
        yield expect("vertex", [int(x) for x in vertex], [1, 0, 0, 1])
    yield expect("x_n", spectrum[-1], 1)
    yield expect("size", L.size, (3**8 - 3**4) // 2 + 1)
