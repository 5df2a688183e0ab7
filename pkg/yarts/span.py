"""Enumeration of F_p-spans and F_p coordinates of vectors over F_{q^n}."""

import itertools

import numpy as np

CHUNK_SIZE = 2**17


def combinations(p, d):
    """All vectors of F_p^d as an integer array, in lexicographic order."""
    if d == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(range(p), repeat=d)), dtype=np.int64)


def combine(ctx, coefficients, basis):
    """F_p-linear combinations (integer coefficients) of the rows of basis."""
    if basis.shape[0] == 0:
        return ctx.GF.Zeros((len(coefficients), basis.shape[1]))
    return ctx.embed_prime(coefficients) @ basis


def _halves(ctx, basis):
    d = basis.shape[0]
    low = d // 2
    head = combine(ctx, combinations(ctx.p, low), basis[:low])
    tail = combine(ctx, combinations(ctx.p, d - low), basis[low:])
    return head, tail


def chunk_count(ctx, basis):
    """Number of chunks `span_chunks` will yield."""
    head, tail = ctx.p ** (basis.shape[0] // 2), ctx.p ** (basis.shape[0] - basis.shape[0] // 2)
    rows = max(1, CHUNK_SIZE // tail)
    return -(-head // rows)


def span_chunks(ctx, basis):
    """
    Yield every vector of the F_p-span of the rows of basis, in chunks.

    The span is the sumset of the spans of the two halves of the basis. The
    zero vector is the first row of the first chunk.
    """
    if basis.shape[0] == 0:
        yield ctx.GF.Zeros((1, basis.shape[1]))
        return
    head, tail = _halves(ctx, basis)
    rows = max(1, CHUNK_SIZE // len(tail))
    for start in range(0, len(head), rows):
        block = head[start : start + rows]
        total = block[:, np.newaxis, :] + tail[np.newaxis, :, :]
        yield total.reshape(-1, basis.shape[1])


def flat_coords(ctx, vectors):
    """F_p coordinates of vectors over F_{q^n}, flattened along the last axis."""
    coords = ctx.coords(vectors)
    return coords.reshape(coords.shape[:-2] + (-1,))


def left_null_space(matrix):
    """Rows λ with λ @ matrix = 0, as a prime-field array."""
    return matrix.T.null_space()
