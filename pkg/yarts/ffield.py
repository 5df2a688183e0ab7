"""
Finite field contexts.

A `FieldCtx` fixes the tower F_p ⊂ F_q ⊂ F_{q^n} (q = p^h) together with a
deterministic modulus and generator. Elements are `galois` field arrays of
the context's `GF` class, so every operation here is vectorised: it takes
and returns arrays of any shape.
"""

import functools
import math
import re

import galois
import numpy as np

from .errors import CapExceeded, ParameterError

MAX_FIELD_ORDER = 2**24
LOOKUP_CAP = 2**20


class FieldCtx:
    """Arithmetic context for F_{q^n} with q = p^h."""

    def __init__(self, p, h, n, *, lookup_cap=LOOKUP_CAP):
        self.p = p
        self.h = h
        self.n = n
        self.q = p**h
        self.order = self.q**n
        self.degree = h * n

        self.prime_field = galois.GF(p)
        # First monic primitive polynomial in lexicographic order; the
        # generator is the class of the indeterminate.
        self.modulus = galois.primitive_poly(p, self.degree, method="min")
        if self.degree == 1:
            root = (-int(self.modulus.coeffs[-1])) % p
            self.GF = galois.GF(p, primitive_element=root)
        else:
            self.GF = galois.GF(
                self.order,
                irreducible_poly=self.modulus,
                primitive_element=p,
                compile="jit-lookup" if self.order <= lookup_cap else "jit-calculate",
            )
        self.generator = self.GF.primitive_element

    def __repr__(self):
        return f"FieldCtx(p={self.p}, h={self.h}, n={self.n})"

    @property
    def key(self):
        """Hashable identity of the context."""
        return (self.p, self.h, self.n)

    def same_as(self, other):
        """Whether two contexts describe the same field."""
        return self.key == other.key

    def describe(self):
        """Describe the context for reports."""
        return {
            "p": self.p,
            "h": self.h,
            "n": self.n,
            "modulus": str(self.modulus),
            "generator": "g = x" if self.degree > 1 else f"g = {int(self.generator)}",
        }

    # -- constants ---------------------------------------------------------

    def zero(self):
        return self.GF(0)

    def one(self):
        return self.GF(1)

    def element(self, value):
        """Coerce integers (or arrays of integer representations) to the field."""
        if isinstance(value, galois.FieldArray):
            if type(value) is not self.GF:
                raise ParameterError(f"element belongs to {type(value).name}, not {self.GF.name}")
            return value
        return self.GF(value)

    @functools.cached_property
    def elements(self):
        """All elements in enumeration order: 0, then g^0, g^1, ..., g^(q^n - 2)."""
        powers = self.generator ** np.arange(self.order - 1)
        ints = np.concatenate([[0], powers.view(np.ndarray)])
        return self.GF(ints)

    @functools.cached_property
    def fp_basis(self):
        """The F_p-basis of F_{q^n} given by the polynomial basis."""
        return self.GF.Vector(self.prime_field(np.eye(self.degree, dtype=int)))

    @functools.cached_property
    def fq_basis(self):
        """The F_q-basis g^0, ..., g^(n-1) of F_{q^n}."""
        return self.generator ** np.arange(self.n)

    @functools.cached_property
    def fq_elements(self):
        """The subfield F_q inside F_{q^n}, sorted by integer representation."""
        step = (self.order - 1) // (self.q - 1)
        ints = np.concatenate(
            [[0], (self.generator ** (step * np.arange(self.q - 1))).view(np.ndarray)]
        )
        return self.GF(np.sort(ints))

    # -- coordinates over F_p ----------------------------------------------

    def coords(self, x):
        """F_p coordinates of elements, as a prime-field array with a trailing axis."""
        return self.element(x).vector()

    def from_coords(self, v):
        """Inverse of `coords`."""
        return self.GF.Vector(self.prime_field(np.asarray(v) % self.p))

    def embed_prime(self, values):
        """Embed F_p values (integers or prime-field arrays) in F_{q^n}."""
        return self.GF(np.asarray(values, dtype=np.int64) % self.p)

    # -- the operations ----------------------------------------------------

    def frobenius(self, x, r):
        """Compute x^(q^r), with r reduced modulo n."""
        return self.element(x) ** (self.q ** (r % self.n))

    def trace_q(self, x):
        """Trace from F_{q^n} down to F_q."""
        x = self.element(x)
        total = x.copy()
        for i in range(1, self.n):
            total = total + x ** (self.q**i)
        return total

    def norm_q(self, x):
        """Norm from F_{q^n} down to F_q."""
        return self.element(x) ** ((self.order - 1) // (self.q - 1))

    def enumerate_field(self):
        """Yield every element in enumeration order."""
        yield from self.elements

    def subfield_test(self, x, level):
        """Test membership of F_{q^level}, for level dividing n."""
        if level < 1 or self.n % level:
            raise ParameterError(f"level {level} does not divide n = {self.n}")
        x = self.element(x)
        return x ** (self.q**level) == x

    def dlog(self, x):
        """Discrete logarithm to base g, in [0, q^n - 1)."""
        x = self.element(x)
        if np.any(x.view(np.ndarray) == 0):
            raise ParameterError("the discrete logarithm of 0 is undefined")
        return x.log()

    def is_square(self, x):
        """Test for squares in F_{q^n} (0 counts as a square); q must be odd."""
        if self.p == 2:
            raise ParameterError("every element is a square in characteristic 2")
        x = self.element(x)
        return (x == 0) | (x ** ((self.order - 1) // 2) == 1)

    def least_nonsquare(self):
        """The non-square of F_{q^n} with the least integer representation."""
        if self.p == 2:
            raise ParameterError("characteristic 2 has no non-squares")
        candidates = self.GF(np.arange(1, self.order))
        return candidates[~self.is_square(candidates)][0]

    def least_fq_nonsquare(self):
        """The non-square of F_q with the least integer representation."""
        if self.p == 2:
            raise ParameterError("characteristic 2 has no non-squares")
        fq = self.fq_elements[1:]
        nonsquares = fq[fq ** ((self.q - 1) // 2) == -self.one()]
        return nonsquares[0]

    def random(self, shape, rng):
        """Uniformly random elements drawn from a numpy generator."""
        return self.GF(rng.integers(0, self.order, size=shape))


@functools.lru_cache(maxsize=None)
def make_field(p, h, n, *, lookup_cap=LOOKUP_CAP):
    """Build (or fetch) the field context for q = p^h and degree n."""
    if not isinstance(p, int) or not galois.is_prime(p):
        raise ParameterError(f"p = {p} is not prime")
    if h < 1 or n < 1:
        raise ParameterError(f"h and n must be positive, got h = {h}, n = {n}")
    order = p ** (h * n)
    if order > MAX_FIELD_ORDER:
        raise CapExceeded("field order", order, MAX_FIELD_ORDER)
    return FieldCtx(p, h, n, lookup_cap=lookup_cap)


class QuadExtCtx:
    """
    The quadratic extension F_{q^{2n}} = F_{q^n}(ω) with ω² = s.

    Elements are pairs of equally-shaped base-field arrays (x0, x1)
    standing for x0 + ω·x1.
    """

    def __init__(self, base, s):
        self.base = base
        self.s = base.element(s)
        self.order = base.order**2

    def __repr__(self):
        return f"QuadExtCtx({self.base!r}, s={format_element(self.base, self.s)})"

    def element(self, x0, x1=0):
        x0 = self.base.element(x0)
        x1 = self.base.element(x1)
        x0, x1 = np.broadcast_arrays(x0, x1)
        return self.base.GF(x0), self.base.GF(x1)

    def one(self):
        return self.element(1, 0)

    def elements(self):
        """All q^{2n} elements, x1 varying fastest."""
        ints = np.arange(self.order)
        return self.element(ints // self.base.order, ints % self.base.order)

    def add(self, a, b):
        return a[0] + b[0], a[1] + b[1]

    def sub(self, a, b):
        return a[0] - b[0], a[1] - b[1]

    def mul(self, a, b):
        a0, a1 = a
        b0, b1 = b
        return a0 * b0 + self.s * a1 * b1, a0 * b1 + a1 * b0

    def conj(self, a):
        """The involution x0 + ω x1 ↦ x0 − ω x1, i.e. z ↦ z^(q^n)."""
        return a[0], -a[1]

    def norm(self, a):
        """Norm down to F_{q^n}."""
        return a[0] * a[0] - self.s * a[1] * a[1]

    def inverse(self, a):
        denominator = self.norm(a)
        return a[0] / denominator, -a[1] / denominator

    def power(self, a, k):
        """Raise to a non-negative integer power by square-and-multiply."""
        result = self.element(np.ones_like(a[0].view(np.ndarray)), 0)
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def frobenius(self, a, t):
        """Compute z^(q^t) using ω^(q^t) = s^((q^t-1)/2) ω."""
        q_t = self.base.q**t
        sigma = self.s ** ((q_t - 1) // 2)
        return a[0] ** q_t, sigma * a[1] ** q_t

    def is_zero(self, a):
        return (a[0] == 0) & (a[1] == 0)


def quad_ext(ctx):
    """Build F_{q^{2n}} over a context with q odd."""
    if ctx.p == 2:
        raise ParameterError("the quadratic extension needs q odd")
    return QuadExtCtx(ctx, ctx.least_nonsquare())


_POWER = re.compile(r"^(-)?g(?:\^(-?\d+))?$")


def parse_element(ctx, text):
    """
    Parse the element syntax used on the command line and in JSON.

    Accepted forms are "0", "1", "-1", "g", "g^k", "-g^k" and
    "[c0,c1,...]" where c0 is the constant coefficient.
    """
    text = text.strip().replace(" ", "")
    if text.startswith("[") and text.endswith("]"):
        body = text[1:-1]
        coefficients = [int(c) for c in body.split(",")] if body else []
        if len(coefficients) > ctx.degree:
            raise ParameterError(f"too many coefficients in {text!r}")
        if any(not 0 <= c < ctx.p for c in coefficients):
            raise ParameterError(f"coefficients in {text!r} must lie in [0, {ctx.p})")
        return ctx.GF(sum(c * ctx.p**i for i, c in enumerate(coefficients)))
    if re.fullmatch(r"-?\d+", text):
        return ctx.embed_prime(int(text))
    match = _POWER.match(text)
    if match is None:
        raise ParameterError(f"cannot parse field element {text!r}")
    exponent = int(match.group(2)) if match.group(2) is not None else 1
    value = ctx.generator ** (exponent % (ctx.order - 1))
    return -value if match.group(1) else value


def format_element(ctx, x):
    """Format a single element as "0" or "g^k"."""
    x = ctx.element(x)
    if int(x) == 0:
        return "0"
    return f"g^{int(x.log())}"


def format_elements(ctx, xs):
    """Format an array of elements as a nested list of strings."""
    xs = ctx.element(xs)
    if xs.ndim == 0:
        return format_element(ctx, xs)
    return [format_elements(ctx, x) for x in xs]


def gcd(*values):
    """Greatest common divisor of several integers."""
    return functools.reduce(math.gcd, values)
