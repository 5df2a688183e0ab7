"""Shared, memoised objects for the claims of one verification run."""

from .. import progress
from ..ffield import make_field
from ..linset import MAX_PAIRS, build_Lst, build_linear_set, long_lines
from ..nuclei import compute_nuclei
from ..presemifield import PresemifieldSpec, build_family
from ..signature import linear_set_signature


class Workspace:
    """
    Builds families, linear sets and signatures once per run.

    Claims of the same suite share the expensive objects through it.
    """

    def __init__(self, *, seed=0, max_pairs=MAX_PAIRS):
        self.seed = seed
        self.max_pairs = max_pairs
        self._memo = {}

    def _get(self, key, compute):
        if key not in self._memo:
            self._memo[key] = compute()
        return self._memo[key]

    @staticmethod
    def spec(family, p, n, **params):
        return PresemifieldSpec(family=family, p=p, n=n, **params)

    def family(self, family, p, n, **params):
        spec = self.spec(family, p, n, **params)
        key = ("family", tuple(sorted(spec.to_json().items())))
        return self._get(key, lambda: build_family(spec))

    def linear_set(self, family, p, n, **params):
        S = self.family(family, p, n, **params)
        key = ("linset", id(S))
        return self._get(key, lambda: build_linear_set(S))

    def lst(self, p, n, s, t):
        return self._get(("lst", p, n, s, t), lambda: build_Lst(make_field(p, 1, n), s, t))

    def long_lines(self, family, p, n, **params):
        L = self.linear_set(family, p, n, **params)
        key = ("long-lines", id(L))
        return self._get(key, lambda: long_lines(L, max_pairs=self.max_pairs))

    def nuclei(self, family, p, n, *, method="spreadset", **params):
        S = self.family(family, p, n, **params)
        key = ("nuclei", id(S), method)
        return self._get(key, lambda: compute_nuclei(S.spread_set(), method, seed=self.seed))

    def signature(self, family, p, n, *, mode="exhaustive", max_pairs=None, **params):
        S = self.family(family, p, n, **params)
        key = ("signature", id(S), mode, max_pairs)

        def compute():
            progress.note(f"Signature of {S.label} (q = {S.ctx.q}, n = {S.ctx.n}, {mode})")
            return linear_set_signature(
                self.linear_set(family, p, n, **params),
                nuclei=self.nuclei(family, p, n, **params),
                mode=mode,
                max_pairs=max_pairs or self.max_pairs,
                seed=self.seed,
            )

        return self._get(key, compute)
