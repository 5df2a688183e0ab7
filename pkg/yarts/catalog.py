"""
Known rank-two semifield families and the exclusion engine.

`known_table` instantiates the recorded invariants of each known family for
given q and n. `distinguish` runs every rule on every applicable record and
reports, per family, whether a recorded invariant contradicts a measured
one. A family that survives every rule is "not excluded by recorded
invariants", which is not a claim of isotopy.
"""

import dataclasses
import itertools
import math

from .ffield import gcd

COMPATIBLE = "not excluded by recorded invariants"

_RULES = []


@dataclasses.dataclass(frozen=True)
class KnownFamilyRecord:
    """Recorded invariants of a known family, instantiated at (q, n)."""

    name: str
    applicable: bool
    constraint: str
    citations: tuple
    nuclei: frozenset = None
    nuclei_formula: str = ""
    scattered: bool = None
    pseudoregulus: bool = None
    long_lines_pr: bool = None
    transversals: str = None
    polar: bool = None
    shape: frozenset = None
    heavy_points: tuple = None
    large_weights: frozenset = None

    def cite(self, descriptor):
        return dict(self.citations).get(descriptor, self.name)

    def to_json(self):
        return {
            "name": self.name,
            "applicable": self.applicable,
            "constraint": self.constraint,
            "nuclei": self.nuclei_formula or None,
            "citations": dict(self.citations),
        }


def _gd_variants(n):
    """Admissible Dickson pairs (s, t) grouped by geometric class."""
    classes = {"degenerate": [], "scattered-pr": [], "scattered": [], "non-scattered": []}
    for s, t in itertools.product(range(n), repeat=2):
        if (s, t) == (0, 0) or gcd(s, t, n) != 1:
            continue
        if s == 0 or t == 0:
            classes["degenerate"].append((s, t))
        elif math.gcd(s, n) == 1 and math.gcd(t, n) == 1:
            if s == t or s + t == n:
                classes["scattered-pr"].append((s, t))
            else:
                classes["scattered"].append((s, t))
        else:
            classes["non-scattered"].append((s, t))
    return classes


def _gd_nuclei(q, n, variants):
    return frozenset((q ** math.gcd(t - s, n), q ** math.gcd(t + s, n)) for s, t in variants)


def _gd_records(q, n):
    classes = _gd_variants(n)
    formula = "middle q^gcd(t-s,n), right q^gcd(t+s,n)"
    nuclei_cite = ("nuclei", "generalized Dickson: middle nucleus of order q^gcd(t-s,n), right nucleus of order q^gcd(t+s,n)")
    records = []

    variants = classes["degenerate"]
    records.append(
        KnownFamilyRecord(
            "GD(s=0 or t=0)",
            bool(variants),
            "n > 1",
            (
                nuclei_cite,
                ("shape", "generalized Dickson with s = 0 or t = 0: union of lines through (1,0,0,1) inside the plane X0 = X3"),
            ),
            nuclei=_gd_nuclei(q, n, variants),
            nuclei_formula=formula,
            shape=frozenset({"plane", "cone"}),
        )
    )

    variants = classes["scattered-pr"]
    records.append(
        KnownFamilyRecord(
            "GD scattered, s = t or s + t = n",
            bool(variants),
            "gcd(s,n) = gcd(t,n) = 1",
            (
                nuclei_cite,
                ("scattered", "generalized Dickson with gcd(s,n) = gcd(t,n) = 1: maximum scattered"),
                ("pseudoregulus", "generalized Dickson, scattered: of pseudoregulus type iff s = t or s + t = n"),
                ("shape", "generalized Dickson with s, t > 0: not contained in a plane"),
            ),
            nuclei=_gd_nuclei(q, n, variants),
            nuclei_formula=formula,
            scattered=True,
            pseudoregulus=True,
            shape=frozenset(),
        )
    )

    variants = classes["scattered"]
    records.append(
        KnownFamilyRecord(
            "GD scattered, s ≠ t, s + t ≠ n",
            bool(variants),
            "n ≥ 5",
            (
                nuclei_cite,
                ("scattered", "generalized Dickson with gcd(s,n) = gcd(t,n) = 1: maximum scattered"),
                ("pseudoregulus", "generalized Dickson, scattered: of pseudoregulus type iff s = t or s + t = n"),
                ("long lines", "generalized Dickson, s ≠ t, s ≠ n - t: the only long lines are r and r^perp, both of pseudoregulus type"),
                ("shape", "generalized Dickson with s, t > 0: not contained in a plane"),
            ),
            nuclei=_gd_nuclei(q, n, variants),
            nuclei_formula=formula,
            scattered=True,
            pseudoregulus=False,
            long_lines_pr=True,
            shape=frozenset(),
        )
    )

    # empty for prime n, so the record first applies at n = 9 among odd n
    variants = classes["non-scattered"]
    large = frozenset(
        frozenset(w for w in (math.gcd(s, n), math.gcd(t, n)) if w > 1) for s, t in variants
    )
    records.append(
        KnownFamilyRecord(
            "GD non-scattered",
            bool(variants),
            "gcd(s,n) > 1 or gcd(t,n) > 1",
            (
                nuclei_cite,
                ("scattered", "generalized Dickson with gcd(s,n) > 1 or gcd(t,n) > 1: not scattered"),
                (
                    "large weights",
                    "generalized Dickson, non-scattered: the weights above 1 are gcd(s,n) on r and gcd(t,n) on r^perp; "
                    "weights {2} need {gcd(s,n), gcd(t,n)} = {1, 2}, i.e. n even",
                ),
                ("shape", "generalized Dickson with s, t > 0: not contained in a plane"),
            ),
            nuclei=_gd_nuclei(q, n, variants),
            nuclei_formula=formula,
            scattered=False,
            shape=frozenset(),
            large_weights=large,
        )
    )
    return records


def _gtf_nuclei(q, n):
    """The printed formulas, over every admissible t in [1, 2n)."""
    return frozenset(
        (q ** math.gcd(t + n, 2), q ** math.gcd(t, 2)) for t in range(1, 2 * n) if math.gcd(t, n) == 1
    )


def gtf_printed_nuclei(q, n, t):
    """(middle, right) of a generalized twisted field as printed."""
    return q ** math.gcd(t + n, 2), q ** math.gcd(t, 2)


def gtf_nuclei_discrepancy(q, n, t, measured):
    """A message when measured GTF (middle, right) differ from the printed formula, else None."""
    printed = gtf_printed_nuclei(q, n, t)
    if tuple(measured) == printed:
        return None
    return (
        f"GTF q={q} n={n} t={t}: measured (middle, right) = {tuple(measured)}, "
        f"printed formula gives {printed}"
    )


def known_table(q, n):
    """The known families with their invariants evaluated at (q, n)."""
    odd_n = n >= 3 and n % 2 == 1
    records = [
        KnownFamilyRecord(
            "K17",
            n >= 2,
            "n ≥ 2",
            (
                ("nuclei", "Knuth semifields K17: middle nucleus of order q^n"),
                ("pseudoregulus", "Knuth K17: scattered of pseudoregulus type"),
                ("transversals", "Knuth K17: transversal lines both contained in the quadric"),
            ),
            nuclei=frozenset({(q**n, None)}),
            nuclei_formula="middle q^n",
            scattered=True,
            pseudoregulus=True,
            transversals="contained",
        ),
        KnownFamilyRecord(
            "K19",
            n >= 2,
            "n ≥ 2",
            (
                ("nuclei", "Knuth semifields K19: right nucleus of order q^n"),
                ("pseudoregulus", "Knuth K19: scattered of pseudoregulus type"),
                ("transversals", "Knuth K19: transversal lines both contained in the quadric"),
            ),
            nuclei=frozenset({(None, q**n)}),
            nuclei_formula="right q^n",
            scattered=True,
            pseudoregulus=True,
            transversals="contained",
        ),
        KnownFamilyRecord(
            "TP",
            q == 3 and n >= 2,
            "q = 3, n ≥ 2",
            (("shape", "Thas-Payne symplectic semifields: union of lines contained in a plane"),),
            shape=frozenset({"plane"}),
        ),
        KnownFamilyRecord(
            "TP^perp",
            q == 3 and n >= 2,
            "q = 3, n ≥ 2",
            (("shape", "translation duals of Thas-Payne semifields: union of lines through a point"),),
            shape=frozenset({"cone"}),
        ),
        *_gd_records(q, n),
        KnownFamilyRecord(
            "GTF",
            n >= 2,
            "gcd(t, n) = 1",
            (
                ("nuclei", "generalized twisted fields: middle nucleus q^gcd(t+n,2), right nucleus q^gcd(t,2)"),
                ("pseudoregulus", "generalized twisted fields: of pseudoregulus type"),
                ("transversals", "generalized twisted fields: transversal lines external to the quadric"),
                ("polar", "generalized twisted fields: transversal lines pairwise polar"),
            ),
            nuclei=_gtf_nuclei(q, n),
            nuclei_formula="middle q^gcd(t+n,2), right q^gcd(t,2)",
            scattered=True,
            pseudoregulus=True,
            transversals="external",
            polar=True,
        ),
        KnownFamilyRecord(
            "JMPT",
            odd_n,
            "n ≥ 3 odd",
            (
                ("nuclei", "Johnson-Marino-Polverino-Trombetti: middle and right nuclei of order q^2"),
                ("heavy points", "JMPT: at least q+1 points of weight (n+1)/2 on a unique line"),
            ),
            nuclei=frozenset({(q**2, q**2)}),
            nuclei_formula="middle q^2, right q^2",
            scattered=False,
            heavy_points=((n + 1) // 2, q + 1),
        ),
        KnownFamilyRecord(
            "EMPT1",
            odd_n,
            "n ≥ 3 odd",
            (
                ("nuclei", "Ebert-Marino-Polverino-Trombetti, odd case: middle and right nuclei of order q"),
                ("heavy points", "EMPT1: q+1 points of weight (n+1)/2 on a unique line"),
            ),
            nuclei=frozenset({(q, q)}),
            nuclei_formula="middle q, right q",
            scattered=False,
            heavy_points=((n + 1) // 2, q + 1),
        ),
        KnownFamilyRecord(
            "EMPT2",
            n >= 4 and n % 2 == 0,
            "n ≥ 4 even",
            (("nuclei", "Ebert-Marino-Polverino-Trombetti, even case: middle and right nuclei of order q^2"),),
            nuclei=frozenset({(q**2, q**2)}),
            nuclei_formula="middle q^2, right q^2",
        ),
    ]
    return records


# -- rules -------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class Reason:
    invariant: str
    expected: str
    measured: str
    citation: str
    mode: str = ""

    def to_json(self):
        data = {
            "invariant": self.invariant,
            "expected": self.expected,
            "measured": self.measured,
            "citation": self.citation,
        }
        if self.mode:
            data["mode"] = self.mode
        return data


def rule(name, *, after=None):
    """
    Decorate exclusion rules.

    To order rules, pass `after` with the rules (NB rules, not names) that
    must run first.
    """
    if after is not None:
        for other in after:
            if isinstance(other, str):
                raise ValueError(f"{other!r} is not a rule, only a name")
            if not hasattr(other, "_rule_name"):
                raise ValueError(f"{other!r} is not a registered rule")

    def decorator(func):
        func._rule_name = name
        _RULES.append(func)
        return func

    return decorator


def exclude(invariant, expected, measured, citation, mode=""):
    return "excluded", Reason(invariant, str(expected), str(measured), citation, mode)


def undetermined(invariant, why):
    return "undetermined", Reason(invariant, "", why, "")


def _nuclei_match(allowed, measured):
    return all(a is None or a == m for a, m in zip(allowed, measured))


@rule("nuclei")
def rule_nuclei(record, sig):
    """Middle and right nuclei must fit one admissible parameter choice."""
    if record.nuclei is None:
        return
    if sig.nuclei is None:
        yield undetermined("nuclei", "nuclei were not computed")
        return
    measured = (sig.nuclei.middle, sig.nuclei.right)
    if not any(_nuclei_match(allowed, measured) for allowed in record.nuclei):
        yield exclude("nuclei (middle, right)", record.nuclei_formula, measured, record.cite("nuclei"))


@rule("scattered", after=[rule_nuclei])
def rule_scattered(record, sig):
    if record.scattered is not None and record.scattered != sig.scattered:
        citations = dict(record.citations)
        citation = citations.get("scattered", citations.get("pseudoregulus", record.name))
        yield exclude("scattered", record.scattered, sig.scattered, citation)


@rule("pseudoregulus", after=[rule_scattered])
def rule_pseudoregulus(record, sig):
    if record.pseudoregulus is None:
        return
    if sig.pseudoregulus is None:
        yield undetermined("pseudoregulus", f"long lines found in {sig.long_line_mode} mode only")
        return
    if sig.pseudoregulus != record.pseudoregulus:
        yield exclude(
            "pseudoregulus type",
            record.pseudoregulus,
            sig.pseudoregulus,
            record.cite("pseudoregulus"),
            sig.long_line_mode,
        )


@rule("long lines", after=[rule_pseudoregulus])
def rule_long_lines(record, sig):
    """Every long line of the record is of pseudoregulus type."""
    if record.long_lines_pr and not all(sig.long_line_pr):
        yield exclude(
            "long lines of pseudoregulus type",
            "all",
            f"{sig.long_line_pr.count(False)} of {len(sig.long_line_pr)} not",
            record.cite("long lines"),
            sig.long_line_mode,
        )


@rule("transversals", after=[rule_pseudoregulus])
def rule_transversals(record, sig):
    if not sig.pseudoregulus or not sig.transversal_classes:
        return
    if record.transversals is not None and set(sig.transversal_classes) != {record.transversals}:
        yield exclude(
            "transversal lines vs quadric",
            record.transversals,
            "/".join(sig.transversal_classes),
            record.cite("transversals"),
        )
    if record.polar is not None and sig.transversals_polar != record.polar:
        yield exclude("transversal lines polar", record.polar, sig.transversals_polar, record.cite("polar"))


@rule("shape")
def rule_shape(record, sig):
    if record.shape is None:
        return
    measured = frozenset(flag for flag, value in (("plane", sig.in_plane), ("cone", sig.cone)) if value)
    # an empty record shape means neither degeneracy may occur
    if (record.shape and not record.shape <= measured) or (not record.shape and measured):
        yield exclude(
            "shape",
            "+".join(sorted(record.shape)) or "neither in a plane nor a cone",
            "+".join(sorted(measured)) or "neither in a plane nor a cone",
            record.cite("shape"),
        )


@rule("heavy points")
def rule_heavy_points(record, sig):
    if record.heavy_points is None:
        return
    weight, minimum = record.heavy_points
    count = sig.heavy_points(weight)
    if count < minimum:
        yield exclude(
            f"points of weight ≥ {weight}",
            f"≥ {minimum}",
            count,
            record.cite("heavy points"),
        )


@rule("large weights")
def rule_large_weights(record, sig):
    if record.large_weights is None:
        return
    measured = frozenset(i + 1 for i, x in enumerate(sig.spectrum) if x and i > 0)
    if measured not in record.large_weights:
        yield exclude(
            "weights above 1",
            " or ".join(str(sorted(w)) for w in sorted(record.large_weights, key=sorted)),
            sorted(measured),
            record.cite("large weights"),
        )


# -- verdicts ------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class FamilyVerdict:
    name: str
    status: str
    reasons: tuple = ()
    constraint: str = ""

    def to_json(self):
        data = {"status": COMPATIBLE if self.status == "compatible" else self.status}
        if self.status == "not-applicable":
            data["reason"] = f"needs {self.constraint}"
        elif self.reasons:
            first = self.reasons[0]
            data["reason"] = f"{first.invariant}: expected {first.expected}, measured {first.measured}"
            data["citation"] = first.citation
            data["details"] = [reason.to_json() for reason in self.reasons]
        return data


@dataclasses.dataclass(frozen=True)
class Verdict:
    label: str
    families: tuple
    notes: tuple = ()

    def status_of(self, name):
        for family in self.families:
            if family.name == name:
                return family.status
        raise KeyError(name)

    def compatible(self):
        return [family.name for family in self.families if family.status == "compatible"]

    def to_json(self):
        return {
            "label": self.label,
            "families": {family.name: family.to_json() for family in self.families},
            "notes": list(self.notes),
        }


_NOTES = (
    "K17 and K19 are pairwise transposes; the linear-set geometry of the other families is invariant under transposition.",
    "The Dempwolff families are closed under the translation dual, so the verdicts cover translation duals.",
)


def _run_rules(record, sig):
    reasons = {"excluded": [], "undetermined": []}
    for func in _RULES:
        for level, reason in func(record, sig):
            if level not in reasons:
                raise ValueError(f"Unknown level {level!r}")
            reasons[level].append(reason)
    return reasons


def distinguish(sig, records=None):
    """Compare a signature against every known family."""
    if records is None:
        records = known_table(sig.q, sig.n)
    families = []
    for record in records:
        if not record.applicable:
            families.append(FamilyVerdict(record.name, "not-applicable", constraint=record.constraint))
            continue
        reasons = _run_rules(record, sig)
        if reasons["excluded"]:
            families.append(FamilyVerdict(record.name, "excluded", tuple(reasons["excluded"])))
        elif reasons["undetermined"]:
            families.append(FamilyVerdict(record.name, "undetermined", tuple(reasons["undetermined"])))
        else:
            families.append(FamilyVerdict(record.name, "compatible"))
    return Verdict(sig.label, tuple(families), _NOTES)
