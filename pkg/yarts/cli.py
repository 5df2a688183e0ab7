"""YARTS command-line interface."""

import argparse
import importlib.metadata
import json
import sys
import time
import warnings

import numpy as np

from . import cache, progress, report
from .catalog import distinguish, gtf_nuclei_discrepancy
from .errors import InvariantViolation, ParameterError, YartsError
from .ffield import LOOKUP_CAP, make_field
from .linset import (
    MAX_PAIRS,
    build_linear_set,
    build_Lst,
    coordinate_swap_keys,
    is_graph_shape,
    long_lines,
    translation_dual,
    weight_spectrum,
)
from .nuclei import BRUTEFORCE_CAP, METHODS, compute_nuclei
from .presemifield import (
    DEMPWOLFF_FAMILIES,
    FAMILIES,
    PresemifieldSpec,
    build_family,
    dempwolff_condition,
    dempwolff_maps,
    zero_divisor_check,
    zero_divisor_search,
)
from .pseudoregulus import space_pr_test
from .signature import linear_set_signature


def get_version():
    """
    Extract the current version number.

    This asks `importlib.metadata` what was installed, so the version lives
    in one place.
    """
    try:
        return importlib.metadata.version("yarts")
    except importlib.metadata.PackageNotFoundError:
        return "unknown"


class CheckFailed(Exception):
    """A command's own check failed; carries the first failing invariant."""


def _family_parser():
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group("family")
    group.add_argument("--family", choices=FAMILIES, help="family tag")
    group.add_argument("--spec", type=argparse.FileType("r"), help="read the family spec from a JSON file")
    group.add_argument("--p", type=int, help="characteristic")
    group.add_argument("--h", type=int, default=1, help="q = p^h (default: 1)")
    group.add_argument("--n", type=int, default=3, help="extension degree (default: 3)")
    group.add_argument("--r", type=int, default=1, help="Frobenius exponent r (default: 1)")
    group.add_argument("--s", type=int, help="GD exponent s")
    group.add_argument("--t", type=int, help="GD or GTF exponent t")
    for name in ("a", "b", "c", "f", "g", "xi"):
        group.add_argument(f"--{name}", help=f"element {name} (0, g^k or [c0,c1,...])")
    return parser


def _run_parser():
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group("run")
    group.add_argument("--seed", type=int, default=0, help="random seed (default: 0)")
    group.add_argument(
        "--lookup-cap",
        type=int,
        default=LOOKUP_CAP,
        help=f"largest field with lookup-table arithmetic (default: {LOOKUP_CAP})",
    )
    group.add_argument("--no-cache", action="store_true", help="do not use the on-disk cache")
    group.add_argument("-q", "--quiet", action="store_true", help="no progress output")
    group.add_argument("--json-only", action="store_true", help="print only the JSON report")
    group.add_argument("-o", "--output", help="write the JSON report to this path")
    return parser


def _lines_parser():
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group("long lines")
    group.add_argument(
        "--mode",
        choices=("exhaustive", "candidates"),
        default="exhaustive",
        help="long-line search (default: exhaustive)",
    )
    group.add_argument(
        "--max-pairs",
        type=int,
        default=MAX_PAIRS,
        help=f"cap on point pairs for the exhaustive search (default: {MAX_PAIRS})",
    )
    return parser


def _nuclei_parser():
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group("nuclei")
    group.add_argument(
        "--nuclei-method",
        choices=METHODS,
        default="spreadset",
        help="how to compute nuclei (default: spreadset)",
    )
    group.add_argument(
        "--bruteforce-cap",
        type=int,
        default=BRUTEFORCE_CAP,
        help=f"largest q^(2n) for brute-force nuclei (default: {BRUTEFORCE_CAP})",
    )
    return parser


def argument_parser():
    """Get the parser for command-line arguments."""
    parser = argparse.ArgumentParser(description="Yet Another Rank-Two Semifield checker")
    parser.add_argument(
        "-V", "--version", action="version", version=f"%(prog)s {get_version()}"
    )
    family = _family_parser()
    run = _run_parser()
    lines = _lines_parser()
    nuclei = _nuclei_parser()
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("build", parents=[family, run], help="build a presemifield and print its spread map")
    check = commands.add_parser(
        "check", parents=[family, run], help="check the image condition and zero divisors"
    )
    check.add_argument("--search", action="store_true", help="also search all element pairs for a zero product")
    commands.add_parser("nuclei", parents=[family, run, nuclei], help="compute the nuclei")
    linset = commands.add_parser("linset", parents=[family, run, lines], help="linear set and weight spectrum")
    linset.add_argument("--long-lines", action="store_true", help="also find the long lines")
    derive = commands.add_parser("derive", parents=[family, run], help="transpose or translation dual")
    which = derive.add_mutually_exclusive_group(required=True)
    which.add_argument("--transpose", action="store_true", help="the transposed spread set")
    which.add_argument("--translation-dual", action="store_true", help="the translation dual")
    commands.add_parser(
        "distinguish",
        parents=[family, run, lines, nuclei],
        help="compare the signature against the known families",
    )
    commands.add_parser("lst", parents=[family, run, lines], help="the linear set L_{s,t} of PG(3, q^n)")
    verify = commands.add_parser("verify-paper", parents=[run, lines], help="run verification suites")
    verify.add_argument("--suite", action="append", required=True, help="suite name, repeatable, or 'all'")
    return parser


def spec_from_options(options):
    """The family spec from --spec, overridden by explicit flags."""
    data = {}
    if options.spec is not None:
        with options.spec as f:
            data = json.load(f)
    for name in ("family", "p", "s", "t", "a", "b", "c", "f", "g", "xi"):
        value = getattr(options, name)
        if value is not None:
            data[name] = value
    for name in ("h", "n", "r"):
        data.setdefault(name, getattr(options, name))
    if "family" not in data:
        raise ParameterError("a family is required (--family or --spec)")
    if "p" not in data:
        raise ParameterError("the characteristic is required (--p or --spec)")
    return PresemifieldSpec.from_json(data)


def config_of(options):
    """The options echoed into reports (never paths or verbosity)."""
    config = vars(options).copy()
    for name in ("spec", "output", "quiet", "json_only", "no_cache"):
        config.pop(name, None)
    return {key: value for key, value in config.items() if value is not None}


# -- commands ---------------------------------------------------------------------


def command_build(options):
    spec = spec_from_options(options)
    S = build_family(spec, lookup_cap=options.lookup_cap)
    return spec, S.ctx, {"label": S.label, "spread_map": S.to_json(), "graph_shape": is_graph_shape(S)}


def command_check(options):
    spec = spec_from_options(options)
    S = build_family(spec, lookup_cap=options.lookup_cap)
    results = {}
    if spec.family in DEMPWOLFF_FAMILIES:
        condition = dempwolff_condition(*dempwolff_maps(S.ctx, spec))
        results["condition"] = condition.to_json()
        if not condition.holds:
            raise CheckFailed(f"image condition: {condition.to_json()}")
    progress.note("Scanning for zero divisors...")
    results["zero_divisor_free"] = zero_divisor_check(S)
    if not results["zero_divisor_free"]:
        raise CheckFailed("zero divisors: a nonzero matrix of the spread set is singular")
    if options.search:
        witness = zero_divisor_search(S)
        results["zero_product_search"] = "none found" if witness is None else repr(witness)
        if witness is not None:
            raise CheckFailed(f"zero product at {witness!r}")
    return spec, S.ctx, results


def command_nuclei(options):
    spec = spec_from_options(options)
    S = build_family(spec, lookup_cap=options.lookup_cap)
    nuclei = compute_nuclei(
        S.spread_set(), options.nuclei_method, cap=options.bruteforce_cap, seed=options.seed
    )
    results = {"nuclei": nuclei.to_json()}
    if spec.family == "gtf":
        message = gtf_nuclei_discrepancy(S.ctx.q, S.ctx.n, spec.t or 1, (nuclei.middle, nuclei.right))
        if message is not None:
            warnings.warn(message)
            results["gtf_formula_discrepancy"] = message
    return spec, S.ctx, results


def _linear_set_results(L, options, long_line_search):
    results = {"linear_set": L.to_json(), "weight_spectrum": list(weight_spectrum(L))}
    if long_line_search:
        lines = long_lines(L, options.mode, max_pairs=options.max_pairs)
        results["long_lines"] = lines.to_json()
        if lines.exhaustive:
            results["pseudoregulus"] = space_pr_test(L, lines).to_json()
    return results


def command_linset(options):
    spec = spec_from_options(options)
    S = build_family(spec, lookup_cap=options.lookup_cap)
    L = build_linear_set(S)
    return spec, S.ctx, _linear_set_results(L, options, options.long_lines)


def command_lst(options):
    if options.s is None or options.t is None:
        raise ParameterError("lst needs --s and --t")
    if options.p is None:
        raise ParameterError("lst needs --p")
    ctx = make_field(options.p, options.h, options.n, lookup_cap=options.lookup_cap)
    L = build_Lst(ctx, options.s, options.t)
    return None, ctx, _linear_set_results(L, options, True)


def command_derive(options):
    spec = spec_from_options(options)
    S = build_family(spec, lookup_cap=options.lookup_cap)
    L = build_linear_set(S)
    if options.transpose:
        derived = S.transpose()
        derived_set = build_linear_set(derived)
        swapped = bool(np.array_equal(derived_set.keys, coordinate_swap_keys(L)))
        if not swapped:
            raise CheckFailed("the transposed linear set is not the X1↔X2 swap of L")
        relation = {"coordinate_swap": swapped}
    else:
        derived = translation_dual(S)
        derived_set = build_linear_set(derived)
        same = weight_spectrum(derived_set) == weight_spectrum(L)
        relation = {"same_spectrum": same}
    return spec, S.ctx, {
        "label": derived.label,
        "spread_map": derived.to_json(),
        "graph_shape": is_graph_shape(derived),
        "linear_set": derived_set.to_json(),
        "relation": relation,
    }


def command_distinguish(options):
    spec = spec_from_options(options)
    S = build_family(spec, lookup_cap=options.lookup_cap)
    nuclei = compute_nuclei(
        S.spread_set(), options.nuclei_method, cap=options.bruteforce_cap, seed=options.seed
    )
    L = build_linear_set(S)
    sig = linear_set_signature(
        L, nuclei=nuclei, mode=options.mode, max_pairs=options.max_pairs, seed=options.seed
    )
    verdict = distinguish(sig)
    return spec, S.ctx, {"signature": sig.to_json(), "verdict": verdict.to_json()}


def command_verify(options):
    from .verify.claims import SUITES
    from .verify.cli import results_json, verify

    suites = SUITES if "all" in options.suite else tuple(dict.fromkeys(options.suite))
    unknown = [suite for suite in suites if suite not in SUITES]
    if unknown:
        raise ParameterError(f"unknown suite {unknown[0]!r}, choose from {', '.join(SUITES)}")
    results = verify(suites, seed=options.seed, max_pairs=options.max_pairs)
    failed = [
        f"{suite}/{result.name}: {result.errors[0][1]}"
        for suite, items in results.items()
        for result in items
        if result.errors
    ]
    return None, None, {"suites": results_json(results), "failed": failed}


COMMANDS = {
    "build": command_build,
    "check": command_check,
    "nuclei": command_nuclei,
    "linset": command_linset,
    "derive": command_derive,
    "distinguish": command_distinguish,
    "lst": command_lst,
    "verify-paper": command_verify,
}


def _emit(rep, options, started):
    if options.output:
        report.write_report(rep, options.output)
    if options.json_only:
        if not options.output:
            report.write_report(rep)
    else:
        report.print_summary(rep, time.monotonic() - started)


def main(args=sys.argv[1:]):
    """Run as main entry point."""
    options = argument_parser().parse_args(args)
    progress.set_quiet(options.quiet)
    cache.set_enabled(not options.no_cache)
    started = time.monotonic()

    try:
        spec, ctx, results = COMMANDS[options.command](options)
    except CheckFailed as e:
        print(f"Check failed: {e}", file=sys.stderr)
        sys.exit(1)
    except InvariantViolation as e:
        print(f"Invariant violated: {e}", file=sys.stderr)
        sys.exit(1)
    except YartsError as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(2)

    rep = report.make_report(options.command, config_of(options), results, field=ctx, spec=spec)
    _emit(rep, options, started)
    if results.get("failed"):
        print(f"Check failed: {results['failed'][0]}", file=sys.stderr)
        sys.exit(1)
    sys.exit(0)
