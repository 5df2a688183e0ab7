"""YARTS claim verifier command-line interface."""

import argparse
import sys

from .. import cache, progress, report
from ..cli import get_version
from ..linset import MAX_PAIRS
from . import claim_registry, claims
from .workspace import Workspace


def argument_parser():
    """Parser for the command-line arguments."""
    parser = argparse.ArgumentParser(description="Yet Another Rank-Two Semifield checker verifier")
    parser.add_argument(
        "-V", "--version", action="version", version=f"%(prog)s {get_version()}"
    )
    parser.add_argument(
        "suites",
        nargs="+",
        choices=(*claims.SUITES, "all"),
        help="suites to run",
    )
    parser.add_argument("--seed", type=int, default=0, help="random seed (default: 0)")
    parser.add_argument(
        "--max-pairs",
        type=int,
        default=MAX_PAIRS,
        help=f"cap on point pairs for exhaustive long lines (default: {MAX_PAIRS})",
    )
    parser.add_argument("--no-cache", action="store_true", help="do not use the on-disk cache")
    parser.add_argument("-q", "--quiet", action="store_true", help="no progress output")
    parser.add_argument("--json", dest="output", help="also write the JSON report to this path")
    return parser


def verify(suites, *, seed=0, max_pairs=MAX_PAIRS):
    """Run suites; returns {suite: [ClaimResult, ...]}."""
    claim_registry.register_all_claims()
    workspace = Workspace(seed=seed, max_pairs=max_pairs)
    results = {}
    for suite in suites:
        progress.note(f"Suite {suite}")
        results[suite] = claims.run_suite(suite, workspace)
    return results


def results_json(results):
    return {suite: [result.to_json() for result in items] for suite, items in results.items()}


def print_results(results, file=None):
    """Print claim statuses, W/E lines and totals; return the error count."""
    warnings = errors = 0
    for suite, items in results.items():
        for result in items:
            print(f"{result.status.upper():7} {suite}/{result.name}: {result.fact}", file=file)
            for code, message in result.warnings:
                print(f"W {code}: {message}", file=file)
            for code, message in result.errors:
                print(f"E {code}: {message}", file=file)
            warnings += len(result.warnings)
            errors += len(result.errors)
    print(f"{warnings} warnings, {errors} errors", file=file)
    return errors


def main(args=sys.argv[1:]):
    """Run as main entry point."""
    options = argument_parser().parse_args(args)
    progress.set_quiet(options.quiet)
    cache.set_enabled(not options.no_cache)

    suites = claims.SUITES if "all" in options.suites else tuple(dict.fromkeys(options.suites))
    results = verify(suites, seed=options.seed, max_pairs=options.max_pairs)
    errors = print_results(results)

    if options.output:
        config = {"suites": list(suites), "seed": options.seed, "max_pairs": options.max_pairs}
        report.write_report(report.make_report("verify", config, results_json(results)), options.output)

    if errors:
        print("Verification failed.")
        sys.exit(1)
    else:
        print("Verification succeeded.")
        sys.exit(0)
