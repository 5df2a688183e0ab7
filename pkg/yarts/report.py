"""
Command reports.

A report is a plain dict with a schema version, the configuration that
produced it and the results. It is serialized with sorted keys and no
timings, so a fixed configuration always gives the same bytes.
"""

import json
import sys

SCHEMA_VERSION = 1


def make_report(command, config, results, *, field=None, spec=None):
    """Assemble a report dict."""
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": dict(config),
        "results": results,
    }
    if field is not None:
        report["field"] = field.describe()
    if spec is not None:
        report["spec"] = spec.to_json()
    return report


def dumps(report):
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_report(report, output=None):
    """Write the JSON of a report to a path, or to stdout."""
    text = dumps(report)
    if output is None:
        sys.stdout.write(text)
        return
    with open(output, "w", encoding="utf-8") as f:
        f.write(text)


def _summary_value(value):
    if isinstance(value, dict):
        return None
    if isinstance(value, list):
        if len(value) > 8 or any(isinstance(x, (dict, list)) for x in value):
            return f"[{len(value)} items]"
        return ", ".join(str(x) for x in value)
    return str(value)


def summary_lines(results, indent=""):
    """Human-readable lines for the scalar leaves of a results dict."""
    for key in sorted(results):
        value = results[key]
        if isinstance(value, dict):
            yield f"{indent}{key}:"
            yield from summary_lines(value, indent + "  ")
        else:
            yield f"{indent}{key}: {_summary_value(value)}"


def print_summary(report, elapsed, file=None):
    """Print the summary of a report with the elapsed time."""
    print(f"yarts {report['command']}", file=file)
    if "spec" in report:
        spec = report["spec"]
        print("  " + " ".join(f"{k}={spec[k]}" for k in sorted(spec) if k != "entries"), file=file)
    for line in summary_lines(report["results"], "  "):
        print(line, file=file)
    print(f"  ({elapsed:.1f}s)", file=file)
