"""Batch command-line front end: `gvbimod run <workspace.json>` executes a
workspace document, `gvbimod suite <name>` runs a named verification suite.
Reports go to stdout (JSON by default, --pretty for human-readable lines)
and, when GVBIMOD_REPORT_DIR is set, to a file in that directory."""

from __future__ import annotations

import os
import sys
from pathlib import Path

import click

from .suites import SUITE_NAMES, run_suite
from .workspace import (
    EXIT_ASSERTION,
    EXIT_PARSE,
    load_and_run,
    parse_field_flag,
    report_to_json,
)

REPORT_DIR_ENV = "GVBIMOD_REPORT_DIR"


def _emit(report: dict, as_json: bool, stem: str):
    text = report_to_json(report)
    if as_json:
        click.echo(text, nl=False)
    else:
        _pretty(report)
    outdir = os.environ.get(REPORT_DIR_ENV)
    if outdir:
        path = Path(outdir) / ("%s.report.json" % stem)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)


def _pretty(report: dict):
    if "error" in report:
        click.echo("error (%s): %s" % (report["error"], report["message"]))
        return
    if "tasks" in report:
        for t in report["tasks"]:
            status = "ok  " if t["assertions"]["passed"] else "FAIL"
            brief = {k: v for k, v in t["result"].items()
                     if not isinstance(v, (list, dict))}
            click.echo("%s %s(%s)  %s" % (
                status, t["op"], ", ".join(t["args"]),
                " ".join("%s=%s" % kv for kv in brief.items())))
        click.echo("all passed" if report["all_passed"] else "FAILURES present")
    else:
        for e in report.get("entries", []):
            status = "ok  " if e["passed"] else "FAIL"
            brief = {k: v for k, v in e["details"].items()
                     if not isinstance(v, (list, dict))}
            click.echo("%s %s  %s" % (
                status, e["name"], " ".join("%s=%s" % kv for kv in brief.items())))
        click.echo("all passed" if report["all_passed"] else "FAILURES present")


@click.group()
def main():
    """Exact computations in bimodule categories: two tensor products,
    duality, internal (co)Homs and distributors."""


@main.command()
@click.argument("file", type=click.Path())
@click.option("--field", "field_flag", default=None,
              help="override the document's field: q or p=<prime>")
@click.option("--seed", default=0, type=int, show_default=True,
              help="seed for randomized isomorphism certificates")
@click.option("--json/--pretty", "as_json", default=True,
              help="machine-readable JSON (default) or human-readable lines")
def run(file, field_flag, seed, as_json):
    """Execute the workspace document FILE and report per-task results."""
    field = None
    if field_flag is not None:
        try:
            field = parse_field_flag(field_flag)
        except Exception as e:
            click.echo(str(e), err=True)
            sys.exit(EXIT_PARSE)
    code, report = load_and_run(file, field=field, seed=seed)
    _emit(report, as_json, Path(file).stem)
    sys.exit(code)


@main.command()
@click.argument("name")
@click.option("--seed", default=0, type=int, show_default=True)
@click.option("--field", "field_flag", default=None,
              help="field to compute over: q or p=<prime>")
@click.option("--json/--pretty", "as_json", default=True)
def suite(name, seed, field_flag, as_json):
    """Run the named verification suite (paper-examples, coherence,
    flatness)."""
    from .fields import QQ
    field = QQ
    if field_flag is not None:
        try:
            field = parse_field_flag(field_flag)
        except Exception as e:
            click.echo(str(e), err=True)
            sys.exit(EXIT_PARSE)
    if name not in SUITE_NAMES:
        click.echo("unknown suite %r (known: %s)" % (name, ", ".join(SUITE_NAMES)),
                   err=True)
        sys.exit(EXIT_PARSE)
    report = run_suite(name, seed=seed, field=field)
    _emit(report, as_json, "suite-%s-seed%d" % (name, seed))
    sys.exit(0 if report["all_passed"] else EXIT_ASSERTION)


if __name__ == "__main__":
    main()
