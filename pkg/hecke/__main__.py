"""
hecke command line

Every verb writes one JSON report, to stdout or --out, and exits 0 when
all checks pass, 1 when a verification fails and 2 when the input is
rejected.
"""
import asyncio
import sys
from typing import Optional

import click

from common.env import default_jobs
from common.info import Info
from common.logger import Logger
from hecke import commands
from hecke.exceptions import EXIT_FAILED, HeckeException
from hecke.rootdatum import load_datum
from hecke.serialize import ErrorReport, SupersingularDataModel, dump, load_file

OK = 0

datum_option = click.option(
    "--datum",
    default="builtin:GL2",
    show_default=True,
    help="builtin:NAME or a root datum JSON file",
)
out_option = click.option("--out", type=click.Path(dir_okay=False), help="write the report here")
json_option = click.option("--json", "as_json", is_flag=True, help="JSON output (always on)")
jobs_option = click.option("--jobs", type=int, default=None, help="worker processes")


def _write(report, out: Optional[str]):
    text = dump(report) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        click.echo(text, nl=False)


def _finish(report, out: Optional[str]):
    _write(report, out)
    code = OK if getattr(report, "passed", True) else EXIT_FAILED
    if code != OK:
        Logger().warning("%s failed", click.get_current_context().info_name)
    sys.exit(code)


def _fail(exc: HeckeException, out: Optional[str]):
    Logger().error("%s", exc.msg)
    report = ErrorReport(error=exc.msg or "", kind=type(exc).__name__, details=exc.details())
    _write(report, out)
    sys.exit(exc.exit_code)


def _jobs(jobs: Optional[int]) -> int:
    return default_jobs() if jobs is None else max(1, jobs)


@click.group()
@click.option("--verbose", is_flag=True, help="log at DEBUG level")
def main(verbose: bool):
    Info("hecke")
    Logger(verbose)


@main.command("rootdata-check")
@datum_option
@out_option
@json_option
def rootdata_check(datum: str, out: Optional[str], as_json: bool):
    try:
        report = commands.rootdata_check(load_datum(datum), datum)
    except HeckeException as exc:
        _fail(exc, out)
    _finish(report, out)


@main.command("lemmas-verify")
@datum_option
@click.option("--bound", type=int, default=6, show_default=True)
@out_option
@json_option
@jobs_option
def lemmas_verify(datum: str, bound: int, out: Optional[str], as_json: bool,
                  jobs: Optional[int]):
    try:
        rd = load_datum(datum)
        report = asyncio.run(commands.lemmas_verify(rd, bound, _jobs(jobs)))
    except HeckeException as exc:
        _fail(exc, out)
    _finish(report, out)


@main.command("classify-enumerate")
@click.option("--datum", default=None, help="overrides the datum named in the input")
@click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False))
@out_option
@json_option
def classify_enumerate(datum: Optional[str], input_path: str, out: Optional[str],
                       as_json: bool):
    try:
        model = load_file(SupersingularDataModel, input_path)
        report = commands.classify_enumerate(model, datum)
    except HeckeException as exc:
        _fail(exc, out)
    _finish(report, out)


@main.command("ps-analyze")
@datum_option
@click.option("--char", "char", default="trivial", show_default=True,
              help="trivial or a character JSON file")
@click.option("--q", type=int, default=3, show_default=True,
              help="residue field size for --char trivial")
@out_option
@json_option
def ps_analyze(datum: str, char: str, q: int, out: Optional[str], as_json: bool):
    try:
        rd = load_datum(datum)
        report = commands.ps_analyze(rd, commands.load_character(char, rd, q))
    except HeckeException as exc:
        _fail(exc, out)
    _finish(report, out)


@main.command("hecke-verify-cw")
@click.option("--p", "p", type=int, default=3, show_default=True)
@click.option("--m", "m", type=int, default=0, show_default=True)
@out_option
@json_option
def hecke_verify_cw(p: int, m: int, out: Optional[str], as_json: bool):
    try:
        report = commands.verify_cw(p, m)
    except HeckeException as exc:
        _fail(exc, out)
    _finish(report, out)


main.add_command(hecke_verify_cw, "verify-cw")


@main.command("selftest")
@out_option
@json_option
@jobs_option
def selftest(out: Optional[str], as_json: bool, jobs: Optional[int]):
    try:
        report = asyncio.run(commands.selftest(_jobs(jobs)))
    except HeckeException as exc:
        _fail(exc, out)
    _finish(report, out)


if __name__ == "__main__":
    main()
