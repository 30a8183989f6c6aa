"""Options and execution shared by every job command."""

import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any, NoReturn

import click

from shagraph.cli.theme import CLISettings
from shagraph.config import Settings
from shagraph.models import Job
from shagraph.services.runner import run, service_for

# pyright: reportUnusedFunction = false


def job_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """Attach ``--in``, ``--out``, ``--parallel`` and ``--verbose`` to a job command."""
    func = click.option("--verbose", "-v", is_flag=True, help="Debug logging")(func)
    func = click.option(
        "--parallel",
        type=click.IntRange(min=1),
        default=None,
        help="Worker count for subgroup and root searches (default: SHAGRAPH_PARALLEL)",
    )(func)
    func = click.option(
        "--out",
        "output_path",
        type=click.Path(dir_okay=False, path_type=Path),
        default=None,
        help="Report file; omitted prints the report as JSON",
    )(func)
    return click.option(
        "--in",
        "input_path",
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
        required=True,
        help="JSON input descriptor",
    )(func)


def run_job(command: str, input_path: Path, output_path: Path | None, parallel: int | None, verbose: bool) -> NoReturn:
    """Run one job, show its report and exit with the report's exit code.

    With ``--out`` the report goes to the file and a summary panel to the
    terminal; without it the JSON report is printed.
    """
    job = Job(command=command, input_path=input_path, output_path=output_path, parallel=parallel, verbose=verbose)
    service = service_for(command, parallel)
    try:
        report = run(job)
    except (OSError, RuntimeError, ValueError, ArithmeticError) as err:
        service.handle_cli_error(err, f"running {command}", job)
    if output_path is None:
        click.echo(report.model_dump_json(by_alias=True, indent=Settings().report_indent))
    else:
        CLISettings.console().print(report.as_panel())
        CLISettings.console().print(f"[info]Report written to {output_path}[/info]")
    sys.exit(report.exit_code)
