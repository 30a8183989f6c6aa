"""Smith normal form CLI command."""

from pathlib import Path

import click

from shagraph.cli.jobs import job_options, run_job

# pyright: reportUnusedFunction = false


def register_matrices_commands(parent: click.Group) -> None:
    """Register matrix commands with parent group.

    Parameters
    ----------
    parent : click.Group
        Parent click group to attach commands to
    """

    @parent.command(name="snf")
    @job_options
    def snf(input_path: Path, output_path: Path | None, parallel: int | None, verbose: bool) -> None:
        """Smith normal form of an integer matrix with its transforms.

        Examples:
            shagraph snf --in matrix.json --out snf.json
        """
        run_job("snf", input_path, output_path, parallel, verbose)
