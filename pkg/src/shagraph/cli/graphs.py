"""Decorated graph CLI commands."""

from pathlib import Path

import click

from shagraph.cli.jobs import job_options, run_job

# pyright: reportUnusedFunction = false


def register_graphs_commands(parent: click.Group) -> None:
    """Register decorated-graph commands with parent group.

    Parameters
    ----------
    parent : click.Group
        Parent click group to attach commands to
    """

    @parent.command(name="graph-h")
    @job_options
    def graph_h(input_path: Path, output_path: Path | None, parallel: int | None, verbose: bool) -> None:
        """H^0 and H^1 of a decorated graph.

        Examples:
            shagraph graph-h --in triangle.json
        """
        run_job("graph-h", input_path, output_path, parallel, verbose)

    @parent.command(name="contract")
    @job_options
    def contract(input_path: Path, output_path: Path | None, parallel: int | None, verbose: bool) -> None:
        """Contract one redundant half-edge, or a whole tree onto its root."""
        run_job("contract", input_path, output_path, parallel, verbose)

    @parent.command(name="six-term")
    @job_options
    def six_term(input_path: Path, output_path: Path | None, parallel: int | None, verbose: bool) -> None:
        """Six-term exact sequence of a short exact sequence of coefficient systems."""
        run_job("six-term", input_path, output_path, parallel, verbose)
