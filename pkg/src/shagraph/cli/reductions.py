"""Reduction graph CLI commands."""

from pathlib import Path

import click

from shagraph.cli.jobs import job_options, run_job

# pyright: reportUnusedFunction = false


def register_reductions_commands(parent: click.Group) -> None:
    """Register reduction-graph commands with parent group.

    Parameters
    ----------
    parent : click.Group
        Parent click group to attach commands to
    """

    @parent.command(name="monotonic")
    @job_options
    def monotonic(input_path: Path, output_path: Path | None, parallel: int | None, verbose: bool) -> None:
        """Search for a root making the reduction graph a monotonic tree.

        Examples:
            shagraph monotonic --in chain.json
        """
        run_job("monotonic", input_path, output_path, parallel, verbose)

    @parent.command(name="psi")
    @job_options
    def psi(input_path: Path, output_path: Path | None, parallel: int | None, verbose: bool) -> None:
        """Injection from nodal points to components with the same label."""
        run_job("psi", input_path, output_path, parallel, verbose)

    @parent.command(name="basechange")
    @job_options
    def basechange(input_path: Path, output_path: Path | None, parallel: int | None, verbose: bool) -> None:
        """Reduction graph over the fixed field of a normal subgroup."""
        run_job("basechange", input_path, output_path, parallel, verbose)

    @parent.command(name="sha")
    @job_options
    def sha(input_path: Path, output_path: Path | None, parallel: int | None, verbose: bool) -> None:
        """Sha as H^1 of the coefficient system on the reduction graph.

        Examples:
            shagraph sha --in triangle.json --out sha.json
        """
        run_job("sha", input_path, output_path, parallel, verbose)

    @parent.command(name="shaP1-report")
    @job_options
    def sha_p1_report(input_path: Path, output_path: Path | None, parallel: int | None, verbose: bool) -> None:
        """Exact sequence H^1(A_G) -> Sha -> H^1(C) -> 0 for a fiber of rational components."""
        run_job("shaP1-report", input_path, output_path, parallel, verbose)
