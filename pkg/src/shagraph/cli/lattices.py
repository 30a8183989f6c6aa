"""Lattice CLI commands: Tate cohomology, flasque tests and resolutions."""

from pathlib import Path

import click

from shagraph.cli.jobs import job_options, run_job

# pyright: reportUnusedFunction = false


def register_lattices_commands(parent: click.Group) -> None:
    """Register lattice commands with parent group.

    Parameters
    ----------
    parent : click.Group
        Parent click group to attach commands to
    """

    @parent.command(name="tate")
    @job_options
    def tate(input_path: Path, output_path: Path | None, parallel: int | None, verbose: bool) -> None:
        """Tate groups in degrees -1 and 0 and H^1, per subgroup.

        Examples:
            shagraph tate --in sign.json
        """
        run_job("tate", input_path, output_path, parallel, verbose)

    @parent.command(name="flasque-check")
    @job_options
    def flasque_check(input_path: Path, output_path: Path | None, parallel: int | None, verbose: bool) -> None:
        """Decide whether a lattice is flasque and coflasque, with witnesses."""
        run_job("flasque-check", input_path, output_path, parallel, verbose)

    @parent.command(name="resolve")
    @job_options
    def resolve(input_path: Path, output_path: Path | None, parallel: int | None, verbose: bool) -> None:
        """Flasque resolution 0 -> T -> Q -> S -> 0 with verification.

        Examples:
            shagraph resolve --in biquadratic.json --out resolution.json --parallel 4
        """
        run_job("resolve", input_path, output_path, parallel, verbose)
