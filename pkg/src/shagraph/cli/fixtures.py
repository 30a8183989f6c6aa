"""Fixture corpus CLI commands."""

import sys

import click

from shagraph.cli.theme import CLISettings
from shagraph.exceptions import ShagraphError
from shagraph.fixtures import fixture_names, load_fixtures, run_fixture

# pyright: reportUnusedFunction = false

VERIFICATION_EXIT = 3


def register_fixtures_commands(parent: click.Group) -> None:
    """Register fixture commands with parent group.

    Parameters
    ----------
    parent : click.Group
        Parent click group to attach commands to
    """

    @parent.group()
    def fixtures() -> None:
        """List and run the bundled example jobs."""
        pass

    @fixtures.command(name="list")
    def fixtures_list() -> None:
        """List bundled fixtures with their commands."""
        console = CLISettings.console()
        table = CLISettings.create_table("Fixtures")
        table.add_column("Name", style="row_emphasized", no_wrap=True)
        table.add_column("Command", no_wrap=True)
        table.add_column("Description")
        for fixture in load_fixtures():
            table.add_row(fixture.name, fixture.command, fixture.description)
        console.print(table)
        console.print(f"\n[success]{len(fixture_names())} fixtures[/success]")

    @fixtures.command(name="run")
    @click.argument("name", required=False)
    @click.option("--parallel", type=click.IntRange(min=1), default=None, help="Worker count")
    def fixtures_run(name: str | None, parallel: int | None) -> None:
        """Run one fixture, or all of them, and compare with the stored expectations.

        Examples:
            shagraph fixtures run
            shagraph fixtures run triangle-sha
        """
        console = CLISettings.console()
        names = [name] if name else fixture_names()
        table = CLISettings.create_table("Fixture runs")
        table.add_column("Name", style="row_emphasized", no_wrap=True)
        table.add_column("Status", no_wrap=True)
        table.add_column("Mismatches")
        failures = 0
        for current in names:
            try:
                outcome = run_fixture(current, parallel)
            except ShagraphError as err:
                console.print(f"[danger]Error in fixture {current}: {err}[/danger]")
                sys.exit(err.exit_code)
            failures += not outcome.passed
            table.add_row(current, CLISettings.check_mark(outcome.passed), "\n".join(outcome.mismatches))
        console.print(table)
        if failures:
            console.print(f"[danger]{failures} of {len(names)} fixtures failed[/danger]")
            sys.exit(VERIFICATION_EXIT)
        console.print(f"[success]{len(names)} fixtures passed[/success]")
