"""Command-line interface main entry point for shagraph.

Registers all CLI command groups.
"""

import click

from shagraph import __version__
from shagraph.cli.config import register_config_commands
from shagraph.cli.fixtures import register_fixtures_commands
from shagraph.cli.graphs import register_graphs_commands
from shagraph.cli.lattices import register_lattices_commands
from shagraph.cli.matrices import register_matrices_commands
from shagraph.cli.reductions import register_reductions_commands


@click.group()
@click.version_option(version=__version__, prog_name="shagraph")
def cli() -> None:
    """Local-global obstructions of tori via decorated graph cohomology.

    Each job command reads a JSON descriptor (--in) and writes a JSON report
    (--out). Exit codes: 0 ok, 2 invalid input, 3 verification failure,
    4 size limit exceeded.
    """
    pass


register_config_commands(cli)
register_matrices_commands(cli)
register_lattices_commands(cli)
register_graphs_commands(cli)
register_reductions_commands(cli)
register_fixtures_commands(cli)


def main() -> None:
    """Run the CLI."""
    cli()


if __name__ == "__main__":
    main()
