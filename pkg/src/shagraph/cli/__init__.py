"""Command-line interface for shagraph."""

from shagraph.cli.main import cli, main

__all__ = [
    "cli",
    "main",
]
