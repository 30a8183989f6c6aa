"""Integration test configuration and fixtures.

Integration tests drive the click CLI in-process and exchange descriptors
and reports through temporary files.
"""

from collections.abc import Callable
from pathlib import Path

import click
import pytest
from click.testing import CliRunner

from shagraph.cli.main import cli as base_cli
from shagraph.fixtures import fixture_text, get_fixture


@pytest.fixture
def cli_runner() -> CliRunner:
    """Provide Click CLI test runner."""
    return CliRunner()


@pytest.fixture(scope="session")
def cli() -> click.Group:
    """Provide the CLI with all commands registered."""
    return base_cli


@pytest.fixture
def descriptor(tmp_path: Path) -> Callable[[str], Path]:
    """Write the input of a bundled fixture to a file and return its path."""

    def write(name: str) -> Path:
        path = tmp_path / f"{name}.json"
        path.write_text(fixture_text(get_fixture(name)), encoding="utf-8")
        return path

    return write
