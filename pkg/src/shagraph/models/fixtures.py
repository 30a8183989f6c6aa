"""Bundled example jobs with their expected reports."""

from typing import Any

from pydantic import Field

from shagraph.models.base import ShagraphBaseModel
from shagraph.models.reports import CommandName


class FixtureExpectation(ShagraphBaseModel):
    """Subset of a report that a fixture run must reproduce.

    ``result`` and ``verification`` are compared as subsets: every key given
    here must be present in the report with an equal value, nested dicts are
    compared the same way and lists element by element.
    """

    result: dict[str, Any] = Field(default_factory=dict)
    verification: dict[str, bool | None] = Field(default_factory=dict)
    exit_code: int = Field(0, ge=0)


class Fixture(ShagraphBaseModel):
    """One command, one input descriptor, one expectation."""

    name: str = Field(min_length=1)
    command: CommandName
    description: str = ""
    input: dict[str, Any]
    expect: FixtureExpectation = Field(default_factory=FixtureExpectation)
