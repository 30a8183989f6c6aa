"""Bundled fixture corpus: example jobs with the reports they must produce."""

import json
from dataclasses import dataclass, field
from functools import cache
from importlib import resources
from typing import Any

from pydantic import ValidationError

from shagraph import logger
from shagraph.exceptions import SchemaError
from shagraph.models import Fixture, Report
from shagraph.services.runner import execute

DATA_PACKAGE = "shagraph.fixtures"
DATA_DIR = "data"


@dataclass
class FixtureRun:
    """Report of one fixture and the places where it departs from the expectation."""

    fixture: Fixture
    report: Report
    mismatches: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


@cache
def load_fixtures() -> tuple[Fixture, ...]:
    """Every bundled fixture, sorted by name.

    Raises
    ------
    SchemaError
        If a fixture file does not validate
    """
    fixtures = []
    for entry in sorted(resources.files(DATA_PACKAGE).joinpath(DATA_DIR).iterdir(), key=lambda e: e.name):
        if not entry.name.endswith(".json"):
            continue
        try:
            fixtures.append(Fixture.model_validate_json(entry.read_text(encoding="utf-8")))
        except ValidationError as err:
            raise SchemaError(f"fixture {entry.name} does not validate", {"file": entry.name}) from err
    logger.debug(f"loaded {len(fixtures)} fixtures")
    return tuple(sorted(fixtures, key=lambda f: f.name))


def fixture_names() -> list[str]:
    return [f.name for f in load_fixtures()]


def get_fixture(name: str) -> Fixture:
    for fixture in load_fixtures():
        if fixture.name == name:
            return fixture
    raise SchemaError(f"no fixture named {name!r}", {"known": fixture_names()})


def fixture_text(fixture: Fixture) -> str:
    """Input descriptor of ``fixture`` as JSON text."""
    return json.dumps(fixture.input, sort_keys=True)


def subset_mismatches(expected: Any, actual: Any, path: str = "") -> list[str]:
    """Paths at which ``actual`` fails to contain ``expected``.

    Dicts match when every expected key matches, lists when they have the same
    length and match element by element, anything else by equality.

    Examples
    --------
    >>> subset_mismatches({"a": 1}, {"a": 1, "b": 2})
    []
    >>> subset_mismatches({"a": [1, 2]}, {"a": [1, 3]})
    ['a[1]: expected 2, got 3']
    """
    if isinstance(expected, dict):
        if not isinstance(actual, dict):
            return [f"{path or '.'}: expected an object, got {actual!r}"]
        out: list[str] = []
        for key, value in expected.items():
            where = f"{path}.{key}" if path else key
            if key not in actual:
                out.append(f"{where}: missing")
            else:
                out.extend(subset_mismatches(value, actual[key], where))
        return out
    if isinstance(expected, list):
        if not isinstance(actual, list) or len(actual) != len(expected):
            return [f"{path}: expected {expected!r}, got {actual!r}"]
        return [m for i, (e, a) in enumerate(zip(expected, actual, strict=True)) for m in subset_mismatches(e, a, f"{path}[{i}]")]
    if expected != actual:
        return [f"{path}: expected {expected!r}, got {actual!r}"]
    return []


def run_fixture(name: str, workers: int | None = None) -> FixtureRun:
    """Run one fixture through :func:`shagraph.services.runner.execute` and compare."""
    fixture = get_fixture(name)
    report = execute(fixture.command, fixture_text(fixture), workers)
    expect = fixture.expect
    mismatches = subset_mismatches(expect.result, report.result, "result")
    mismatches += subset_mismatches(expect.verification, report.verification, "verification")
    if report.exit_code != expect.exit_code:
        mismatches.append(f"exitCode: expected {expect.exit_code}, got {report.exit_code}")
    if mismatches:
        logger.warning(f"fixture {name}: {len(mismatches)} mismatches")
    return FixtureRun(fixture, report, mismatches)


def run_all(workers: int | None = None) -> list[FixtureRun]:
    return [run_fixture(name, workers) for name in fixture_names()]


__all__ = [
    "FixtureRun",
    "fixture_names",
    "fixture_text",
    "get_fixture",
    "load_fixtures",
    "run_all",
    "run_fixture",
    "subset_mismatches",
]
