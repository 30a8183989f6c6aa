"""Tests for environment-driven settings."""

from pathlib import Path

import pytest
from pydantic import ValidationError

import shagraph
from shagraph import DEFAULT_MAX_GROUP_ORDER, ENVIRONMENT_PREFIX
from shagraph.config import Settings


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in Settings.model_fields:
        monkeypatch.delenv(f"{ENVIRONMENT_PREFIX}{name}".upper(), raising=False)


def test_defaults() -> None:
    settings = Settings(_env_file=None)  # type: ignore[call-arg]
    assert settings.max_group_order == DEFAULT_MAX_GROUP_ORDER
    assert settings.parallel == 1
    assert settings.report_indent == 2
    assert settings.log_level == "INFO"


def test_environment_overrides(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("SHAGRAPH_MAX_GROUP_ORDER", "128")
    monkeypatch.setenv("shagraph_parallel", "4")
    settings = Settings(_env_file=None)  # type: ignore[call-arg]
    assert settings.max_group_order == 128
    assert settings.parallel == 4


def test_settings_are_read_fresh(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("SHAGRAPH_REPORT_INDENT", "0")
    assert Settings(_env_file=None).report_indent == 0  # type: ignore[call-arg]
    monkeypatch.setenv("SHAGRAPH_REPORT_INDENT", "6")
    assert Settings(_env_file=None).report_indent == 6  # type: ignore[call-arg]


@pytest.mark.parametrize(("name", "value"), [("MAX_GROUP_ORDER", "0"), ("PARALLEL", "0"), ("REPORT_INDENT", "-1")])
def test_bounds(monkeypatch: pytest.MonkeyPatch, name: str, value: str) -> None:
    monkeypatch.setenv(f"SHAGRAPH_{name}", value)
    with pytest.raises(ValidationError):
        Settings(_env_file=None)  # type: ignore[call-arg]


def test_env_file(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    env = tmp_path / ".env"
    env.write_text("SHAGRAPH_PARALLEL=5\n", encoding="utf-8")
    assert Settings(_env_file=env).parallel == 5  # type: ignore[call-arg]
    monkeypatch.chdir(tmp_path)
    assert Settings.get_environment_file() == tmp_path / ".env"


def test_log_level_is_normalized(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("SHAGRAPH_LOG_LEVEL", "warning")
    assert Settings(_env_file=None).log_level == "WARNING"  # type: ignore[call-arg]
    with pytest.raises(ValidationError, match="log_level must be one of"):
        Settings(_env_file=None, log_level="loud")  # type: ignore[call-arg]


def test_package_exports_are_unique_and_defined() -> None:
    assert len(shagraph.__all__) == len(set(shagraph.__all__))
    assert all(hasattr(shagraph, name) for name in shagraph.__all__)
    assert shagraph.LOG_LEVELS == ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
