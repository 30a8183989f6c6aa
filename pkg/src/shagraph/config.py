"""Configuration settings for shagraph.

Desk-scale bounds, parallelism and logging via Pydantic BaseSettings.
"""

from __future__ import annotations

from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseSettings):
    """Application settings loaded from environment variables and .env file.

    Parameters
    ----------
    max_group_order : int
        Largest permutation group order accepted by the lattice engine
    parallel : int
        Worker count for per-subgroup and per-root searches
    log_level : str
        Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
    report_indent : int
        Indentation of JSON reports written by the CLI

    Examples
    --------
    >>> settings = Settings(max_group_order=128)
    >>> settings.max_group_order
    128
    """

    @staticmethod
    def get_environment_file() -> Path | None:
        """Find and return the path to the environment file.

        Looks in the following locations in order:
        1. .env in current working directory
        2. .env in project root
        3. .shagraph.env in home directory
        4. /etc/shagraph.env

        Returns
        -------
        Path | None
            Path to environment file if found, else None
        """
        project_root = Path(__file__).resolve().parents[2]
        candidates = (
            Path.cwd() / ".env",
            project_root / ".env",
            Path.home() / ".shagraph.env",
            Path("/etc/shagraph.env"),
        )
        for candidate in candidates:
            if candidate.is_file():
                return candidate
        return None

    model_config = SettingsConfigDict(
        env_file=get_environment_file(),
        env_file_encoding="utf-8",
        env_prefix="SHAGRAPH_",
        case_sensitive=False,
        extra="ignore",
    )

    # Desk-scale bounds
    max_group_order: int = Field(
        default=64,
        gt=0,
        description="Largest finite group order accepted (override at your own risk)",
    )

    # Execution
    parallel: int = Field(
        default=1,
        ge=1,
        description="Worker threads for per-subgroup and per-root loops",
    )

    # Output
    report_indent: int = Field(
        default=2,
        ge=0,
        description="Indentation of JSON reports",
    )

    # Logging
    log_level: str = Field(
        default="INFO",
        description="Logging level",
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}")
        return level
