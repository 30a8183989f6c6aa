"""Jobs dispatched by the CLI and the reports they produce."""

from pathlib import Path
from typing import Any, Literal, get_args

from pydantic import Field
from rich.panel import Panel

from shagraph.models.base import ShagraphBaseModel, format_field
from shagraph.models.errors import ErrorDetail

CommandName = Literal[
    "snf",
    "tate",
    "flasque-check",
    "resolve",
    "graph-h",
    "contract",
    "six-term",
    "monotonic",
    "psi",
    "basechange",
    "sha",
    "shaP1-report",
]
COMMANDS: tuple[str, ...] = get_args(CommandName)


class Job(ShagraphBaseModel):
    """One command applied to one input file.

    Parameters
    ----------
    command : CommandName
        Command to run
    input_path : Path
        JSON descriptor
    output_path : Path | None
        Report destination; ``None`` prints the report
    parallel : int | None
        Worker count overriding ``Settings().parallel``
    verbose : bool
        Debug logging
    """

    command: CommandName
    input_path: Path
    output_path: Path | None = None
    parallel: int | None = Field(None, ge=1)
    verbose: bool = False


class Report(ShagraphBaseModel):
    """Machine-readable outcome of a job.

    Everything except ``timing_ms`` is a deterministic function of the command
    and the input.
    """

    command: CommandName
    input_digest: str = Field(description="sha256 of the canonical input JSON")
    status: Literal["ok", "failed"] = "ok"
    result: dict[str, Any] = Field(default_factory=dict)
    verification: dict[str, bool | None] = Field(default_factory=dict)
    traces: dict[str, list[str]] = Field(default_factory=dict)
    failure: ErrorDetail | None = None
    timing_ms: float = Field(0.0, ge=0)

    @property
    def exit_code(self) -> int:
        return self.failure.exit_code if self.failure is not None else 0

    def content(self) -> dict[str, Any]:
        """JSON form without the timing field."""
        return self.model_dump(mode="json", by_alias=True, exclude={"timing_ms"})

    def as_panel(self, title: str | None = None) -> Panel:
        """Summary panel: status, scalar results, verification marks and the failure, if any."""
        from shagraph.cli.theme import CLISettings

        lines = [
            format_field("Status", f"[{'success' if self.status == 'ok' else 'danger'}]{self.status}[/]"),
            format_field("Input digest", self.input_digest[:16]),
        ]
        lines += [
            format_field(key, value) for key, value in self.result.items() if isinstance(value, str | int | bool)
        ]
        lines += [format_field(name, CLISettings.check_mark(ok)) for name, ok in self.verification.items()]
        if self.failure is not None:
            lines.append(format_field("Failure", f"{self.failure.kind}: {self.failure.message}"))
        return CLISettings.panel(
            content="\n".join(lines), title=title or f"{self.command} ({self.timing_ms:.1f} ms)"
        )
