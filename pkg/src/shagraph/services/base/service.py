"""Abstract base class for command services."""

import sys
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, ClassVar, NoReturn

from pydantic import ValidationError

from shagraph import logger
from shagraph.config import Settings
from shagraph.exceptions import SchemaError, ShagraphError
from shagraph.models import Job, ShagraphBaseModel

INTERNAL_ERROR_EXIT = 1


@dataclass
class Outcome:
    """What a service computed for one command.

    ``verification`` holds checks that must hold; a ``False`` entry fails the
    job, ``None`` marks a check that does not apply.
    """

    result: dict[str, Any]
    verification: dict[str, bool | None] = field(default_factory=dict)
    traces: dict[str, list[str]] = field(default_factory=dict)


class BaseService(ABC):
    """Abstract base service for one command family.

    Enforces strict patterns for:
    - Parsing JSON descriptors into the family's input model
    - Mapping validation errors to schema errors
    - Consistent logging and CLI error handling
    """

    MODEL: ClassVar[type[ShagraphBaseModel]]
    COMMANDS: ClassVar[tuple[str, ...]]

    def __init__(self, workers: int | None = None) -> None:
        """Initialize the service.

        Parameters
        ----------
        workers : int | None
            Worker count for parallel searches; defaults to ``Settings().parallel``
        """
        self.workers = workers if workers is not None else Settings().parallel
        logger.debug(f"Initialized {self.__class__.__name__} service")

    @property
    def title_text(self) -> str:
        return self.__class__.__name__.replace("Service", "")

    def model_for(self, command: str) -> type[ShagraphBaseModel]:  # noqa: ARG002
        """Input model of ``command``; :attr:`MODEL` unless a family has several."""
        return self.MODEL

    def parse(self, text: str, model: type[ShagraphBaseModel] | None = None) -> Any:
        """Validate a JSON descriptor against ``model`` (default :attr:`MODEL`).

        Raises
        ------
        SchemaError
            If the text is not JSON or does not fit the model
        """
        try:
            return (model or self.MODEL).model_validate_json(text)
        except ValidationError as err:
            problems = [{"loc": ".".join(str(p) for p in e["loc"]), "msg": e["msg"]} for e in err.errors()]
            raise SchemaError(
                f"{self.title_text.lower()} descriptor does not validate ({err.error_count()} errors)",
                {"errors": problems},
            ) from err

    @abstractmethod
    def execute(self, command: str, payload: Any) -> Outcome:
        """Run ``command`` on a parsed descriptor.

        Parameters
        ----------
        command : str
            One of :attr:`COMMANDS`
        payload : Any
            Instance of :attr:`MODEL`

        Returns
        -------
        Outcome
            Result, verification flags and traces
        """

    def run(self, command: str, text: str) -> Outcome:
        if command not in self.COMMANDS:
            raise SchemaError(f"{self.title_text} service does not handle {command!r}")
        payload = self.parse(text, self.model_for(command))
        logger.debug(f"→ {command} via {self.title_text}")
        return self.execute(command, payload)

    def handle_cli_error(self, err: Exception, context: str, job: Job | None = None) -> NoReturn:
        """Log, report and exit for an error that escaped a job.

        Logs the full traceback, prints a themed one-line message, writes a
        failure report when the job has an output path, and exits with the
        error's exit code (1 for errors outside the hierarchy).
        """
        logger.exception(f"Error in {context}: {err}", exc_info=err)

        from shagraph.cli.theme import CLISettings
        from shagraph.services.runner import failure_report, write_report

        code = err.exit_code if isinstance(err, ShagraphError) else INTERNAL_ERROR_EXIT
        if job is not None and job.output_path is not None:
            try:
                write_report(failure_report(job.command, "", err), job.output_path)
            except OSError as write_err:
                logger.error(f"could not write failure report: {write_err}")
        CLISettings.console().print(f"[danger]Error in {context}: {err}[/danger]")
        sys.exit(code)
