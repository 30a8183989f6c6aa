"""Job runner: dispatch a command, collect verification, write the report."""

import hashlib
import json
import logging
import os
import tempfile
import time
from pathlib import Path
from typing import Any

from shagraph import logger
from shagraph.config import Settings
from shagraph.exceptions import SchemaError, ShagraphError, VerificationError
from shagraph.models import ErrorDetail, Job, Report
from shagraph.services.base import BaseService
from shagraph.services.graphs import GraphService
from shagraph.services.lattices import LatticeService
from shagraph.services.matrices import MatrixService
from shagraph.services.reductions import ReductionService

SERVICES: dict[str, type[BaseService]] = {
    command: service
    for service in (MatrixService, LatticeService, GraphService, ReductionService)
    for command in service.COMMANDS
}


def service_for(command: str, workers: int | None = None) -> BaseService:
    """Instantiate the service that handles ``command``."""
    return SERVICES[command](workers)


def input_digest(text: str) -> str:
    """sha256 of the canonical JSON form of ``text`` (sorted keys, compact separators).

    Text that is not JSON is hashed as-is.
    """
    try:
        canonical = json.dumps(json.loads(text), sort_keys=True, separators=(",", ":"))
    except ValueError:
        canonical = text
    return hashlib.sha256(canonical.encode()).hexdigest()


def failure_report(
    command: str, digest: str, err: ShagraphError | Exception, partial: dict[str, Any] | None = None
) -> Report:
    """Report for a job that stopped with ``err``."""
    if isinstance(err, ShagraphError):
        detail = ErrorDetail.from_error(err)
    else:
        detail = ErrorDetail(kind="internal", message=str(err) or type(err).__name__, exit_code=1)
    return Report(command=command, input_digest=digest, status="failed", result=partial or {}, failure=detail)


def execute(command: str, text: str, workers: int | None = None) -> Report:
    """Run one command on descriptor text and build its report.

    Errors from the shagraph hierarchy become failure reports; a ``False``
    verification flag turns a computed result into a verification failure
    that still carries the result.
    """
    digest = input_digest(text)
    started = time.perf_counter()
    try:
        outcome = service_for(command, workers).run(command, text)
        failed = sorted(name for name, ok in outcome.verification.items() if ok is False)
        if failed:
            raise VerificationError(
                f"{command}: {len(failed)} verification checks failed",
                {"failed": failed},
                {"result": outcome.result, "verification": outcome.verification},
            )
        report = Report(
            command=command,
            input_digest=digest,
            result=outcome.result,
            verification=outcome.verification,
            traces=outcome.traces,
        )
    except VerificationError as err:
        logger.warning(f"{command} failed verification: {err.message}")
        partial = dict(err.partial)
        verification = partial.pop("verification", {})
        report = failure_report(command, digest, err, partial.pop("result", partial))
        report.verification = verification
    except ShagraphError as err:
        logger.warning(f"{command} failed: {err.message}")
        report = failure_report(command, digest, err)
    report.timing_ms = (time.perf_counter() - started) * 1000
    return report


def write_report(report: Report, path: Path, indent: int | None = None) -> None:
    """Write ``report`` as JSON, atomically replacing ``path``."""
    indent = indent if indent is not None else Settings().report_indent
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(report.model_dump_json(by_alias=True, indent=indent))
            handle.write("\n")
        Path(tmp).replace(path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
    logger.debug(f"report written to {path}")


def run(job: Job) -> Report:
    """Execute a job: read the input, run the command, write the report when an output path is set."""
    logger.setLevel(logging.DEBUG if job.verbose else Settings().log_level)
    raw = job.input_path.read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as err:
        logger.warning(f"{job.command} failed: input is not UTF-8")
        problem = SchemaError("descriptor is not UTF-8 text", {"position": err.start})
        report = failure_report(job.command, hashlib.sha256(raw).hexdigest(), problem)
    else:
        report = execute(job.command, text, job.parallel)
    if job.output_path is not None:
        write_report(report, job.output_path)
    logger.info(f"{job.command} finished with status {report.status} in {report.timing_ms:.1f} ms")
    return report


__all__ = [
    "SERVICES",
    "execute",
    "failure_report",
    "input_digest",
    "run",
    "service_for",
    "write_report",
]
