"""Failure details embedded in reports."""

from typing import Any

from pydantic import Field

from shagraph.exceptions import ShagraphError
from shagraph.models.base import ShagraphBaseModel


class ErrorDetail(ShagraphBaseModel):
    """Why a job failed.

    Parameters
    ----------
    kind : str
        Error family (``schema``, ``precondition``, ``verification``, ``limit``, ...)
    message : str
        Human-readable error description
    detail : dict[str, Any]
        Structured context such as the offending subgroup or spot
    exit_code : int
        Process exit status reported by the CLI

    Examples
    --------
    >>> ErrorDetail(kind="limit", message="group too large", exit_code=4).exit_code
    4
    """

    kind: str = Field(description="Error family")
    message: str = Field(description="Error description")
    detail: dict[str, Any] = Field(default_factory=dict, description="Structured context")
    exit_code: int = Field(ge=1, description="Process exit status")

    @classmethod
    def from_error(cls, err: ShagraphError) -> "ErrorDetail":
        return cls(kind=err.kind, message=err.message, detail=err.detail, exit_code=err.exit_code)
