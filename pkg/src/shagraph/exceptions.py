"""Exception hierarchy for shagraph.

Every error carries the process exit code the CLI reports for it.
"""

from __future__ import annotations

from collections.abc import Mapping
from typing import Any, ClassVar


class ShagraphError(Exception):
    """Base class for all shagraph errors.

    Parameters
    ----------
    message : str
        Human-readable description
    detail : Mapping[str, Any] | None
        Structured context copied into failure reports
    """

    exit_code: ClassVar[int] = 1
    kind: ClassVar[str] = "error"

    def __init__(self, message: str, detail: Mapping[str, Any] | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.detail: dict[str, Any] = dict(detail or {})


class SchemaError(ShagraphError):
    """Input descriptor does not parse or validate."""

    exit_code: ClassVar[int] = 2
    kind: ClassVar[str] = "schema"


class PreconditionError(SchemaError):
    """An operation was called outside its precondition."""

    kind: ClassVar[str] = "precondition"


class MismatchError(PreconditionError):
    """Domain/codomain or graph/system mismatch."""

    kind: ClassVar[str] = "mismatch"


class IllDefinedMapError(PreconditionError):
    """A matrix does not induce a homomorphism or action."""

    kind: ClassVar[str] = "ill-defined"


class NotATreeError(PreconditionError):
    """The operation needs a tree."""

    kind: ClassVar[str] = "not-a-tree"


class MissingDataError(PreconditionError):
    """Cohomology table or custom component data is incomplete."""

    kind: ClassVar[str] = "missing-data"


class VerificationError(ShagraphError):
    """A post-hoc verification of a computed result failed.

    Parameters
    ----------
    message : str
        Human-readable description
    detail : Mapping[str, Any] | None
        Offending subgroup, spot, or similar context
    partial : Mapping[str, Any] | None
        Result fields computed before the failure, kept in the report
    """

    exit_code: ClassVar[int] = 3
    kind: ClassVar[str] = "verification"

    def __init__(
        self,
        message: str,
        detail: Mapping[str, Any] | None = None,
        partial: Mapping[str, Any] | None = None,
    ) -> None:
        super().__init__(message, detail)
        self.partial: dict[str, Any] = dict(partial or {})


class LimitExceededError(ShagraphError):
    """A desk-scale bound was exceeded."""

    exit_code: ClassVar[int] = 4
    kind: ClassVar[str] = "limit"


__all__ = [
    "IllDefinedMapError",
    "LimitExceededError",
    "MismatchError",
    "MissingDataError",
    "NotATreeError",
    "PreconditionError",
    "SchemaError",
    "ShagraphError",
    "VerificationError",
]
