"""Base service class shared by every command family."""

from shagraph.services.base.service import BaseService, Outcome

__all__ = [
    "BaseService",
    "Outcome",
]
