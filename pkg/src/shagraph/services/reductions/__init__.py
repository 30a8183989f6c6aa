"""Reduction service: monotonic trees, base change and Sha."""

from shagraph.services.reductions.service import ReductionService

__all__ = ["ReductionService"]
