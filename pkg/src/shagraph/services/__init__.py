"""Command services and the job runner."""

from shagraph.services.base import BaseService, Outcome
from shagraph.services.graphs import GraphService
from shagraph.services.lattices import LatticeService
from shagraph.services.matrices import MatrixService
from shagraph.services.reductions import ReductionService

__all__ = [
    "BaseService",
    "GraphService",
    "LatticeService",
    "MatrixService",
    "Outcome",
    "ReductionService",
]
