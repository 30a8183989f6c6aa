"""Matrix service for the Smith normal form."""

from shagraph.services.matrices.service import MatrixService

__all__ = ["MatrixService"]
