"""Graph service: decorated graph cohomology and contraction."""

from shagraph.services.graphs.service import GraphService

__all__ = ["GraphService"]
