"""Lattice service: Tate cohomology and flasque resolutions."""

from shagraph.services.lattices.service import LatticeService

__all__ = ["LatticeService"]
