"""Decorated graphs: coefficient systems, their cohomology, contraction."""

from shagraph.decograph.complex import CochainComplex, cochain_complex, h0, h1, induced_maps, topological_h1
from shagraph.decograph.contraction import ContractionResult, contract, contract_to_point, is_redundant
from shagraph.decograph.graph import Graph, HalfEdge, cycle_rank, is_bipartite, is_tree
from shagraph.decograph.sequence import SPOTS, ShortExactSequence, SixTermResult, connecting_map, six_term
from shagraph.decograph.system import (
    CoefficientSystem,
    SystemMorphism,
    cokernel_system,
    compose_morphisms,
    constant_system,
    image_factorization,
    image_system,
    kernel_system,
    simplicial_system,
)

__all__ = [
    "SPOTS",
    "CochainComplex",
    "CoefficientSystem",
    "ContractionResult",
    "Graph",
    "HalfEdge",
    "ShortExactSequence",
    "SixTermResult",
    "SystemMorphism",
    "cochain_complex",
    "cokernel_system",
    "compose_morphisms",
    "connecting_map",
    "constant_system",
    "contract",
    "contract_to_point",
    "cycle_rank",
    "h0",
    "h1",
    "image_factorization",
    "image_system",
    "induced_maps",
    "is_bipartite",
    "is_redundant",
    "is_tree",
    "kernel_system",
    "simplicial_system",
    "six_term",
    "topological_h1",
]
