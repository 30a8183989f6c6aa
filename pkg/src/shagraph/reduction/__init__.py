"""Reduction graphs, their coefficient systems, monotonicity and base change."""

from shagraph.reduction.base_change import base_change, double_cosets
from shagraph.reduction.graph import (
    ComponentKind,
    GaloisContext,
    ReductionGraph,
    edge_id,
    nodal_points,
    nodal_subgraph,
    subdivide_branch,
)
from shagraph.reduction.monotonic import MonotonicResult, PsiResult, is_monotonic, psi_injection
from shagraph.reduction.systems import (
    KPointsReport,
    PhiReport,
    ShaP1Report,
    ShaP1Sequences,
    TrivialityReport,
    build_hk_system,
    build_hkappa_system,
    monotonic_implies_trivial,
    phi_morphism,
    phi_surjection,
    sha,
    sha_all_p1_report,
    sha_k_points_report,
    shap1_sequences,
)
from shagraph.reduction.table import CohomologyTable, CustomComponentData

__all__ = [
    "CohomologyTable",
    "ComponentKind",
    "CustomComponentData",
    "GaloisContext",
    "KPointsReport",
    "MonotonicResult",
    "PhiReport",
    "PsiResult",
    "ReductionGraph",
    "ShaP1Report",
    "ShaP1Sequences",
    "TrivialityReport",
    "base_change",
    "build_hk_system",
    "build_hkappa_system",
    "double_cosets",
    "edge_id",
    "is_monotonic",
    "monotonic_implies_trivial",
    "nodal_points",
    "nodal_subgraph",
    "phi_morphism",
    "phi_surjection",
    "psi_injection",
    "sha",
    "sha_all_p1_report",
    "sha_k_points_report",
    "shap1_sequences",
    "subdivide_branch",
]
