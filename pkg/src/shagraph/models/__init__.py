"""Pydantic models for JSON descriptors, jobs and reports."""

from shagraph.models.algebra import GroupSpec, MatrixInput, PresentationSpec, build_group, build_hom, build_matrix
from shagraph.models.base import ShagraphBaseModel
from shagraph.models.errors import ErrorDetail
from shagraph.models.fixtures import Fixture, FixtureExpectation
from shagraph.models.graphs import (
    EdgeSpec,
    EndSpec,
    GraphDescriptor,
    GraphInput,
    HalfEdgeSpec,
    MorphismSpec,
    SixTermInput,
    VertexSpec,
)
from shagraph.models.lattices import LatticeInput, LatticeSpec, PermutationGroupSpec, build_subgroup
from shagraph.models.reductions import (
    BranchSpec,
    ComponentSpec,
    CustomSpec,
    PointSpec,
    ReductionDescriptor,
    ReductionInput,
    TableSpec,
)
from shagraph.models.reports import COMMANDS, CommandName, Job, Report

__all__ = [
    "COMMANDS",
    "BranchSpec",
    "CommandName",
    "ComponentSpec",
    "CustomSpec",
    "EdgeSpec",
    "EndSpec",
    "ErrorDetail",
    "Fixture",
    "FixtureExpectation",
    "GraphDescriptor",
    "GraphInput",
    "GroupSpec",
    "HalfEdgeSpec",
    "Job",
    "LatticeInput",
    "LatticeSpec",
    "MatrixInput",
    "MorphismSpec",
    "PermutationGroupSpec",
    "PointSpec",
    "PresentationSpec",
    "ReductionDescriptor",
    "ReductionInput",
    "Report",
    "ShagraphBaseModel",
    "SixTermInput",
    "TableSpec",
    "VertexSpec",
    "build_group",
    "build_hom",
    "build_matrix",
    "build_subgroup",
]
