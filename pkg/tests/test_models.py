"""Tests for shagraph descriptor and report models."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from shagraph.abelian import InvariantFactors
from shagraph.decograph import h0, h1
from shagraph.exceptions import MissingDataError, SchemaError
from shagraph.models import (
    COMMANDS,
    ErrorDetail,
    Fixture,
    GraphDescriptor,
    Job,
    LatticeSpec,
    MatrixInput,
    MorphismSpec,
    PermutationGroupSpec,
    PresentationSpec,
    ReductionDescriptor,
    Report,
    build_group,
    build_matrix,
)

Z2_GROUP = {"degree": 2, "generators": [[1, 0]]}

LOOP_DESCRIPTOR = """
{
  "context": {"degree": 2, "generators": [[1, 0]]},
  "points": [{"id": "P", "label": "G"}, {"id": "Q", "label": "G"}],
  "components": [
    {"id": "U1", "label": "G", "kind": "custom"},
    {"id": "U2", "label": "G"}
  ],
  "branches": [
    {"point": "P", "component": "U1"}, {"point": "Q", "component": "U1"},
    {"point": "P", "component": "U2"}, {"point": "Q", "component": "U2"}
  ],
  "table": {"groups": {"G": "Z/2", "1": "Z/2"}, "restrictions": {"G->1": [[1]]}},
  "custom": {"U1": {"group": "Z/2", "specializations": {"P": [[1]], "Q": [[1]]}, "generic": [[1]]}}
}
"""


# === Algebra ===


def test_build_group_from_invariant_string() -> None:
    """Invariant-factor strings parse into presented groups."""
    assert build_group("Z x Z/2").invariants == InvariantFactors(1, (2,))
    assert build_group("0").is_zero


def test_build_group_rejects_garbage() -> None:
    """Unparseable group strings become schema errors."""
    with pytest.raises(SchemaError):
        build_group("Z/")


def test_presentation_relations_need_full_rows() -> None:
    """Every relation has one entry per generator."""
    assert PresentationSpec(generators=2, relations=[[2, 0]]).build().invariants == InvariantFactors(1, (2,))
    with pytest.raises(SchemaError, match="2 entries"):
        PresentationSpec(generators=2, relations=[[2]]).build()


def test_matrix_shapes() -> None:
    """Shapes are checked; an empty list is any zero-size matrix."""
    assert build_matrix([], 0, 3, "m").shape == (0, 3)
    with pytest.raises(SchemaError, match="2x2"):
        build_matrix([[1, 2]], 2, 2, "m")
    with pytest.raises(SchemaError, match="at least one row"):
        MatrixInput(matrix=[]).build()


# === Lattices ===


def test_lattice_spec_needs_one_source() -> None:
    """Exactly one of action and preset is accepted."""
    with pytest.raises(ValidationError, match="exactly one"):
        LatticeSpec.model_validate({"group": Z2_GROUP})
    with pytest.raises(ValidationError, match="exactly one"):
        LatticeSpec.model_validate({"group": Z2_GROUP, "rank": 1, "action": [[[-1]]], "preset": "trivial"})


def test_lattice_spec_action_needs_rank() -> None:
    with pytest.raises(ValidationError, match="needs a rank"):
        LatticeSpec.model_validate({"group": Z2_GROUP, "action": [[[-1]]]})


def test_lattice_spec_sign_needs_subgroup() -> None:
    with pytest.raises(ValidationError, match="needs a subgroup"):
        LatticeSpec.model_validate({"group": Z2_GROUP, "preset": "sign"})


def test_lattice_spec_builds_sign_lattice() -> None:
    """The explicit action and the preset describe the same lattice."""
    explicit = LatticeSpec.model_validate({"group": Z2_GROUP, "rank": 1, "action": [[[-1]]]}).build()
    preset = LatticeSpec.model_validate({"group": Z2_GROUP, "preset": "sign", "subgroup": []}).build()
    assert explicit.actions == preset.actions
    assert LatticeSpec.model_validate({"group": Z2_GROUP, "preset": "norm_one", "dual": True}).build().rank == 1


def test_lattice_spec_counts_action_matrices() -> None:
    with pytest.raises(SchemaError, match="action matrices"):
        LatticeSpec.model_validate({"group": Z2_GROUP, "rank": 1, "action": []}).build()


def test_permutation_group_round_trip() -> None:
    """``of`` inverts ``build``."""
    group = PermutationGroupSpec.model_validate(Z2_GROUP).build()
    assert PermutationGroupSpec.of(group).build() == group


# === Graphs ===


def test_graph_descriptor_rejects_repeated_ids() -> None:
    vertices = [{"id": "x", "group": "Z"}, {"id": "x", "group": "Z"}]
    with pytest.raises(ValidationError, match="repeated vertex id"):
        GraphDescriptor.model_validate({"vertices": vertices})


def test_graph_descriptor_builds_constant_loop() -> None:
    """A vertex with a loop and identity maps: H^0 = 0 and H^1 = Z/2 over Z."""
    descriptor = GraphDescriptor.model_validate_json(
        '{"vertices": [{"id": "x", "group": "Z"}],'
        ' "edges": [{"id": "l", "group": "Z",'
        ' "ends": [{"vertex": "x", "map": [[1]]}, {"vertex": "x", "map": [[1]]}]}]}'
    )
    g, a = descriptor.build()
    assert g.is_loop("l")
    assert h0(g, a) == InvariantFactors()
    assert h1(g, a) == InvariantFactors(0, (2,))


def test_graph_descriptor_checks_map_shapes() -> None:
    descriptor = GraphDescriptor.model_validate_json(
        '{"vertices": [{"id": "x", "group": "Z"}, {"id": "y", "group": "Z"}],'
        ' "edges": [{"id": "e", "group": "Z",'
        ' "ends": [{"vertex": "x", "map": [[1, 0]]}, {"vertex": "y", "map": [[1]]}]}]}'
    )
    with pytest.raises(SchemaError, match="map of e at end 0"):
        descriptor.build()


def test_morphism_needs_every_vertex() -> None:
    _, a = GraphDescriptor.model_validate_json('{"vertices": [{"id": "x", "group": "Z"}]}').build()
    with pytest.raises(SchemaError, match="one matrix per vertex"):
        MorphismSpec(vertices={}).build(a, a)


# === Reductions ===


def test_reduction_descriptor_reserves_label_names() -> None:
    with pytest.raises(ValidationError, match="reserved"):
        ReductionDescriptor.model_validate(
            {"context": Z2_GROUP, "labels": {"G": [[1, 0]]}, "components": [{"id": "U", "label": "G"}]}
        )


def test_reduction_descriptor_builds_everything() -> None:
    """Graph, table and custom data come out consistent with each other."""
    rg, table, custom = ReductionDescriptor.model_validate_json(LOOP_DESCRIPTOR).build()
    assert rg.branches == (("U1", "P"), ("U1", "Q"), ("U2", "P"), ("U2", "Q"))
    assert not rg.all_rational
    assert table.group(rg.context.ambient.trivial_subgroup).invariants == InvariantFactors(0, (2,))
    assert set(custom["U1"].specializations) == {"P", "Q"}
    assert custom["U1"].generic is not None


def test_restriction_keys_must_have_an_arrow() -> None:
    descriptor = ReductionDescriptor.model_validate_json(LOOP_DESCRIPTOR.replace('"G->1"', '"G1"'))
    with pytest.raises(SchemaError, match="big->small"):
        descriptor.build()


def test_unknown_label_name() -> None:
    text = LOOP_DESCRIPTOR.replace('"id": "U2", "label": "G"', '"id": "U2", "label": "H"')
    descriptor = ReductionDescriptor.model_validate_json(text)
    with pytest.raises(SchemaError, match="unknown label"):
        descriptor.build_graph()


def test_table_is_required() -> None:
    descriptor = ReductionDescriptor.model_validate_json(
        '{"context": {"degree": 1}, "points": [{"id": "P", "label": "G"}],'
        ' "components": [{"id": "U", "label": "G"}], "branches": [{"point": "P", "component": "U"}]}'
    )
    rg = descriptor.build_graph()
    with pytest.raises(SchemaError, match="needs a cohomology table"):
        descriptor.build_table(rg.context)


def test_from_graph_keeps_the_graph() -> None:
    """Re-serialising a built graph gives a descriptor for the same graph."""
    source = ReductionDescriptor.model_validate_json(LOOP_DESCRIPTOR)
    rg = source.build_graph()
    again = ReductionDescriptor.from_graph(rg, source).build_graph()
    assert again.branches == rg.branches
    assert again.components == rg.components
    assert again.kinds == rg.kinds


# === Jobs and reports ===


def test_job_parallel_must_be_positive() -> None:
    with pytest.raises(ValidationError):
        Job(command="snf", input_path=Path("in.json"), parallel=0)


def test_job_rejects_unknown_command() -> None:
    with pytest.raises(ValidationError):
        Job(command="integrate", input_path=Path("in.json"))


def test_commands_are_listed() -> None:
    assert len(COMMANDS) == 12
    assert "shaP1-report" in COMMANDS


def test_report_content_leaves_out_timing() -> None:
    """Two runs differing only in timing have the same content."""
    first = Report(command="snf", input_digest="abc", result={"rank": 1}, timing_ms=1.5)
    second = Report(command="snf", input_digest="abc", result={"rank": 1}, timing_ms=9.0)
    assert first.content() == second.content()
    assert "timingMs" not in first.content()
    assert first.content()["inputDigest"] == "abc"
    assert first.exit_code == 0


def test_error_detail_from_error() -> None:
    err = MissingDataError("no table group", {"label": "H"})
    detail = ErrorDetail.from_error(err)
    assert (detail.kind, detail.exit_code) == ("missing-data", 2)
    assert detail.detail == {"label": "H"}
    report = Report(command="sha", input_digest="", status="failed", failure=detail)
    assert report.exit_code == 2


def test_fixture_expectation_alias() -> None:
    fixture = Fixture.model_validate_json(
        '{"name": "x", "command": "snf", "input": {"matrix": [[1]]}, "expect": {"exitCode": 2}}'
    )
    assert fixture.expect.exit_code == 2
    assert fixture.expect.result == {}
