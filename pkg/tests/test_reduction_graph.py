"""Tests for reduction graphs, monotonic trees, the matching test and base change."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shagraph.abelian import GroupHom, IntegerMatrix
from shagraph.decograph import cycle_rank, is_tree
from shagraph.exceptions import MismatchError, MissingDataError, NotATreeError, PreconditionError
from shagraph.glattice import FiniteGroup
from shagraph.reduction import (
    CohomologyTable,
    ComponentKind,
    GaloisContext,
    ReductionGraph,
    base_change,
    double_cosets,
    edge_id,
    is_monotonic,
    nodal_points,
    nodal_subgraph,
    psi_injection,
    subdivide_branch,
)

from .conftest import Z2, reduction_graph, table
from .strategies import labeled_trees


class TestGaloisContext:
    def test_conjugation_counts_as_containment(self, s3: FiniteGroup) -> None:
        ctx = GaloisContext.of(s3)
        first = s3.subgroup_from_permutations([[1, 0, 2]])
        second = s3.subgroup_from_permutations([[0, 2, 1]])
        assert not first <= second
        assert ctx.contained(first, second)
        assert ctx.same_label(first, second)
        assert ctx.conjugate_into(s3.trivial_subgroup, first) == s3.identity

    def test_order_three_is_not_inside_order_two(self, s3: FiniteGroup) -> None:
        ctx = GaloisContext.of(s3)
        a3 = s3.subgroup_from_permutations([[1, 2, 0]])
        assert ctx.conjugate_into(a3, s3.subgroup_from_permutations([[1, 0, 2]])) is None

    def test_context_must_live_in_ambient(self, z2: FiniteGroup, z4: FiniteGroup) -> None:
        with pytest.raises(MismatchError):
            GaloisContext(z2, z4.whole)


class TestReductionGraph:
    def test_graph_orientation(self, nonmonotonic_tree: ReductionGraph) -> None:
        g = nonmonotonic_tree.graph
        assert g.vertices == ("P", "U1", "U2")
        assert g.ends(edge_id("U1", "P")) == ("U1", "P")
        assert nonmonotonic_tree.point_half("U1", "P").end == 1
        assert nonmonotonic_tree.components_at("P") == ("U1", "U2")
        assert nonmonotonic_tree.points_on("U1") == ("P",)

    def test_label_lookup(self, z2: FiniteGroup, nonmonotonic_tree: ReductionGraph) -> None:
        assert nonmonotonic_tree.label("P") == z2.trivial_subgroup
        with pytest.raises(MismatchError):
            nonmonotonic_tree.label("nowhere")

    def test_point_label_must_fit_component(self, z2: FiniteGroup) -> None:
        with pytest.raises(PreconditionError, match="not contained"):
            reduction_graph(z2, {"P": z2.whole}, {"U": z2.trivial_subgroup}, [("U", "P")])

    def test_point_on_three_branches(self, z2: FiniteGroup) -> None:
        whole = z2.whole
        with pytest.raises(PreconditionError, match="more than two"):
            reduction_graph(
                z2, {"P": whole}, {"A": whole, "B": whole, "C": whole}, [("A", "P"), ("B", "P"), ("C", "P")]
            )

    def test_must_be_connected(self, z2: FiniteGroup) -> None:
        whole = z2.whole
        with pytest.raises(PreconditionError, match="not connected"):
            reduction_graph(z2, {"P": whole, "Q": whole}, {"A": whole, "B": whole}, [("A", "P"), ("B", "Q")])

    def test_ids_must_not_clash(self, z2: FiniteGroup) -> None:
        whole = z2.whole
        with pytest.raises(PreconditionError, match="both points and components"):
            reduction_graph(z2, {"X": whole}, {"X": whole}, [])

    def test_branch_must_join_component_to_point(self, z2: FiniteGroup) -> None:
        whole = z2.whole
        with pytest.raises(PreconditionError, match="must join"):
            reduction_graph(z2, {"P": whole}, {"U": whole}, [("P", "U")])

    def test_foreign_label(self, z2: FiniteGroup, z4: FiniteGroup) -> None:
        with pytest.raises(PreconditionError, match="not a subgroup"):
            reduction_graph(z2, {"P": z4.whole}, {"U": z2.whole}, [("U", "P")])

    def test_from_dual_graph(self, z2: FiniteGroup) -> None:
        whole = z2.whole
        rg = ReductionGraph.from_dual_graph(
            GaloisContext.of(z2),
            {"U1": (whole, ComponentKind.RATIONAL), "U2": (whole, ComponentKind.CUSTOM)},
            {"P": (whole, "U1", "U2")},
            {"X": (whole, "U1")},
        )
        assert rg.branches == (("U1", "P"), ("U1", "X"), ("U2", "P"))
        assert nodal_points(rg) == ("P",)
        assert not rg.all_rational
        assert nodal_subgraph(rg).vertices == ("P", "U1", "U2")

    def test_dual_graph_intersection_needs_two_components(self, z2: FiniteGroup) -> None:
        with pytest.raises(PreconditionError):
            ReductionGraph.from_dual_graph(
                GaloisContext.of(z2),
                {"U": (z2.whole, ComponentKind.RATIONAL)},
                {"P": (z2.whole, "U", "U")},
            )

    def test_subdivide_branch(self, nonmonotonic_tree: ReductionGraph) -> None:
        refined, data = subdivide_branch(nonmonotonic_tree, "P", "U2")
        assert set(refined.points) == {"P", "P~U2"}
        assert refined.components["E[U2,P]"] == nonmonotonic_tree.points["P"]
        assert refined.kinds["E[U2,P]"] is ComponentKind.RATIONAL
        assert is_tree(refined.graph)
        assert data == {}

    def test_subdivide_unknown_branch(self, nonmonotonic_tree: ReductionGraph) -> None:
        with pytest.raises(PreconditionError, match="no branch"):
            subdivide_branch(nonmonotonic_tree, "P", "U3")


class TestCohomologyTable:
    def test_conjugate_label_fallback(self, s3: FiniteGroup) -> None:
        first = s3.subgroup_from_permutations([[1, 0, 2]])
        second = s3.subgroup_from_permutations([[0, 2, 1]])
        t = table(s3, {first: Z2})
        assert t.group(second) == Z2

    def test_missing_label(self, z2: FiniteGroup) -> None:
        t = table(z2, {z2.whole: Z2})
        with pytest.raises(MissingDataError):
            t.group(z2.trivial_subgroup)
        with pytest.raises(MissingDataError):
            t.restriction(z2.whole, z2.trivial_subgroup)

    def test_restriction_needs_inclusion(self, z2: FiniteGroup) -> None:
        hom = GroupHom(Z2, Z2, IntegerMatrix.identity(1))
        with pytest.raises(PreconditionError, match="not a subgroup"):
            table(z2, {z2.whole: Z2, z2.trivial_subgroup: Z2}, {(z2.trivial_subgroup, z2.whole): hom})

    def test_incompatible_chain(self, z4: FiniteGroup) -> None:
        whole, trivial = z4.whole, z4.trivial_subgroup
        middle = next(h for h in z4.all_subgroups if h.order == 2)
        one = GroupHom(Z2, Z2, IntegerMatrix.identity(1))
        zero = GroupHom(Z2, Z2, IntegerMatrix.zeros(1, 1))
        with pytest.raises(PreconditionError, match="chain"):
            table(
                z4,
                {whole: Z2, middle: Z2, trivial: Z2},
                {(whole, middle): one, (middle, trivial): one, (whole, trivial): zero},
            )

    def test_equal_labels_restrict_by_identity(self, z2: FiniteGroup) -> None:
        t = table(z2, {z2.whole: Z2})
        assert t.restriction(z2.whole, z2.whole).matrix == IntegerMatrix.identity(1)

    def test_table_ambient_must_match(self, z2: FiniteGroup, z4: FiniteGroup) -> None:
        with pytest.raises(PreconditionError):
            CohomologyTable(z2, {z4.whole: Z2})


class TestMonotonic:
    def test_nonmonotonic_tree(self, nonmonotonic_tree: ReductionGraph) -> None:
        result = is_monotonic(nonmonotonic_tree)
        assert not result.monotonic
        assert result.root == "U1"
        assert result.witness == ("P", "U2")
        assert result.violations == 1

    def test_cycle_is_not_monotonic(self, hexagon: ReductionGraph) -> None:
        result = is_monotonic(hexagon)
        assert not result.monotonic
        assert result.reason == "not a tree"
        with pytest.raises(NotATreeError):
            psi_injection(hexagon)

    def test_psi_on_nonmonotonic_tree(self, nonmonotonic_tree: ReductionGraph) -> None:
        result = psi_injection(nonmonotonic_tree)
        assert not result.exists
        assert result.unmatched == ("P",)

    def test_psi_matches_equal_labels(self, z2: FiniteGroup) -> None:
        whole = z2.whole
        rg = reduction_graph(z2, {"P": whole}, {"U1": whole, "U2": whole}, [("U1", "P"), ("U2", "P")])
        result = psi_injection(rg)
        assert result.exists
        assert result.psi["P"] in {"U1", "U2"}

    @settings(max_examples=100, deadline=None)
    @given(labeled_trees(monotonic=True))
    def test_monotonic_trees_are_found(self, rg: ReductionGraph) -> None:
        result = is_monotonic(rg)
        assert result.monotonic
        assert result.root is not None
        assert psi_injection(rg).exists

    @settings(max_examples=150, deadline=None)
    @given(labeled_trees())
    def test_matching_agrees_with_root_search(self, rg: ReductionGraph) -> None:
        assert psi_injection(rg).exists == is_monotonic(rg).monotonic

    @settings(max_examples=50, deadline=None)
    @given(labeled_trees())
    def test_parallel_search_agrees(self, rg: ReductionGraph) -> None:
        assert is_monotonic(rg, workers=3) == is_monotonic(rg, workers=1)


class TestBaseChange:
    def test_nonmonotonic_tree_opens_a_cycle(self, z2: FiniteGroup, nonmonotonic_tree: ReductionGraph) -> None:
        changed = base_change(nonmonotonic_tree, z2.trivial_subgroup)
        assert sorted(changed.points) == ["P@0", "P@1"]
        assert sorted(changed.components) == ["U1@0", "U2@0"]
        assert cycle_rank(changed.graph) == 1
        assert changed.context.group == z2.trivial_subgroup

    def test_needs_normal_subgroup(self, s3: FiniteGroup) -> None:
        rg = reduction_graph(s3, {"P": s3.whole}, {"U": s3.whole}, [("U", "P")])
        with pytest.raises(PreconditionError, match="normal"):
            base_change(rg, s3.subgroup_from_permutations([[1, 0, 2]]))

    def test_whole_group_changes_nothing(self, nonmonotonic_tree: ReductionGraph) -> None:
        changed = base_change(nonmonotonic_tree, nonmonotonic_tree.context.group)
        assert len(changed.vertices) == len(nonmonotonic_tree.vertices)
        assert is_tree(changed.graph)

    def test_double_cosets_partition(self, s3: FiniteGroup) -> None:
        a3 = s3.subgroup_from_permutations([[1, 2, 0]])
        transposition = s3.subgroup_from_permutations([[1, 0, 2]])
        cosets = double_cosets(a3, s3.whole, transposition)
        assert len(cosets) == 1
        assert len(double_cosets(s3.trivial_subgroup, s3.whole, transposition)) == 3

    @settings(max_examples=75, deadline=None)
    @given(st.data(), labeled_trees(monotonic=True))
    def test_monotonic_trees_stay_monotonic(self, data: st.DataObject, rg: ReductionGraph) -> None:
        group = rg.context.ambient
        n = data.draw(st.sampled_from([h for h in group.all_subgroups if h.is_normal()]))
        root_label = rg.components["U0"]
        if len(double_cosets(n, rg.context.group, root_label)) > 1:
            return
        changed = base_change(rg, n)
        assert is_tree(changed.graph)
        assert is_monotonic(changed).monotonic
