"""Tests for graphs, coefficient systems, their cohomology and contraction."""

import pytest
from hypothesis import given, settings

from shagraph.abelian import GroupHom, IntegerMatrix, InvariantFactors, PresentedGroup, equals, identity
from shagraph.decograph import (
    CoefficientSystem,
    Graph,
    HalfEdge,
    SystemMorphism,
    cochain_complex,
    constant_system,
    contract,
    contract_to_point,
    cycle_rank,
    h0,
    h1,
    induced_maps,
    is_bipartite,
    is_redundant,
    is_tree,
    simplicial_system,
    topological_h1,
)
from shagraph.exceptions import MismatchError, PreconditionError

from .conftest import Z, Z2, cycle_graph, path_graph
from .oracles import coboundary_order
from .strategies import Decorated, decorated_graphs, graphs_with_redundant_half_edge

ZMOD2 = InvariantFactors(0, (2,))
FREE1 = InvariantFactors(1, ())


def doubled_at(g: Graph, a0: PresentedGroup, half: HalfEdge) -> CoefficientSystem:
    """Constant system with the map on ``half`` replaced by multiplication by 2."""
    base = constant_system(g, a0)
    maps = dict(base.maps)
    maps[half] = GroupHom(a0, a0, IntegerMatrix.scalar(1, 2))
    return CoefficientSystem(g, base.vertex_groups, base.edge_groups, maps)


class TestGraph:
    def test_ids_are_sorted(self) -> None:
        g = Graph.build(["y", "x"], {"b": ("y", "x"), "a": ("x", "x")})
        assert g.vertices == ("x", "y")
        assert g.edges == ("a", "b")
        assert g.is_loop("a")
        assert g.half_edges_at("x") == (HalfEdge("a", 0), HalfEdge("a", 1), HalfEdge("b", 1))

    def test_unknown_vertex(self) -> None:
        with pytest.raises(PreconditionError, match="unknown vertices"):
            Graph.build(["x"], {"e": ("x", "y")})

    def test_repeated_vertex(self) -> None:
        with pytest.raises(PreconditionError):
            Graph(("x", "x"), {})

    def test_half_edges(self) -> None:
        half = HalfEdge("e", 0)
        assert half.opposite == HalfEdge("e", 1)
        assert str(half) == "e#0"
        with pytest.raises(PreconditionError):
            HalfEdge("e", 2)

    @pytest.mark.parametrize(
        ("graph", "rank", "tree", "bipartite"),
        [
            (path_graph(4), 0, True, True),
            (cycle_graph(3), 1, False, False),
            (cycle_graph(4), 1, False, True),
            (Graph.build(["x"], {"l": ("x", "x")}), 1, False, False),
            (Graph.build(["x", "y"], {"a": ("x", "y"), "b": ("x", "y")}), 1, False, True),
        ],
    )
    def test_shape(self, graph: Graph, rank: int, tree: bool, bipartite: bool) -> None:
        assert cycle_rank(graph) == rank
        assert is_tree(graph) is tree
        assert is_bipartite(graph) is bipartite

    def test_without(self, triangle: Graph) -> None:
        g = triangle.without(vertices=["v0"])
        assert g.vertices == ("v1", "v2")
        assert g.edges == ("e1",)
        assert is_tree(g)

    def test_depths(self, path3: Graph) -> None:
        assert path3.depths("v0") == {"v0": 0, "v1": 1, "v2": 2}


class TestCoefficientSystem:
    def test_groups_must_cover_the_graph(self, path3: Graph) -> None:
        base = constant_system(path3, Z)
        with pytest.raises(MismatchError):
            CoefficientSystem(path3, {"v0": Z}, base.edge_groups, base.maps)

    def test_maps_must_fit_groups(self, path3: Graph) -> None:
        base = constant_system(path3, Z)
        maps = dict(base.maps)
        maps[HalfEdge("e0", 0)] = identity(Z2)
        with pytest.raises(MismatchError):
            CoefficientSystem(path3, base.vertex_groups, base.edge_groups, maps)

    def test_orientation_must_name_edges(self, path3: Graph) -> None:
        with pytest.raises(MismatchError):
            simplicial_system(path3, Z, {"nope": 0})

    def test_morphism_must_commute(self, triangle: Graph) -> None:
        a, b = simplicial_system(triangle, Z), constant_system(triangle, Z)
        with pytest.raises(MismatchError, match="does not commute"):
            SystemMorphism(a, b, dict.fromkeys(triangle.vertices, identity(Z)), dict.fromkeys(triangle.edges, identity(Z)))


class TestCohomology:
    def test_simplicial_triangle(self, triangle: Graph) -> None:
        a = simplicial_system(triangle, Z)
        assert h0(triangle, a) == FREE1
        assert h1(triangle, a) == FREE1
        assert h1(triangle, a) == topological_h1(triangle, Z)

    def test_constant_triangle_mod_two(self, triangle: Graph, constant_triangle: CoefficientSystem) -> None:
        assert h0(triangle, constant_triangle) == ZMOD2
        assert h1(triangle, constant_triangle) == ZMOD2

    def test_constant_odd_cycle_over_z(self, triangle: Graph) -> None:
        a = constant_system(triangle, Z)
        assert h0(triangle, a) == InvariantFactors()
        assert h1(triangle, a) == ZMOD2

    def test_path(self, path3: Graph) -> None:
        a = simplicial_system(path3, Z)
        assert h0(path3, a) == FREE1
        assert h1(path3, a) == InvariantFactors()

    def test_complex_shape(self, triangle: Graph, constant_triangle: CoefficientSystem) -> None:
        complex_ = cochain_complex(triangle, constant_triangle)
        assert complex_.d.matrix.entries == ((1, 1, 0), (0, 1, 1), (1, 0, 1))

    def test_loop_counts_both_halves(self) -> None:
        loop = Graph.build(["x"], {"l": ("x", "x")})
        assert cochain_complex(loop, constant_system(loop, Z)).d.matrix.entries == ((2,),)
        assert h1(loop, simplicial_system(loop, Z)) == FREE1

    def test_disconnected_topological_h1(self) -> None:
        two = Graph.build(
            ["a", "b", "c", "x", "y", "z"],
            {"1": ("a", "b"), "2": ("b", "c"), "3": ("c", "a"), "4": ("x", "y"), "5": ("y", "z"), "6": ("z", "x")},
        )
        assert topological_h1(two, Z2) == InvariantFactors(0, (2, 2))

    def test_system_on_another_graph(self, path3: Graph, constant_triangle: CoefficientSystem) -> None:
        with pytest.raises(MismatchError):
            h0(path3, constant_triangle)

    def test_identity_induces_identity(self, triangle: Graph, constant_triangle: CoefficientSystem) -> None:
        map0, map1 = induced_maps(SystemMorphism.identity(constant_triangle))
        assert equals(map0, identity(map0.domain))
        assert equals(map1, identity(map1.domain))

    @settings(max_examples=150, deadline=None)
    @given(decorated_graphs())
    def test_orders_match_enumeration(self, decorated: Decorated) -> None:
        kernel, cokernel = coboundary_order(decorated.vertex_orders, decorated.edge_orders, decorated.terms)
        assert h0(decorated.graph, decorated.system).order == kernel
        assert h1(decorated.graph, decorated.system).order == cokernel


class TestContraction:
    def test_identity_half_edge_is_redundant(self, path3: Graph) -> None:
        a = constant_system(path3, Z)
        assert is_redundant(path3, a, HalfEdge("e0", 0))

    def test_loop_is_never_redundant(self) -> None:
        loop = Graph.build(["x"], {"l": ("x", "x")})
        a = constant_system(loop, Z)
        assert not is_redundant(loop, a, HalfEdge("l", 0))
        with pytest.raises(PreconditionError, match="not redundant"):
            contract(loop, a, HalfEdge("l", 0))

    def test_contract_merges_vertices(self, path3: Graph) -> None:
        g, a = contract(path3, simplicial_system(path3, Z), HalfEdge("e0", 0))
        assert g.vertices == ("[xy]", "v2")
        assert g.edges == ("e1",)
        assert h0(g, a) == FREE1

    def test_merged_id_must_be_fresh(self, path3: Graph) -> None:
        with pytest.raises(PreconditionError, match="already used"):
            contract(path3, constant_system(path3, Z), HalfEdge("e0", 0), merged_id="v2")

    def test_tree_contracts_to_root(self, path3: Graph) -> None:
        result = contract_to_point(path3, simplicial_system(path3, Z), "v0")
        assert result.success
        assert result.graph.vertices == ("v0",)
        assert result.trace == (HalfEdge("e1", 1), HalfEdge("e0", 1))
        assert result.system.vertex_groups["v0"] == Z

    def test_stops_at_non_redundant_half_edge(self, path3: Graph) -> None:
        result = contract_to_point(path3, doubled_at(path3, Z, HalfEdge("e1", 1)), "v0")
        assert not result.success
        assert result.failed_edge == "e1"
        assert result.reason == "half-edge is not redundant"
        assert result.trace == ()

    def test_cycle_is_not_a_tree(self, triangle: Graph, constant_triangle: CoefficientSystem) -> None:
        result = contract_to_point(triangle, constant_triangle, "v0")
        assert not result.success
        assert result.reason == "not a tree"
        assert result.failed_edge is None

    @settings(max_examples=150, deadline=None)
    @given(graphs_with_redundant_half_edge())
    def test_contraction_preserves_cohomology(self, case: tuple[Decorated, HalfEdge]) -> None:
        decorated, half = case
        g, a = decorated.graph, decorated.system
        contracted, system = contract(g, a, half)
        assert h0(contracted, system) == h0(g, a)
        assert h1(contracted, system) == h1(g, a)

    @settings(max_examples=75, deadline=None)
    @given(graphs_with_redundant_half_edge(finite=False))
    def test_contraction_preserves_cohomology_with_free_groups(self, case: tuple[Decorated, HalfEdge]) -> None:
        decorated, half = case
        contracted, system = contract(decorated.graph, decorated.system, half)
        assert h0(contracted, system) == h0(decorated.graph, decorated.system)
        assert h1(contracted, system) == h1(decorated.graph, decorated.system)
