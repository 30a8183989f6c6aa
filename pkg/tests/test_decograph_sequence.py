"""Tests for morphisms of coefficient systems and the six-term sequence."""

import pytest
from hypothesis import given, settings

from shagraph.abelian import GroupHom, IntegerMatrix, InvariantFactors, PresentedGroup, equals, is_zero_hom
from shagraph.decograph import (
    SPOTS,
    CoefficientSystem,
    Graph,
    ShortExactSequence,
    SystemMorphism,
    cokernel_system,
    compose_morphisms,
    connecting_map,
    h0,
    image_factorization,
    image_system,
    kernel_system,
    simplicial_system,
    six_term,
)
from shagraph.exceptions import MismatchError, PreconditionError

from .conftest import Z, Z2, Z4
from .strategies import bockstein_sequences, split_sequences

FREE1 = InvariantFactors(1, ())
ZMOD2 = InvariantFactors(0, (2,))


def uniform(a: CoefficientSystem, b: CoefficientSystem, k: int) -> SystemMorphism:
    """Morphism multiplying by ``k`` on every vertex and edge group."""
    g = a.graph

    def times(src: PresentedGroup, dst: PresentedGroup) -> GroupHom:
        return GroupHom(src, dst, IntegerMatrix.scalar(1, k))

    return SystemMorphism(
        a,
        b,
        {v: times(a.vertex_groups[v], b.vertex_groups[v]) for v in g.vertices},
        {e: times(a.edge_groups[e], b.edge_groups[e]) for e in g.edges},
    )


def triangle_bockstein(triangle: Graph) -> ShortExactSequence:
    """``0 -> Z -2-> Z -> Z/2 -> 0`` on the oriented triangle."""
    a = simplicial_system(triangle, Z)
    c = simplicial_system(triangle, Z2)
    return ShortExactSequence(uniform(a, a, 2), uniform(a, c, 1))


class TestMorphisms:
    def test_kernel_of_doubling_is_zero(self, triangle: Graph) -> None:
        a = simplicial_system(triangle, Z)
        inc = kernel_system(uniform(a, a, 2))
        assert all(grp.is_zero for grp in inc.source.vertex_groups.values())

    def test_cokernel_of_doubling(self, triangle: Graph) -> None:
        a = simplicial_system(triangle, Z)
        doubling = uniform(a, a, 2)
        projection = cokernel_system(doubling)
        assert all(grp.invariants == ZMOD2 for grp in projection.target.vertex_groups.values())
        composite = compose_morphisms(projection, doubling)
        assert all(is_zero_hom(f) for f in composite.vertex_maps.values())
        assert h0(triangle, projection.target) == ZMOD2

    def test_image_factorization(self, triangle: Graph) -> None:
        a = simplicial_system(triangle, Z4)
        doubling = uniform(a, a, 2)
        onto, into = image_factorization(doubling)
        assert image_system(doubling).target == a
        assert all(grp.invariants == ZMOD2 for grp in into.source.edge_groups.values())
        composite = compose_morphisms(into, onto)
        assert all(equals(composite.vertex_maps[v], doubling.vertex_maps[v]) for v in triangle.vertices)

    def test_compose_needs_matching_systems(self, triangle: Graph) -> None:
        a = simplicial_system(triangle, Z)
        c = simplicial_system(triangle, Z2)
        with pytest.raises(MismatchError):
            compose_morphisms(uniform(a, c, 1), uniform(a, c, 1))


class TestShortExactSequence:
    def test_rejects_non_exact_sequence(self, triangle: Graph) -> None:
        a = simplicial_system(triangle, Z)
        c = simplicial_system(triangle, Z4)
        with pytest.raises(PreconditionError, match="not exact"):
            ShortExactSequence(uniform(a, a, 2), uniform(a, c, 1))

    def test_rejects_non_composable(self, triangle: Graph) -> None:
        a = simplicial_system(triangle, Z)
        c = simplicial_system(triangle, Z2)
        with pytest.raises(MismatchError):
            ShortExactSequence(uniform(a, c, 1), uniform(a, c, 1))


class TestSixTerm:
    def test_triangle_bockstein(self, triangle: Graph) -> None:
        result = six_term(triangle_bockstein(triangle))
        assert result.invariants == (FREE1, FREE1, ZMOD2, FREE1, FREE1, ZMOD2)
        assert result.is_exact
        assert tuple(result.exactness) == SPOTS
        assert is_zero_hom(result.connecting)

    def test_connecting_map_on_a_digon(self) -> None:
        digon = Graph.build(["x", "y"], {"a": ("x", "y"), "b": ("x", "y")})
        a = simplicial_system(digon, Z)
        c = simplicial_system(digon, Z2)
        delta = connecting_map(ShortExactSequence(uniform(a, a, 2), uniform(a, c, 1)))
        assert delta.domain.invariants == ZMOD2
        assert delta.codomain.invariants == FREE1
        assert is_zero_hom(delta)

    @settings(max_examples=100, deadline=None)
    @given(bockstein_sequences())
    def test_bockstein_sequences_are_exact(self, ses: ShortExactSequence) -> None:
        result = six_term(ses)
        assert result.is_exact, result.exactness
        graph = ses.first.source.graph
        assert result.invariants[0] == h0(graph, ses.first.source)
        assert len(result.maps) == len(SPOTS) - 1

    @settings(max_examples=100, deadline=None)
    @given(split_sequences(finite=False))
    def test_split_sequences_have_zero_connecting_map(self, ses: ShortExactSequence) -> None:
        result = six_term(ses)
        assert result.is_exact, result.exactness
        assert tuple(result.exactness) == SPOTS
        assert is_zero_hom(connecting_map(ses))
        assert is_zero_hom(result.connecting)
