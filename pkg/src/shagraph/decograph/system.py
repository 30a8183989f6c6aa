"""Coefficient systems on graphs and morphisms between them."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from shagraph.abelian.groups import PresentedGroup
from shagraph.abelian.homs import (
    GroupHom,
    compose,
    corestriction,
    cokernel_projection,
    equals,
    factor_through_injection,
    identity,
    image_inclusion,
    kernel_inclusion,
    negate,
)
from shagraph.decograph.graph import Graph, HalfEdge
from shagraph.exceptions import MismatchError


@dataclass(frozen=True)
class CoefficientSystem:
    """Groups on vertices and edges, and a map ``A_x -> A_e`` per half-edge.

    Parameters
    ----------
    graph : Graph
        Underlying graph
    vertex_groups : Mapping[str, PresentedGroup]
        ``A_x`` for every vertex
    edge_groups : Mapping[str, PresentedGroup]
        ``A_e`` for every edge
    maps : Mapping[HalfEdge, GroupHom]
        ``A_alpha`` for every half-edge, from the group of its vertex to the group of its edge

    Raises
    ------
    MismatchError
        If a group or map is missing, or a map has the wrong domain or codomain
    """

    graph: Graph
    vertex_groups: Mapping[str, PresentedGroup] = field(hash=False)
    edge_groups: Mapping[str, PresentedGroup] = field(hash=False)
    maps: Mapping[HalfEdge, GroupHom] = field(hash=False)

    def __post_init__(self) -> None:
        g = self.graph
        if set(self.vertex_groups) != set(g.vertices):
            raise MismatchError("vertex groups do not match the graph's vertices")
        if set(self.edge_groups) != set(g.edges):
            raise MismatchError("edge groups do not match the graph's edges")
        if set(self.maps) != set(g.half_edges):
            raise MismatchError("half-edge maps do not match the graph's half-edges")
        for half, hom in self.maps.items():
            if hom.domain != self.vertex_groups[g.vertex_of(half)] or hom.codomain != self.edge_groups[half.edge]:
                raise MismatchError(f"map on half-edge {half} does not match its vertex and edge groups")

    def vertex_group(self, vertex: str) -> PresentedGroup:
        return self.vertex_groups[vertex]

    def edge_group(self, edge: str) -> PresentedGroup:
        return self.edge_groups[edge]

    def map(self, half: HalfEdge) -> GroupHom:
        return self.maps[half]


@dataclass(frozen=True)
class SystemMorphism:
    """Maps ``A_x -> B_x`` and ``A_e -> B_e`` commuting with every half-edge map."""

    source: CoefficientSystem
    target: CoefficientSystem
    vertex_maps: Mapping[str, GroupHom] = field(hash=False)
    edge_maps: Mapping[str, GroupHom] = field(hash=False)

    def __post_init__(self) -> None:
        a, b = self.source, self.target
        if a.graph != b.graph:
            raise MismatchError("morphism between systems on different graphs")
        g = a.graph
        if set(self.vertex_maps) != set(g.vertices) or set(self.edge_maps) != set(g.edges):
            raise MismatchError("morphism components do not match the graph")
        for v, f in self.vertex_maps.items():
            if f.domain != a.vertex_groups[v] or f.codomain != b.vertex_groups[v]:
                raise MismatchError(f"vertex map at {v} has the wrong domain or codomain")
        for e, f in self.edge_maps.items():
            if f.domain != a.edge_groups[e] or f.codomain != b.edge_groups[e]:
                raise MismatchError(f"edge map at {e} has the wrong domain or codomain")
        for half in g.half_edges:
            x = g.vertex_of(half)
            left = compose(self.edge_maps[half.edge], a.maps[half])
            right = compose(b.maps[half], self.vertex_maps[x])
            if not equals(left, right):
                raise MismatchError(f"morphism does not commute at half-edge {half}")

    @classmethod
    def identity(cls, a: CoefficientSystem) -> SystemMorphism:
        return cls(
            a,
            a,
            {v: identity(grp) for v, grp in a.vertex_groups.items()},
            {e: identity(grp) for e, grp in a.edge_groups.items()},
        )


def constant_system(g: Graph, a0: PresentedGroup) -> CoefficientSystem:
    """Every group ``a0``, every half-edge map the identity."""
    return CoefficientSystem(
        g,
        dict.fromkeys(g.vertices, a0),
        dict.fromkeys(g.edges, a0),
        {h: identity(a0) for h in g.half_edges},
    )


def simplicial_system(g: Graph, a0: PresentedGroup, heads: Mapping[str, int] | None = None) -> CoefficientSystem:
    """Orientation system: ``+id`` on the head end of each edge, ``-id`` on the tail.

    ``heads`` maps an edge to the end (0 or 1) used as its head; the default is end 1.
    """
    heads = dict(heads or {})
    unknown = set(heads) - set(g.edges)
    if unknown:
        raise MismatchError(f"orientation names unknown edges {sorted(unknown)}")
    plus = identity(a0)
    minus = negate(plus)
    return CoefficientSystem(
        g,
        dict.fromkeys(g.vertices, a0),
        dict.fromkeys(g.edges, a0),
        {h: plus if heads.get(h.edge, 1) == h.end else minus for h in g.half_edges},
    )


def kernel_system(f: SystemMorphism) -> SystemMorphism:
    """Inclusion ``ker f -> f.source`` as a morphism of systems."""
    a = f.source
    g = a.graph
    vertex_inc = {v: kernel_inclusion(f.vertex_maps[v]) for v in g.vertices}
    edge_inc = {e: kernel_inclusion(f.edge_maps[e]) for e in g.edges}
    maps = {
        h: factor_through_injection(edge_inc[h.edge], compose(a.maps[h], vertex_inc[g.vertex_of(h)]))
        for h in g.half_edges
    }
    sub = CoefficientSystem(
        g,
        {v: inc.domain for v, inc in vertex_inc.items()},
        {e: inc.domain for e, inc in edge_inc.items()},
        maps,
    )
    return SystemMorphism(sub, a, vertex_inc, edge_inc)


def image_factorization(f: SystemMorphism) -> tuple[SystemMorphism, SystemMorphism]:
    """``f.source -> im f -> f.target``: corestriction followed by inclusion.

    Images are presented on the source generators, so the half-edge maps of
    ``im f`` have the source's matrices.
    """
    a = f.source
    g = a.graph
    vertex_inc = {v: image_inclusion(f.vertex_maps[v]) for v in g.vertices}
    edge_inc = {e: image_inclusion(f.edge_maps[e]) for e in g.edges}
    maps = {
        h: GroupHom(vertex_inc[g.vertex_of(h)].domain, edge_inc[h.edge].domain, a.maps[h].matrix)
        for h in g.half_edges
    }
    img = CoefficientSystem(
        g,
        {v: inc.domain for v, inc in vertex_inc.items()},
        {e: inc.domain for e, inc in edge_inc.items()},
        maps,
    )
    onto = SystemMorphism(
        a,
        img,
        {v: corestriction(f.vertex_maps[v]) for v in g.vertices},
        {e: corestriction(f.edge_maps[e]) for e in g.edges},
    )
    return onto, SystemMorphism(img, f.target, vertex_inc, edge_inc)


def image_system(f: SystemMorphism) -> SystemMorphism:
    """Inclusion ``im f -> f.target``."""
    return image_factorization(f)[1]


def cokernel_system(f: SystemMorphism) -> SystemMorphism:
    """Projection ``f.target -> coker f``; cokernels keep the target generators."""
    b = f.target
    g = b.graph
    vertex_proj = {v: cokernel_projection(f.vertex_maps[v]) for v in g.vertices}
    edge_proj = {e: cokernel_projection(f.edge_maps[e]) for e in g.edges}
    maps = {
        h: GroupHom(vertex_proj[g.vertex_of(h)].codomain, edge_proj[h.edge].codomain, b.maps[h].matrix)
        for h in g.half_edges
    }
    quotient = CoefficientSystem(
        g,
        {v: p.codomain for v, p in vertex_proj.items()},
        {e: p.codomain for e, p in edge_proj.items()},
        maps,
    )
    return SystemMorphism(b, quotient, vertex_proj, edge_proj)


def compose_morphisms(second: SystemMorphism, first: SystemMorphism) -> SystemMorphism:
    """``second o first``."""
    if first.target != second.source:
        raise MismatchError("morphisms are not composable")
    g = first.source.graph
    return SystemMorphism(
        first.source,
        second.target,
        {v: compose(second.vertex_maps[v], first.vertex_maps[v]) for v in g.vertices},
        {e: compose(second.edge_maps[e], first.edge_maps[e]) for e in g.edges},
    )
