"""Contraction of redundant half-edges and the rooted-tree contraction test."""

from __future__ import annotations

from dataclasses import dataclass, field

from shagraph import logger
from shagraph.abelian.homs import GroupHom, compose, inverse, is_isomorphism, negate
from shagraph.decograph.graph import Graph, HalfEdge, is_tree
from shagraph.decograph.system import CoefficientSystem
from shagraph.exceptions import MismatchError, PreconditionError


def is_redundant(g: Graph, a: CoefficientSystem, half: HalfEdge) -> bool:
    """The edge joins two distinct vertices and ``A_alpha`` is an isomorphism."""
    if a.graph != g:
        raise MismatchError("coefficient system lives on a different graph")
    return not g.is_loop(half.edge) and is_isomorphism(a.maps[half])


def contract(
    g: Graph, a: CoefficientSystem, half: HalfEdge, merged_id: str = "[xy]"
) -> tuple[Graph, CoefficientSystem]:
    """Contract the edge of the redundant half-edge ``half``.

    With ``half`` at ``x`` and its opposite ``beta`` at ``y``, the merged vertex
    carries ``A_y``. Half-edges ``gamma`` formerly at ``x`` get
    ``A_gamma o (-A_half^-1) o A_beta``; half-edges at ``y`` keep their maps.

    Raises
    ------
    PreconditionError
        If ``half`` is not redundant or ``merged_id`` names another vertex
    """
    if not is_redundant(g, a, half):
        raise PreconditionError(f"half-edge {half} is not redundant", {"half_edge": str(half)})
    edge = half.edge
    beta = half.opposite
    x, y = g.vertex_of(half), g.vertex_of(beta)
    if merged_id in g.vertices and merged_id not in (x, y):
        raise PreconditionError(f"merged vertex id {merged_id} is already used")
    through: GroupHom = compose(negate(inverse(a.maps[half])), a.maps[beta])

    def moved(v: str) -> str:
        return merged_id if v in (x, y) else v

    incidence = {
        e: (moved(u), moved(w)) for e, (u, w) in g.incidence.items() if e != edge
    }
    vertices = tuple(v for v in g.vertices if v not in (x, y)) + (merged_id,)
    contracted = Graph(vertices, incidence)
    maps: dict[HalfEdge, GroupHom] = {}
    for gamma in contracted.half_edges:
        old = a.maps[gamma]
        maps[gamma] = compose(old, through) if g.vertex_of(gamma) == x else old
    vertex_groups = {v: a.vertex_groups[v] for v in vertices if v != merged_id}
    vertex_groups[merged_id] = a.vertex_groups[y]
    edge_groups = {e: grp for e, grp in a.edge_groups.items() if e != edge}
    logger.debug("contracted edge %s: %s and %s merged into %s", edge, x, y, merged_id)
    return contracted, CoefficientSystem(contracted, vertex_groups, edge_groups, maps)


@dataclass(frozen=True)
class ContractionResult:
    """Outcome of :func:`contract_to_point`.

    ``trace`` lists the contracted half-edges in order; on failure ``failed_edge``
    names the edge whose child half-edge is not redundant (``None`` when the
    graph is not a tree).
    """

    success: bool
    trace: tuple[HalfEdge, ...]
    graph: Graph
    system: CoefficientSystem
    failed_edge: str | None = None
    reason: str = field(default="")


def contract_to_point(g: Graph, a: CoefficientSystem, root: str) -> ContractionResult:
    """Contract a rooted tree onto ``root``, deepest vertices first (ties by id).

    Each step contracts the edge from a vertex to its parent along the
    vertex's own half-edge; the merged vertex keeps the parent's id and group.
    """
    if a.graph != g:
        raise MismatchError("coefficient system lives on a different graph")
    if not is_tree(g):
        return ContractionResult(False, (), g, a, reason="not a tree")
    depth = g.depths(root)
    parent_half: dict[str, HalfEdge] = {}
    for e, (u, w) in g.incidence.items():
        child, end = (u, 0) if depth[u] > depth[w] else (w, 1)
        parent_half[child] = HalfEdge(e, end)
    order = sorted((v for v in g.vertices if v != root), key=lambda v: (-depth[v], v))
    trace: list[HalfEdge] = []
    graph, system = g, a
    for child in order:
        half = parent_half[child]
        if not is_redundant(graph, system, half):
            logger.debug("contraction stops at edge %s", half.edge)
            return ContractionResult(False, tuple(trace), graph, system, half.edge, "half-edge is not redundant")
        parent = graph.vertex_of(half.opposite)
        graph, system = contract(graph, system, half, merged_id=parent)
        trace.append(half)
    return ContractionResult(True, tuple(trace), graph, system)
