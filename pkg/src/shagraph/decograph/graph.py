"""Finite multigraphs with explicit half-edges.

Every edge has two ends, numbered 0 and 1; a loop has both ends at one vertex.
Vertices and edges iterate in sorted id order.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from shagraph.exceptions import MismatchError, PreconditionError


@dataclass(frozen=True, order=True)
class HalfEdge:
    """End ``end`` (0 or 1) of edge ``edge``."""

    edge: str
    end: int

    def __post_init__(self) -> None:
        if self.end not in (0, 1):
            raise PreconditionError(f"half-edge end must be 0 or 1, got {self.end}")

    @property
    def opposite(self) -> HalfEdge:
        return HalfEdge(self.edge, 1 - self.end)

    def __str__(self) -> str:
        return f"{self.edge}#{self.end}"


@dataclass(frozen=True)
class Graph:
    """Multigraph with loops.

    Parameters
    ----------
    vertices : tuple[str, ...]
        Vertex ids
    incidence : Mapping[str, tuple[str, str]]
        Edge id to the vertices at ends 0 and 1

    Raises
    ------
    PreconditionError
        If an edge end names an unknown vertex, or an id is repeated

    Examples
    --------
    >>> g = Graph.build(["x", "y"], {"e": ("x", "y")})
    >>> g.half_edges_at("x")
    (HalfEdge(edge='e', end=0),)
    """

    vertices: tuple[str, ...]
    incidence: Mapping[str, tuple[str, str]] = field(hash=False)

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise PreconditionError("repeated vertex id")
        known = set(self.vertices)
        for edge, ends in self.incidence.items():
            if len(ends) != 2:  # noqa: PLR2004
                raise PreconditionError(f"edge {edge} must have exactly two ends")
            missing = [v for v in ends if v not in known]
            if missing:
                raise PreconditionError(f"edge {edge} is attached to unknown vertices {missing}")
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "incidence", {e: tuple(self.incidence[e]) for e in sorted(self.incidence)})

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Mapping[str, tuple[str, str]]) -> Graph:
        return cls(tuple(vertices), dict(edges))

    @property
    def edges(self) -> tuple[str, ...]:
        return tuple(self.incidence)

    def ends(self, edge: str) -> tuple[str, str]:
        if edge not in self.incidence:
            raise MismatchError(f"unknown edge {edge}")
        return self.incidence[edge]

    def vertex_of(self, half: HalfEdge) -> str:
        return self.ends(half.edge)[half.end]

    def is_loop(self, edge: str) -> bool:
        x, y = self.ends(edge)
        return x == y

    @cached_property
    def half_edges(self) -> tuple[HalfEdge, ...]:
        return tuple(HalfEdge(e, end) for e in self.incidence for end in (0, 1))

    def half_edges_at(self, vertex: str) -> tuple[HalfEdge, ...]:
        return tuple(h for h in self.half_edges if self.vertex_of(h) == vertex)

    def edges_between(self, x: str, y: str) -> tuple[str, ...]:
        return tuple(e for e, ends in self.incidence.items() if set(ends) == {x, y})

    def without(self, vertices: Iterable[str] = (), edges: Iterable[str] = ()) -> Graph:
        """Subgraph with the given vertices (and their edges) and edges removed."""
        drop_v = set(vertices)
        drop_e = set(edges)
        return Graph(
            tuple(v for v in self.vertices if v not in drop_v),
            {
                e: ends
                for e, ends in self.incidence.items()
                if e not in drop_e and not (set(ends) & drop_v)
            },
        )

    @cached_property
    def nx_graph(self) -> nx.MultiGraph:
        """The same graph as a ``networkx.MultiGraph`` keyed by edge id."""
        g = nx.MultiGraph()
        g.add_nodes_from(self.vertices)
        for e, (x, y) in self.incidence.items():
            g.add_edge(x, y, key=e)
        return g

    @property
    def component_count(self) -> int:
        return nx.number_connected_components(self.nx_graph) if self.vertices else 0

    def is_connected(self) -> bool:
        return self.component_count == 1

    def depths(self, root: str) -> dict[str, int]:
        """Edge distance from ``root`` to each reachable vertex."""
        if root not in self.vertices:
            raise MismatchError(f"unknown vertex {root}")
        return dict(nx.single_source_shortest_path_length(self.nx_graph, root))


def cycle_rank(g: Graph) -> int:
    """First Betti number ``|E| - |V| + (number of components)``."""
    return len(g.edges) - len(g.vertices) + g.component_count


def is_tree(g: Graph) -> bool:
    """Connected, no cycles, no loops or multiple edges."""
    return bool(g.vertices) and g.is_connected() and cycle_rank(g) == 0


def is_bipartite(g: Graph) -> bool:
    if any(g.is_loop(e) for e in g.edges):
        return False
    return nx.is_bipartite(nx.Graph(g.nx_graph))
