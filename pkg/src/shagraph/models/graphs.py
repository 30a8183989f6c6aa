"""Descriptors for decorated graphs, morphisms of coefficient systems and contraction."""

from typing import Annotated, Self

from pydantic import Field, model_validator

from shagraph.abelian.homs import GroupHom
from shagraph.decograph.graph import Graph, HalfEdge
from shagraph.decograph.sequence import ShortExactSequence
from shagraph.decograph.system import CoefficientSystem, SystemMorphism
from shagraph.exceptions import SchemaError
from shagraph.models.algebra import GroupSpec, MatrixRows, build_group, build_hom
from shagraph.models.base import ShagraphBaseModel


class VertexSpec(ShagraphBaseModel):
    id: str = Field(min_length=1)
    group: GroupSpec


class EndSpec(ShagraphBaseModel):
    """One half of an edge: the vertex it is attached to and its map into the edge group."""

    vertex: str = Field(min_length=1)
    map: MatrixRows


class EdgeSpec(ShagraphBaseModel):
    id: str = Field(min_length=1)
    ends: Annotated[list[EndSpec], Field(min_length=2, max_length=2)]
    group: GroupSpec


class GraphDescriptor(ShagraphBaseModel):
    """Decorated graph: groups on vertices and edges, a matrix per half-edge.

    Examples
    --------
    >>> d = GraphDescriptor.model_validate_json('{"vertices": [{"id": "x", "group": "Z"}], "edges": []}')
    >>> d.build()[0].vertices
    ('x',)
    """

    vertices: list[VertexSpec]
    edges: list[EdgeSpec] = Field(default_factory=list)

    @model_validator(mode="after")
    def _unique_ids(self) -> Self:
        for what, ids in (("vertex", [v.id for v in self.vertices]), ("edge", [e.id for e in self.edges])):
            if len(set(ids)) != len(ids):
                raise ValueError(f"repeated {what} id")
        return self

    def build(self) -> tuple[Graph, CoefficientSystem]:
        """Graph and coefficient system; half-edge ``end`` follows the order of ``ends``."""
        graph = Graph.build(
            (v.id for v in self.vertices),
            {e.id: (e.ends[0].vertex, e.ends[1].vertex) for e in self.edges},
        )
        vertex_groups = {v.id: build_group(v.group) for v in self.vertices}
        edge_groups = {e.id: build_group(e.group) for e in self.edges}
        maps: dict[HalfEdge, GroupHom] = {}
        for e in self.edges:
            for end, spec in enumerate(e.ends):
                maps[HalfEdge(e.id, end)] = build_hom(
                    spec.map, vertex_groups[spec.vertex], edge_groups[e.id], f"map of {e.id} at end {end}"
                )
        return graph, CoefficientSystem(graph, vertex_groups, edge_groups, maps)


class MorphismSpec(ShagraphBaseModel):
    """A matrix per vertex and per edge."""

    vertices: dict[str, MatrixRows]
    edges: dict[str, MatrixRows] = Field(default_factory=dict)

    def build(self, source: CoefficientSystem, target: CoefficientSystem) -> SystemMorphism:
        graph = source.graph
        if set(self.vertices) != set(graph.vertices) or set(self.edges) != set(graph.edges):
            raise SchemaError("morphism needs exactly one matrix per vertex and per edge")
        vertex_maps = {
            v: build_hom(rows, source.vertex_groups[v], target.vertex_groups[v], f"morphism at {v}")
            for v, rows in self.vertices.items()
        }
        edge_maps = {
            e: build_hom(rows, source.edge_groups[e], target.edge_groups[e], f"morphism at {e}")
            for e, rows in self.edges.items()
        }
        return SystemMorphism(source, target, vertex_maps, edge_maps)


class HalfEdgeSpec(ShagraphBaseModel):
    edge: str
    end: int = Field(ge=0, le=1)


class GraphInput(GraphDescriptor):
    """Input of ``graph-h`` and ``contract``.

    ``contract`` contracts ``half_edge`` when it is given, otherwise it runs
    the rooted contraction from ``root``.
    """

    root: str | None = None
    half_edge: HalfEdgeSpec | None = None
    merged_id: str | None = None


class SixTermInput(ShagraphBaseModel):
    """``0 -> a -first-> b -second-> c -> 0`` over one underlying graph."""

    a: GraphDescriptor
    b: GraphDescriptor
    c: GraphDescriptor
    first: MorphismSpec
    second: MorphismSpec

    def build(self) -> ShortExactSequence:
        _, a = self.a.build()
        _, b = self.b.build()
        _, c = self.c.build()
        return ShortExactSequence(self.first.build(a, b), self.second.build(b, c))
