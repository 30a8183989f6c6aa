"""Cohomology, contraction and six-term sequences of decorated graphs."""

from typing import Any, ClassVar

from shagraph.decograph.complex import h0, h1
from shagraph.decograph.contraction import contract, contract_to_point
from shagraph.decograph.graph import Graph, HalfEdge, cycle_rank, is_bipartite, is_tree
from shagraph.decograph.sequence import SPOTS, six_term
from shagraph.decograph.system import CoefficientSystem
from shagraph.exceptions import SchemaError
from shagraph.models import GraphInput, ShagraphBaseModel, SixTermInput
from shagraph.services.base import BaseService, Outcome


def _shape(g: Graph) -> dict[str, Any]:
    return {
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "components": g.component_count,
        "cycle_rank": cycle_rank(g),
        "tree": is_tree(g),
        "bipartite": is_bipartite(g),
    }


class GraphService(BaseService):
    """Service for ``graph-h``, ``contract`` and ``six-term``."""

    MODEL: ClassVar[type[GraphInput]] = GraphInput
    COMMANDS: ClassVar[tuple[str, ...]] = ("graph-h", "contract", "six-term")

    def model_for(self, command: str) -> type[ShagraphBaseModel]:
        return SixTermInput if command == "six-term" else GraphInput

    def execute(self, command: str, payload: Any) -> Outcome:
        if command == "six-term":
            return self.six_term(payload)
        g, a = payload.build()
        if command == "graph-h":
            return self.cohomology(g, a)
        return self.contract(g, a, payload)

    def cohomology(self, g: Graph, a: CoefficientSystem) -> Outcome:
        return Outcome(result={"h0": str(h0(g, a)), "h1": str(h1(g, a)), **_shape(g)})

    def contract(self, g: Graph, a: CoefficientSystem, payload: GraphInput) -> Outcome:
        """Contract one half-edge, or contract a rooted tree to its root.

        Raises
        ------
        SchemaError
            If neither a half-edge nor a root is given
        """
        before = (h0(g, a), h1(g, a))
        if payload.half_edge is not None:
            half = HalfEdge(payload.half_edge.edge, payload.half_edge.end)
            g2, a2 = contract(g, a, half, payload.merged_id or "[xy]")
            after = (h0(g2, a2), h1(g2, a2))
            return Outcome(
                result={
                    "h0": str(before[0]),
                    "h1": str(before[1]),
                    "vertices": list(g2.vertices),
                    "edges": {e: list(ends) for e, ends in g2.incidence.items()},
                },
                verification={"h0_invariant": before[0] == after[0], "h1_invariant": before[1] == after[1]},
                traces={"contraction": [str(half)]},
            )
        if payload.root is None:
            raise SchemaError("contract needs a half_edge or a root")
        outcome = contract_to_point(g, a, payload.root)
        root_group = a.vertex_group(payload.root).invariants
        return Outcome(
            result={
                "success": outcome.success,
                "root": payload.root,
                "failed_edge": outcome.failed_edge,
                "reason": outcome.reason,
                "h0": str(before[0]),
                "h1": str(before[1]),
                "remaining_vertices": list(outcome.graph.vertices),
            },
            verification={
                "h1_trivial": before[1].is_trivial if outcome.success else None,
                "h0_is_root_group": before[0] == root_group if outcome.success else None,
            },
            traces={"contraction": [str(h) for h in outcome.trace]},
        )

    def six_term(self, payload: SixTermInput) -> Outcome:
        result = six_term(payload.build())
        return Outcome(
            result={
                "groups": dict(zip(SPOTS, (str(x) for x in result.invariants), strict=True)),
                "connecting": result.connecting.matrix.to_lists(),
            },
            verification={f"exact_at_{spot}": ok for spot, ok in result.exactness.items()},
        )

