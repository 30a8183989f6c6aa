"""Reduction-graph pipelines: monotonicity, base change and Sha."""

from typing import Any, ClassVar

from shagraph import logger
from shagraph.abelian.groups import InvariantFactors
from shagraph.decograph.complex import topological_h1
from shagraph.decograph.graph import cycle_rank, is_tree
from shagraph.decograph.sequence import SPOTS
from shagraph.exceptions import MissingDataError, SchemaError
from shagraph.models import ReductionDescriptor, ReductionInput
from shagraph.reduction.base_change import base_change
from shagraph.reduction.graph import ReductionGraph, nodal_points
from shagraph.reduction.monotonic import is_monotonic, psi_injection
from shagraph.reduction.systems import (
    TrivialityReport,
    monotonic_implies_trivial,
    phi_surjection,
    sha,
    sha_all_p1_report,
    sha_k_points_report,
)
from shagraph.reduction.table import CohomologyTable
from shagraph.services.base import BaseService, Outcome

SHAP1_REQUIRED = ("surjective_right", "exact_middle", "left_is_topological")


def _shape(rg: ReductionGraph) -> dict[str, Any]:
    return {
        "points": len(rg.points),
        "components": len(rg.components),
        "branches": len(rg.branches),
        "cycle_rank": cycle_rank(rg.graph),
        "tree": is_tree(rg.graph),
    }


def _triviality(report: TrivialityReport) -> tuple[dict[str, Any], dict[str, bool | None], list[str]]:
    result = {
        "root": report.root,
        "h1_kappa": str(report.h1_kappa),
        "sha": None if report.sha is None else str(report.sha),
    }
    flags: dict[str, bool | None] = {
        "contracts_to_root": report.contraction.success,
        "sha_trivial": None if report.sha is None else report.sha.is_trivial,
    }
    return result, flags, [str(h) for h in report.contraction.trace]


class ReductionService(BaseService):
    """Service for ``monotonic``, ``psi``, ``basechange``, ``sha`` and ``shaP1-report``."""

    MODEL: ClassVar[type[ReductionInput]] = ReductionInput
    COMMANDS: ClassVar[tuple[str, ...]] = ("monotonic", "psi", "basechange", "sha", "shaP1-report")

    def execute(self, command: str, payload: Any) -> Outcome:
        rg = payload.build_graph()
        logger.debug(f"reduction graph with {len(rg.points)} points and {len(rg.components)} components")
        match command:
            case "monotonic":
                return self.monotonic(rg, payload)
            case "psi":
                return self.psi(rg)
            case "basechange":
                return self.base_change(rg, payload)
            case "sha":
                return self.sha(rg, payload)
            case _:
                return self.sha_p1(rg, payload)

    def monotonic(self, rg: ReductionGraph, payload: ReductionInput) -> Outcome:
        """Root search, the matching cross-check on trees, and the vanishing check when a table is given."""
        found = is_monotonic(rg, self.workers)
        result: dict[str, Any] = {
            "monotonic": found.monotonic,
            "root": found.root,
            "witness": list(found.witness) if found.witness else None,
            "violations": found.violations,
            "reason": found.reason,
            **_shape(rg),
        }
        verification: dict[str, bool | None] = {}
        traces: dict[str, list[str]] = {}
        if result["tree"]:
            psi = psi_injection(rg)
            result["psi"] = psi.psi
            verification["psi_agrees"] = psi.exists == found.monotonic
        if found.monotonic and payload.table is not None:
            table = payload.build_table(rg.context)
            triviality, flags, trace = _triviality(
                monotonic_implies_trivial(rg, table, payload.build_custom(rg, table), found.root)
            )
            result["triviality"] = triviality
            verification.update(flags)
            traces["contraction"] = trace
        logger.info(f"monotonic: {found.monotonic} (root {found.root})")
        return Outcome(result, verification, traces)

    def psi(self, rg: ReductionGraph) -> Outcome:
        found = psi_injection(rg)
        return Outcome(
            result={
                "exists": found.exists,
                "psi": found.psi,
                "unmatched": list(found.unmatched),
                "nodal_points": list(nodal_points(rg)),
            },
            verification={"agrees_with_root_search": True},
        )

    def base_change(self, rg: ReductionGraph, payload: ReductionInput) -> Outcome:
        """Base change to the fixed field of ``normal``; the new graph is returned as a descriptor.

        Custom component data does not carry over.
        """
        if payload.normal is None:
            raise SchemaError("basechange needs a normal subgroup")
        n = payload.resolve(payload.normal, rg.context)
        was_monotonic = is_monotonic(rg, self.workers).monotonic
        changed = base_change(rg, n)
        shape = _shape(changed)
        return Outcome(
            result={**shape, "graph": ReductionDescriptor.from_graph(changed, payload).to_json_dict()},
            verification={
                "connected": changed.graph.is_connected(),
                "tree_when_monotonic": shape["tree"] if was_monotonic else None,
            },
        )

    def sha(self, rg: ReductionGraph, payload: ReductionInput) -> Outcome:
        """Sha with every check that applies to the graph.

        The comparison map from the residue-field system is checked when
        generic restrictions are available, the vanishing theorem on monotonic
        trees, and the ``A_G^m`` comparisons when every point has label ``G``.
        """
        table = payload.build_table(rg.context)
        custom = payload.build_custom(rg, table)
        value = sha(rg, table, custom)
        phi = phi_surjection(rg, table, custom)
        result: dict[str, Any] = {
            "sha": str(value),
            "topological_h1": self._topological(rg, table),
            "phi": {
                "available": phi.available,
                "h1_kappa": None if phi.h1_kappa is None else str(phi.h1_kappa),
                "h1_k": None if phi.h1_k is None else str(phi.h1_k),
                "isomorphism": phi.isomorphism,
                "missing": list(phi.missing),
            },
            **_shape(rg),
        }
        verification: dict[str, bool | None] = {"phi_surjective": phi.surjective}
        traces: dict[str, list[str]] = {}
        found = is_monotonic(rg, self.workers)
        result["monotonic"] = found.monotonic
        if found.monotonic:
            triviality, flags, trace = _triviality(monotonic_implies_trivial(rg, table, custom, found.root))
            verification.update(flags)
            traces["contraction"] = trace
            result["triviality"] = triviality
        if all(h == rg.context.group for h in rg.points.values()):
            k_points = sha_k_points_report(rg, table, custom)
            result["power"] = str(k_points.power)
            verification.update(k_points.flags)
        logger.info(f"sha = {value}")
        return Outcome(result, verification, traces)

    @staticmethod
    def _topological(rg: ReductionGraph, table: CohomologyTable) -> str | None:
        try:
            return str(topological_h1(rg.graph, table.group(rg.context.group)))
        except MissingDataError:
            return None

    def sha_p1(self, rg: ReductionGraph, payload: ReductionInput) -> Outcome:
        table = payload.build_table(rg.context)
        report = sha_all_p1_report(rg, table)
        first, second = report.six_terms
        verification: dict[str, bool | None] = {name: report.flags[name] for name in SHAP1_REQUIRED}
        verification["first_sequence_exact"] = first.is_exact
        verification["second_sequence_exact"] = second.is_exact
        return Outcome(
            result={
                "left": str(report.left),
                "middle": str(report.middle),
                "right": str(report.right),
                "left_map": report.left_map.matrix.to_lists(),
                "right_map": report.right_map.matrix.to_lists(),
                "properties": {k: v for k, v in report.flags.items() if k not in SHAP1_REQUIRED},
                "six_terms": [_spots(first.invariants), _spots(second.invariants)],
            },
            verification=verification,
        )


def _spots(values: tuple[InvariantFactors, ...]) -> dict[str, str]:
    return dict(zip(SPOTS, (str(v) for v in values), strict=True))


__all__ = ["ReductionService"]
