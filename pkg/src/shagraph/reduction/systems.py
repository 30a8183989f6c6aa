"""Coefficient systems of a reduction graph and the pipelines computing Sha from them."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from shagraph import logger
from shagraph.abelian.groups import InvariantFactors, PresentedGroup, direct_sum
from shagraph.abelian.homs import (
    GroupHom,
    cokernel,
    identity,
    is_exact,
    is_injective,
    is_isomorphism,
    is_surjective,
)
from shagraph.decograph.complex import h1, induced_maps, topological_h1
from shagraph.decograph.contraction import ContractionResult, contract_to_point
from shagraph.decograph.graph import HalfEdge, is_tree
from shagraph.decograph.sequence import ShortExactSequence, SixTermResult, six_term
from shagraph.decograph.system import (
    CoefficientSystem,
    SystemMorphism,
    cokernel_system,
    constant_system,
    image_factorization,
    kernel_system,
)
from shagraph.exceptions import MissingDataError, PreconditionError, VerificationError
from shagraph.reduction.graph import ComponentKind, ReductionGraph, nodal_points
from shagraph.reduction.monotonic import is_monotonic
from shagraph.reduction.table import CohomologyTable, CustomComponentData


def _point_side(rg: ReductionGraph, t: CohomologyTable) -> tuple[dict[str, PresentedGroup], dict[HalfEdge, GroupHom]]:
    groups = {p: t.group(h) for p, h in rg.points.items()}
    maps = {rg.point_half(u, p): identity(groups[p]) for u, p in rg.branches}
    return groups, maps


def _edge_groups(rg: ReductionGraph, t: CohomologyTable) -> dict[str, PresentedGroup]:
    return {rg.point_half(u, p).edge: t.group(rg.points[p]) for u, p in rg.branches}


def _rational_side(
    rg: ReductionGraph, t: CohomologyTable, u: str
) -> tuple[PresentedGroup, dict[HalfEdge, GroupHom]]:
    label = rg.components[u]
    maps = {rg.component_half(u, p): t.restriction(label, rg.points[p]) for p in rg.points_on(u)}
    return t.group(label), maps


def build_hk_system(
    rg: ReductionGraph, t: CohomologyTable, custom: Mapping[str, CustomComponentData] | None = None
) -> CoefficientSystem:
    """System with ``A_{H_P}`` on points and branches and ``H^1`` of the function field on components.

    Rational components use the table group of their label with restriction
    maps; custom components use their supplied group and specializations.

    Raises
    ------
    MissingDataError
        If a custom component has no data or the table lacks an entry
    """
    custom = custom or {}
    vertex_groups, maps = _point_side(rg, t)
    for u, kind in rg.kinds.items():
        if kind is ComponentKind.RATIONAL:
            vertex_groups[u], side = _rational_side(rg, t, u)
            maps.update(side)
            continue
        if u not in custom:
            raise MissingDataError(f"custom component {u} has no data", {"component": u})
        data = custom[u]
        data.validate(rg, u, t)
        vertex_groups[u] = data.group
        maps.update({rg.component_half(u, p): data.specializations[p] for p in rg.points_on(u)})
    return CoefficientSystem(rg.graph, vertex_groups, _edge_groups(rg, t), maps)


def build_hkappa_system(rg: ReductionGraph, t: CohomologyTable) -> CoefficientSystem:
    """System with table groups on every vertex, custom components treated like rational ones."""
    vertex_groups, maps = _point_side(rg, t)
    for u in rg.components:
        vertex_groups[u], side = _rational_side(rg, t, u)
        maps.update(side)
    return CoefficientSystem(rg.graph, vertex_groups, _edge_groups(rg, t), maps)


def sha(
    rg: ReductionGraph, t: CohomologyTable, custom: Mapping[str, CustomComponentData] | None = None
) -> InvariantFactors:
    """``H^1`` of :func:`build_hk_system`."""
    system = build_hk_system(rg, t, custom)
    value = h1(rg.graph, system)
    logger.debug("sha on %d points, %d components: %s", len(rg.points), len(rg.components), value)
    return value


@dataclass(frozen=True)
class PhiReport:
    """Comparison map from the residue-field system to the function-field system.

    ``available`` is false when a custom component has no generic restriction;
    the remaining fields are then ``None``.
    """

    available: bool
    h1_kappa: InvariantFactors | None = None
    h1_k: InvariantFactors | None = None
    surjective: bool | None = None
    isomorphism: bool | None = None
    missing: tuple[str, ...] = ()


def phi_morphism(
    rg: ReductionGraph, t: CohomologyTable, custom: Mapping[str, CustomComponentData] | None = None
) -> SystemMorphism:
    """Identity on points and branches, generic restriction on custom components."""
    custom = custom or {}
    source = build_hkappa_system(rg, t)
    target = build_hk_system(rg, t, custom)
    vertex_maps: dict[str, GroupHom] = {p: identity(source.vertex_groups[p]) for p in rg.points}
    for u, kind in rg.kinds.items():
        if kind is ComponentKind.RATIONAL:
            vertex_maps[u] = identity(source.vertex_groups[u])
            continue
        generic = custom[u].generic
        if generic is None:
            raise MissingDataError(f"custom component {u} has no generic restriction", {"component": u})
        vertex_maps[u] = generic
    edge_maps = {e: identity(grp) for e, grp in source.edge_groups.items()}
    return SystemMorphism(source, target, vertex_maps, edge_maps)


def phi_surjection(
    rg: ReductionGraph, t: CohomologyTable, custom: Mapping[str, CustomComponentData] | None = None
) -> PhiReport:
    """Verify that ``H^1(kappa system) -> H^1(k system)`` is onto.

    Raises
    ------
    VerificationError
        If the map is not surjective, or not an isomorphism on an all-rational graph
    """
    custom = custom or {}
    missing = tuple(
        u for u, kind in rg.kinds.items() if kind is ComponentKind.CUSTOM and (u not in custom or custom[u].generic is None)
    )
    if missing:
        logger.info("phi unavailable: no generic restriction for %s", ", ".join(missing))
        return PhiReport(False, missing=missing)
    phi = phi_morphism(rg, t, custom)
    _, on_h1 = induced_maps(phi)
    report = PhiReport(
        True,
        on_h1.domain.invariants,
        on_h1.codomain.invariants,
        is_surjective(on_h1),
        is_isomorphism(on_h1),
    )
    if not report.surjective:
        raise VerificationError("phi is not surjective", partial={"h1_kappa": str(report.h1_kappa)})
    if rg.all_rational and not report.isomorphism:
        raise VerificationError("phi is not an isomorphism on an all-rational graph")
    return report


@dataclass(frozen=True)
class ShaP1Sequences:
    """``0 -> A' -> A -> A'' -> 0`` and ``0 -> A'' -> H_k -> C -> 0`` for an all-rational graph."""

    constant: CoefficientSystem
    comparison: SystemMorphism
    first: ShortExactSequence
    second: ShortExactSequence


def _require_p1_graph(rg: ReductionGraph) -> None:
    if not rg.all_rational:
        raise PreconditionError("every component must be rational")
    whole = rg.context.group
    off = [u for u, h in rg.components.items() if h != whole]
    if off:
        raise PreconditionError(f"components {off} are not labeled by the whole context group")


def shap1_sequences(rg: ReductionGraph, t: CohomologyTable) -> ShaP1Sequences:
    """Split the comparison ``A_G (constant) -> H_k`` into kernel, image and cokernel sequences."""
    _require_p1_graph(rg)
    whole = rg.context.group
    a_g = t.group(whole)
    constant = constant_system(rg.graph, a_g)
    target = build_hk_system(rg, t)
    vertex_maps = {
        v: identity(a_g) if v in rg.components else t.restriction(whole, rg.points[v]) for v in rg.vertices
    }
    edge_maps = {edge: t.restriction(whole, rg.points[p]) for edge, (_, p) in rg.graph.incidence.items()}
    comparison = SystemMorphism(constant, target, vertex_maps, edge_maps)
    onto, into = image_factorization(comparison)
    first = ShortExactSequence(kernel_system(onto), onto)
    second = ShortExactSequence(into, cokernel_system(into))
    return ShaP1Sequences(constant, comparison, first, second)


@dataclass(frozen=True)
class ShaP1Report:
    """``H^1(A) -> Sha -> H^1(C) -> 0`` with checks.

    ``right_matches_product`` compares ``H^1(C)`` with the sum over nodal points
    of ``A_{H_P} / im A_G``.
    """

    left: InvariantFactors
    middle: InvariantFactors
    right: InvariantFactors
    left_map: GroupHom = field(repr=False)
    right_map: GroupHom = field(repr=False)
    flags: dict[str, bool]
    six_terms: tuple[SixTermResult, SixTermResult] = field(repr=False)


def sha_all_p1_report(rg: ReductionGraph, t: CohomologyTable) -> ShaP1Report:
    """Exact sequence for a closed fiber made of projective lines over the base field.

    Raises
    ------
    PreconditionError
        If some component is custom or not labeled by the whole context group
    VerificationError
        If surjectivity onto the right term or exactness in the middle fails
    """
    seqs = shap1_sequences(rg, t)
    _, left_map = induced_maps(seqs.comparison)
    _, right_map = induced_maps(seqs.second.second)
    whole = rg.context.group
    quotients = [cokernel(t.restriction(whole, rg.points[p])) for p in nodal_points(rg)]
    product_value = direct_sum(quotients).invariants
    left = left_map.domain.invariants
    flags = {
        "surjective_right": is_surjective(right_map),
        "exact_middle": is_exact(left_map, right_map),
        "short_exact": is_injective(left_map),
        "left_is_topological": left == topological_h1(rg.graph, t.group(whole)),
        "right_matches_product": right_map.codomain.invariants == product_value,
    }
    report = ShaP1Report(
        left,
        left_map.codomain.invariants,
        right_map.codomain.invariants,
        left_map,
        right_map,
        flags,
        (six_term(seqs.first), six_term(seqs.second)),
    )
    required = ("surjective_right", "exact_middle", "left_is_topological")
    failed = [name for name in required if not flags[name]]
    if failed:
        raise VerificationError(
            "sha exact sequence failed its checks",
            {"failed": failed},
            {"left": str(report.left), "middle": str(report.middle), "right": str(report.right)},
        )
    return report


@dataclass(frozen=True)
class KPointsReport:
    """Sha against ``A_G^m`` when every point has the base field as residue field."""

    sha: InvariantFactors
    power: InvariantFactors
    flags: dict[str, bool | None]


def sha_k_points_report(
    rg: ReductionGraph, t: CohomologyTable, custom: Mapping[str, CustomComponentData] | None = None
) -> KPointsReport:
    """Check Sha is a quotient of ``A_G^m``, vanishes on trees, and equals ``A_G^m`` when all components are rational.

    The quotient check needs generic restrictions for custom components; it is
    ``None`` when they are missing.

    Raises
    ------
    PreconditionError
        If some point is not labeled by the whole context group
    VerificationError
        If an applicable check fails
    """
    whole = rg.context.group
    off = [p for p, h in rg.points.items() if h != whole]
    if off:
        raise PreconditionError(f"points {off} are not labeled by the whole context group")
    value = sha(rg, t, custom)
    power = topological_h1(rg.graph, t.group(whole))
    phi = phi_surjection(rg, t, custom)
    flags: dict[str, bool | None] = {
        "quotient_of_power": (phi.surjective and phi.h1_kappa == power) if phi.available else None,
        "trivial_on_tree": value.is_trivial if is_tree(rg.graph) else None,
        "equals_power_when_rational": value == power if rg.all_rational else None,
    }
    failed = [name for name, ok in flags.items() if ok is False]
    if failed:
        raise VerificationError("k-point checks failed", {"failed": failed}, {"sha": str(value)})
    return KPointsReport(value, power, flags)


@dataclass(frozen=True)
class TrivialityReport:
    root: str
    contraction: ContractionResult = field(repr=False)
    h1_kappa: InvariantFactors
    sha: InvariantFactors | None


def monotonic_implies_trivial(
    rg: ReductionGraph,
    t: CohomologyTable,
    custom: Mapping[str, CustomComponentData] | None = None,
    root: str | None = None,
) -> TrivialityReport:
    """Contract the residue-field system of a monotonic tree to its root and confirm Sha vanishes.

    Sha itself is computed only when every custom component has data.

    Raises
    ------
    PreconditionError
        If the graph is not monotonic
    VerificationError
        If the contraction fails or a cohomology group is nonzero
    """
    result = is_monotonic(rg)
    if not result.monotonic:
        raise PreconditionError("reduction graph is not a monotonic tree", {"witness": result.witness})
    chosen = root if root is not None else result.root
    assert chosen is not None
    system = build_hkappa_system(rg, t)
    contraction = contract_to_point(rg.graph, system, chosen)
    if not contraction.success:
        raise VerificationError(
            "monotonic tree did not contract to a point",
            {"root": chosen, "edge": contraction.failed_edge},
        )
    kappa = h1(rg.graph, system)
    customs = [u for u, k in rg.kinds.items() if k is ComponentKind.CUSTOM]
    value = sha(rg, t, custom) if all(u in (custom or {}) for u in customs) else None
    if not kappa.is_trivial or (value is not None and not value.is_trivial):
        raise VerificationError("monotonic tree has nonzero cohomology", {"root": chosen})
    return TrivialityReport(chosen, contraction, kappa, value)
