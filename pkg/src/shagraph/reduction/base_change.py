"""Base change of a reduction graph along a Galois subextension."""

from __future__ import annotations

from shagraph import logger
from shagraph.decograph.graph import Graph
from shagraph.exceptions import MismatchError, PreconditionError, VerificationError
from shagraph.glattice.groups import Subgroup
from shagraph.reduction.graph import GaloisContext, ReductionGraph, edge_id


def double_cosets(n: Subgroup, group: Subgroup, h: Subgroup) -> tuple[frozenset[int], ...]:
    """``N \\ G / H`` inside ``group``, ordered by least element."""
    grp = group.parent
    cosets: list[frozenset[int]] = []
    covered: set[int] = set()
    for g in group.sorted_elements():
        if g in covered:
            continue
        coset = frozenset(grp.mul(grp.mul(a, g), b) for a in n.elements for b in h.elements)
        cosets.append(coset)
        covered |= coset
    return tuple(cosets)


def base_change(rg: ReductionGraph, n: Subgroup) -> ReductionGraph:
    """Reduction graph over the fixed field of the normal subgroup ``n``.

    Vertices over ``v`` are the double cosets ``N g H_v`` (ids ``v@k`` in order
    of least element); the branch ``(U, P)`` contributes one branch per double
    coset of ``H_P``, joining it to the component over ``U`` containing it. The
    label over ``v`` is ``N`` meet ``g H_v g^-1`` for the least ``g`` of the
    double coset, and the new context group is ``N``.

    Raises
    ------
    PreconditionError
        If ``n`` is not a normal subgroup of the context group
    VerificationError
        If the result is disconnected
    """
    ctx = rg.context
    if n.parent != ctx.ambient:
        raise MismatchError("subgroup belongs to a different ambient group")
    if not n <= ctx.group or not n.is_normal_in(ctx.group):
        raise PreconditionError("base change needs a normal subgroup of the context group")
    def over(label: Subgroup) -> tuple[tuple[frozenset[int], ...], list[Subgroup]]:
        cosets = double_cosets(n, ctx.group, label)
        labels = [n.intersection(label.conjugate(min(c))) for c in cosets]
        return cosets, labels

    points: dict[str, Subgroup] = {}
    point_cosets: dict[str, tuple[frozenset[int], ...]] = {}
    for p, label in rg.points.items():
        cosets, labels = over(label)
        point_cosets[p] = cosets
        points.update({f"{p}@{k}": lab for k, lab in enumerate(labels)})
    components: dict[str, Subgroup] = {}
    component_cosets: dict[str, tuple[frozenset[int], ...]] = {}
    kinds = {}
    for u, label in rg.components.items():
        cosets, labels = over(label)
        component_cosets[u] = cosets
        for k, lab in enumerate(labels):
            components[f"{u}@{k}"] = lab
            kinds[f"{u}@{k}"] = rg.kinds[u]
    branches: list[tuple[str, str]] = []
    for u, p in rg.branches:
        for k, coset in enumerate(point_cosets[p]):
            g = min(coset)
            j = next(i for i, c in enumerate(component_cosets[u]) if g in c)
            branches.append((f"{u}@{j}", f"{p}@{k}"))
    incidence = {edge_id(u, p): (u, p) for u, p in branches}
    if not Graph(tuple(points) + tuple(components), incidence).is_connected():
        raise VerificationError(
            "base change produced a disconnected graph",
            {"vertices": len(points) + len(components), "branches": len(branches)},
        )
    logger.debug(
        "base change to a subgroup of order %d: %d points, %d components, %d branches",
        n.order,
        len(points),
        len(components),
        len(branches),
    )
    return ReductionGraph(GaloisContext(ctx.ambient, n), points, components, kinds, tuple(branches))
