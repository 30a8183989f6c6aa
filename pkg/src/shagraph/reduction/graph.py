"""Reduction graphs: points and components of a closed fiber joined by branches.

A vertex label is a subgroup ``H`` of the context group; it stands for the
fixed field of ``H``, so a larger field has a smaller label.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property
from typing import TYPE_CHECKING

from shagraph.decograph.graph import Graph, HalfEdge
from shagraph.exceptions import MismatchError, PreconditionError
from shagraph.glattice.groups import FiniteGroup, Subgroup

if TYPE_CHECKING:
    from shagraph.reduction.table import CustomComponentData


class ComponentKind(StrEnum):
    RATIONAL = "rational"
    CUSTOM = "custom"


@dataclass(frozen=True)
class GaloisContext:
    """Galois group of a splitting extension, as a subgroup of an ambient permutation group.

    After base change the context group shrinks to a normal subgroup while
    labels stay subgroups of the same ambient group.
    """

    ambient: FiniteGroup
    group: Subgroup

    def __post_init__(self) -> None:
        if self.group.parent != self.ambient:
            raise MismatchError("context group is not a subgroup of the ambient group")

    @classmethod
    def of(cls, group: FiniteGroup) -> GaloisContext:
        return cls(group, group.whole)

    def owns(self, label: Subgroup) -> bool:
        return label.parent == self.ambient and label <= self.group

    def conjugate_into(self, small: Subgroup, big: Subgroup) -> int | None:
        """Least context element ``c`` with ``c small c^-1`` inside ``big``, or ``None``."""
        if small <= big:
            return self.ambient.identity
        for c in self.group.sorted_elements():
            if small.conjugate(c) <= big:
                return c
        return None

    def contained(self, small: Subgroup, big: Subgroup) -> bool:
        """``small`` lies in ``big`` up to conjugation in the context group."""
        return self.conjugate_into(small, big) is not None

    def same_label(self, a: Subgroup, b: Subgroup) -> bool:
        return a.order == b.order and self.contained(a, b)


def edge_id(component: str, point: str) -> str:
    return f"({component},{point})"


@dataclass(frozen=True)
class ReductionGraph:
    """Bipartite graph of points and components with field labels.

    Parameters
    ----------
    context : GaloisContext
        Group whose subgroups label the vertices
    points : Mapping[str, Subgroup]
        Label ``H_P`` of every point
    components : Mapping[str, Subgroup]
        Label ``H_U`` of every component
    kinds : Mapping[str, ComponentKind]
        Whether each component is a rational curve over its constant field
    branches : tuple[tuple[str, str], ...]
        ``(component, point)`` pairs, one per branch of a component through a point

    Raises
    ------
    PreconditionError
        If ids clash, a label is foreign, a branch is repeated or unknown, a
        point lies on more than two branches, ``H_P`` is not contained in
        ``H_U`` (up to conjugation in the context group), or the graph is disconnected
    """

    context: GaloisContext
    points: Mapping[str, Subgroup] = field(hash=False)
    components: Mapping[str, Subgroup] = field(hash=False)
    kinds: Mapping[str, ComponentKind] = field(hash=False)
    branches: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "branches", tuple(sorted(self.branches)))
        clash = set(self.points) & set(self.components)
        if clash:
            raise PreconditionError(f"ids used for both points and components: {sorted(clash)}")
        if not self.components and not self.points:
            raise PreconditionError("reduction graph has no vertices")
        if set(self.kinds) != set(self.components):
            raise PreconditionError("every component needs a kind")
        for v, label in {**self.points, **self.components}.items():
            if not self.context.owns(label):
                raise PreconditionError(f"label of {v} is not a subgroup of the context group")
        if len(set(self.branches)) != len(self.branches):
            raise PreconditionError("repeated branch")
        for u, p in self.branches:
            if u not in self.components or p not in self.points:
                raise PreconditionError(f"branch ({u},{p}) must join a component to a point")
            if not self.context.contained(self.points[p], self.components[u]):
                raise PreconditionError(
                    f"label of point {p} is not contained in the label of component {u}",
                    {"component": u, "point": p},
                )
        for p in self.points:
            if len(self.components_at(p)) > 2:  # noqa: PLR2004
                raise PreconditionError(f"point {p} lies on more than two branches")
        if not self.graph.is_connected():
            raise PreconditionError("reduction graph is not connected")

    @cached_property
    def graph(self) -> Graph:
        """Underlying graph; the edge of branch ``(U, P)`` has ``U`` at end 0 and ``P`` at end 1."""
        return Graph(
            tuple(self.points) + tuple(self.components),
            {edge_id(u, p): (u, p) for u, p in self.branches},
        )

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.graph.vertices

    def label(self, v: str) -> Subgroup:
        if v in self.points:
            return self.points[v]
        if v in self.components:
            return self.components[v]
        raise MismatchError(f"unknown vertex {v}")

    def is_point(self, v: str) -> bool:
        return v in self.points

    def components_at(self, point: str) -> tuple[str, ...]:
        return tuple(u for u, p in self.branches if p == point)

    def points_on(self, component: str) -> tuple[str, ...]:
        return tuple(p for u, p in self.branches if u == component)

    def point_half(self, component: str, point: str) -> HalfEdge:
        return HalfEdge(edge_id(component, point), 1)

    def component_half(self, component: str, point: str) -> HalfEdge:
        return HalfEdge(edge_id(component, point), 0)

    @property
    def all_rational(self) -> bool:
        return all(kind is ComponentKind.RATIONAL for kind in self.kinds.values())

    @classmethod
    def from_dual_graph(
        cls,
        context: GaloisContext,
        components: Mapping[str, tuple[Subgroup, ComponentKind]],
        intersections: Mapping[str, tuple[Subgroup, str, str]],
        extra_points: Mapping[str, tuple[Subgroup, str]] | None = None,
    ) -> ReductionGraph:
        """Barycentric subdivision of a dual graph.

        ``intersections`` maps a point id to its label and the two components
        meeting there; ``extra_points`` adds points lying on a single component.
        """
        points = {p: label for p, (label, _, _) in intersections.items()}
        branches: list[tuple[str, str]] = []
        for p, (_, u1, u2) in intersections.items():
            if u1 == u2:
                raise PreconditionError(f"intersection point {p} must join two distinct components")
            branches.extend([(u1, p), (u2, p)])
        for p, (label, u) in (extra_points or {}).items():
            points[p] = label
            branches.append((u, p))
        return cls(
            context,
            points,
            {u: label for u, (label, _) in components.items()},
            {u: kind for u, (_, kind) in components.items()},
            tuple(branches),
        )


def nodal_points(rg: ReductionGraph) -> tuple[str, ...]:
    """Points lying on two branches."""
    return tuple(p for p in sorted(rg.points) if len(rg.components_at(p)) == 2)  # noqa: PLR2004


def nodal_subgraph(rg: ReductionGraph) -> Graph:
    """Induced subgraph on the nodal points and all components."""
    keep = set(nodal_points(rg))
    return rg.graph.without(vertices=(p for p in rg.points if p not in keep))


def subdivide_branch(
    rg: ReductionGraph,
    point: str,
    component: str,
    custom: Mapping[str, CustomComponentData] | None = None,
) -> tuple[ReductionGraph, dict[str, CustomComponentData]]:
    """Blow up ``point`` on the branch of ``component``.

    The branch ``(U, P)`` is replaced by ``U - P' - E - P`` where ``E`` is a new
    rational component and ``P'`` a new point, both labeled ``H_P``. Custom data
    for ``U`` is returned with its specialization at ``P`` moved to ``P'``.
    """
    if (component, point) not in rg.branches:
        raise PreconditionError(f"no branch ({component},{point})")
    new_point = f"{point}~{component}"
    exceptional = f"E[{component},{point}]"
    label = rg.points[point]
    branches: list[tuple[str, str]] = [b for b in rg.branches if b != (component, point)]
    branches.extend([(component, new_point), (exceptional, new_point), (exceptional, point)])
    refined = ReductionGraph(
        rg.context,
        {**rg.points, new_point: label},
        {**rg.components, exceptional: label},
        {**rg.kinds, exceptional: ComponentKind.RATIONAL},
        tuple(branches),
    )
    data = dict(custom or {})
    if component in data:
        data[component] = data[component].with_point(point, new_point)
    return refined, data

