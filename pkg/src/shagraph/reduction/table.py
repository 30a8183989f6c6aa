"""Arithmetic input of the reduction pipelines.

A :class:`CohomologyTable` assigns to a label ``H`` a group ``A_H`` standing for
``H^1`` of the fixed field of ``H`` with coefficients in a flasque torus, and to
an inclusion ``H' <= H`` the restriction ``A_H -> A_H'``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field, replace
from itertools import product
from typing import TYPE_CHECKING

from shagraph.abelian.groups import PresentedGroup
from shagraph.abelian.homs import GroupHom, compose, equals, identity
from shagraph.exceptions import MismatchError, MissingDataError, PreconditionError
from shagraph.glattice.groups import FiniteGroup, Subgroup

if TYPE_CHECKING:
    from shagraph.reduction.graph import ReductionGraph

Pair = tuple[Subgroup, Subgroup]


@dataclass(frozen=True)
class CohomologyTable:
    """Groups per label and restriction maps per label inclusion.

    Conjugate labels must carry identical presentations; lookups of a label
    missing from the table fall back to a conjugate one.

    Parameters
    ----------
    ambient : FiniteGroup
        Group whose subgroups are the labels
    groups : Mapping[Subgroup, PresentedGroup]
        ``A_H`` per label
    restrictions : Mapping[tuple[Subgroup, Subgroup], GroupHom]
        ``(H, H')`` with ``H' <= H`` to ``A_H -> A_H'``

    Raises
    ------
    PreconditionError
        On foreign labels, non-inclusions, conjugate labels with different
        groups, a non-identity map on equal labels, or an incompatible chain
    """

    ambient: FiniteGroup
    groups: Mapping[Subgroup, PresentedGroup] = field(hash=False)
    restrictions: Mapping[Pair, GroupHom] = field(default_factory=dict, hash=False)

    def __post_init__(self) -> None:
        for h in self.groups:
            if h.parent != self.ambient:
                raise PreconditionError(f"table label {h} is not a subgroup of the ambient group")
        for a, b in product(self.groups, repeat=2):
            if a != b and a.order == b.order and self._conjugator(a, b) is not None and self.groups[a] != self.groups[b]:
                raise PreconditionError(f"conjugate labels {a} and {b} carry different groups")
        for (big, small), hom in self.restrictions.items():
            if not small <= big:
                raise PreconditionError(f"restriction from {big} to {small} which is not a subgroup")
            if big not in self.groups or small not in self.groups:
                raise MissingDataError(f"restriction from {big} to {small} needs both groups in the table")
            if hom.domain != self.groups[big] or hom.codomain != self.groups[small]:
                raise MismatchError(f"restriction from {big} to {small} has the wrong domain or codomain")
            if big == small and not equals(hom, identity(hom.domain)):
                raise PreconditionError(f"restriction on the equal labels {big} is not the identity")
        broken = self.chain_violations()
        if broken:
            big, mid, small = broken[0]
            raise PreconditionError(
                "restrictions are not compatible along a chain of labels",
                {"chain": [str(big), str(mid), str(small)]},
            )

    def _conjugator(self, a: Subgroup, b: Subgroup) -> int | None:
        return next((g for g in range(self.ambient.order) if a.conjugate(g) == b), None)

    def chain_violations(self) -> list[tuple[Subgroup, Subgroup, Subgroup]]:
        """Chains ``H'' <= H' <= H`` whose three restrictions are all given and do not commute."""
        out = []
        for (big, mid), first in self.restrictions.items():
            for (mid2, small), second in self.restrictions.items():
                if mid2 != mid or big == mid or mid == small:
                    continue
                direct = self.restrictions.get((big, small))
                if direct is not None and not equals(compose(second, first), direct):
                    out.append((big, mid, small))
        return out

    def group(self, h: Subgroup) -> PresentedGroup:
        """``A_H``; falls back to a conjugate label."""
        if h in self.groups:
            return self.groups[h]
        for label, grp in self.groups.items():
            if label.order == h.order and self._conjugator(h, label) is not None:
                return grp
        raise MissingDataError(f"no table group for label {h}", {"label": h.permutations()})

    def restriction(self, big: Subgroup, small: Subgroup) -> GroupHom:
        """``A_big -> A_small``.

        Lookup order: identity on equal labels, a direct entry, an entry for a
        simultaneously conjugated pair, then an entry whose two labels are
        separately conjugate to ``big`` and ``small``.
        """
        if big == small:
            return identity(self.group(big))
        if (big, small) in self.restrictions:
            return self.restrictions[(big, small)]
        for g in range(self.ambient.order):
            key = (big.conjugate(g), small.conjugate(g))
            if key in self.restrictions:
                return self.restrictions[key]
        for (b, s), hom in self.restrictions.items():
            if b.order == big.order and s.order == small.order:
                if self._conjugator(big, b) is not None and self._conjugator(small, s) is not None:
                    return hom
        if big.order == small.order and self._conjugator(small, big) is not None:
            return identity(self.group(big))
        raise MissingDataError(
            f"no restriction from {big} to {small}",
            {"from": big.permutations(), "to": small.permutations()},
        )


@dataclass(frozen=True)
class CustomComponentData:
    """Data of a component that is not a rational curve over its constant field.

    Parameters
    ----------
    group : PresentedGroup
        ``A_V``, standing for ``H^1`` of the function field of the component
    specializations : Mapping[str, GroupHom]
        Point id to ``A_V -> A_{H_P}``, one per branch of the component
    generic : GroupHom | None
        Optional ``A_{H_U} -> A_V`` commuting with restrictions and specializations
    """

    group: PresentedGroup
    specializations: Mapping[str, GroupHom] = field(hash=False)
    generic: GroupHom | None = None

    def with_point(self, old: str, new: str) -> CustomComponentData:
        """Same data with the specialization at ``old`` moved to ``new``."""
        specs = {(new if p == old else p): hom for p, hom in self.specializations.items()}
        return replace(self, specializations=specs)

    def validate(self, rg: ReductionGraph, component: str, table: CohomologyTable) -> None:
        """Check shapes against the graph and the table, and commutation of ``generic``.

        Raises
        ------
        MissingDataError
            If a branch has no specialization
        MismatchError
            On wrong domains or codomains, or when ``generic`` does not commute
        """
        expected = set(rg.points_on(component))
        if set(self.specializations) != expected:
            raise MissingDataError(
                f"custom component {component} needs specializations exactly at {sorted(expected)}",
                {"component": component},
            )
        for p, hom in self.specializations.items():
            if hom.domain != self.group or hom.codomain != table.group(rg.points[p]):
                raise MismatchError(f"specialization of {component} at {p} has the wrong domain or codomain")
        if self.generic is None:
            return
        label = rg.components[component]
        if self.generic.domain != table.group(label) or self.generic.codomain != self.group:
            raise MismatchError(f"generic restriction of {component} has the wrong domain or codomain")
        for p, hom in self.specializations.items():
            if not equals(compose(hom, self.generic), table.restriction(label, rg.points[p])):
                raise MismatchError(
                    f"generic restriction of {component} does not commute at {p}",
                    {"component": component, "point": p},
                )
