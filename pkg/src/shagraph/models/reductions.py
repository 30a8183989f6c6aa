"""Descriptors for reduction graphs with their cohomology table and custom component data.

Labels are referenced by name (``labels`` entries, ``"G"`` for the whole
ambient group, ``"1"`` for the trivial subgroup) or given inline as generator lists.
Table restrictions are keyed ``"big->small"`` by label name.
"""

from typing import Literal, Self

from pydantic import Field, model_validator

from shagraph.abelian.groups import PresentedGroup
from shagraph.abelian.homs import GroupHom
from shagraph.exceptions import SchemaError
from shagraph.glattice.groups import FiniteGroup, Subgroup
from shagraph.models.algebra import GroupSpec, MatrixRows, build_group, build_hom
from shagraph.models.base import ShagraphBaseModel
from shagraph.models.lattices import Generators, PermutationGroupSpec, build_subgroup
from shagraph.reduction.graph import ComponentKind, GaloisContext, ReductionGraph
from shagraph.reduction.table import CohomologyTable, CustomComponentData

WHOLE = "G"
TRIVIAL = "1"
RESERVED = frozenset({WHOLE, TRIVIAL})

LabelRef = str | Generators


class PointSpec(ShagraphBaseModel):
    id: str = Field(min_length=1)
    label: LabelRef


class ComponentSpec(ShagraphBaseModel):
    id: str = Field(min_length=1)
    label: LabelRef
    kind: Literal["rational", "custom"] = "rational"


class BranchSpec(ShagraphBaseModel):
    point: str
    component: str


class TableSpec(ShagraphBaseModel):
    """``A_H`` per label name and restriction matrices per ``"big->small"`` key."""

    groups: dict[str, GroupSpec]
    restrictions: dict[str, MatrixRows] = Field(default_factory=dict)


class CustomSpec(ShagraphBaseModel):
    """Group of a custom component, its specialization matrices per point, and the optional generic restriction."""

    group: GroupSpec
    specializations: dict[str, MatrixRows]
    generic: MatrixRows | None = None


class ReductionDescriptor(ShagraphBaseModel):
    """Reduction graph, cohomology table and custom component data.

    ``context`` is the ambient permutation group; ``galois`` optionally names
    generators of the context group inside it (after a base change).
    """

    context: PermutationGroupSpec
    galois: Generators | None = None
    labels: dict[str, Generators] = Field(default_factory=dict)
    points: list[PointSpec] = Field(default_factory=list)
    components: list[ComponentSpec]
    branches: list[BranchSpec] = Field(default_factory=list)
    table: TableSpec | None = None
    custom: dict[str, CustomSpec] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _names(self) -> Self:
        reserved = RESERVED & set(self.labels)
        if reserved:
            raise ValueError(f"label names {sorted(reserved)} are reserved")
        ids = [p.id for p in self.points] + [c.id for c in self.components]
        if len(set(ids)) != len(ids):
            raise ValueError("repeated vertex id")
        return self

    # === Building ===

    def ambient(self) -> FiniteGroup:
        return self.context.build()

    def galois_context(self, ambient: FiniteGroup) -> GaloisContext:
        if self.galois is None:
            return GaloisContext.of(ambient)
        return GaloisContext(ambient, build_subgroup(ambient, self.galois))

    def resolve(self, ref: LabelRef, context: GaloisContext) -> Subgroup:
        """Subgroup named or generated by ``ref``."""
        if not isinstance(ref, str):
            return build_subgroup(context.ambient, ref)
        if ref == WHOLE:
            return context.ambient.whole
        if ref == TRIVIAL:
            return context.ambient.trivial_subgroup
        if ref not in self.labels:
            raise SchemaError(f"unknown label {ref!r}", {"label": ref})
        return build_subgroup(context.ambient, self.labels[ref])

    def build_graph(self) -> ReductionGraph:
        context = self.galois_context(self.ambient())
        return ReductionGraph(
            context,
            {p.id: self.resolve(p.label, context) for p in self.points},
            {c.id: self.resolve(c.label, context) for c in self.components},
            {c.id: ComponentKind(c.kind) for c in self.components},
            tuple((b.component, b.point) for b in self.branches),
        )

    def build_table(self, context: GaloisContext) -> CohomologyTable:
        """Cohomology table; label names resolve against ``context``.

        Raises
        ------
        SchemaError
            If the table is missing, a key does not parse, or two names for one
            subgroup carry different groups
        """
        if self.table is None:
            raise SchemaError("this command needs a cohomology table")
        groups: dict[Subgroup, PresentedGroup] = {}
        for name, spec in self.table.groups.items():
            label = self.resolve(name, context)
            grp = build_group(spec)
            if label in groups and groups[label] != grp:
                raise SchemaError(f"label {name!r} repeats a subgroup with a different group", {"label": name})
            groups[label] = grp
        restrictions: dict[tuple[Subgroup, Subgroup], GroupHom] = {}
        for key, rows in self.table.restrictions.items():
            big_name, sep, small_name = key.partition("->")
            if not sep:
                raise SchemaError(f"restriction key {key!r} is not of the form big->small", {"key": key})
            big = self.resolve(big_name.strip(), context)
            small = self.resolve(small_name.strip(), context)
            if big not in groups or small not in groups:
                raise SchemaError(f"restriction {key!r} needs both groups in the table", {"key": key})
            restrictions[(big, small)] = build_hom(rows, groups[big], groups[small], f"restriction {key}")
        return CohomologyTable(context.ambient, groups, restrictions)

    def build_custom(self, rg: ReductionGraph, table: CohomologyTable) -> dict[str, CustomComponentData]:
        data: dict[str, CustomComponentData] = {}
        for u, spec in self.custom.items():
            if u not in rg.components:
                raise SchemaError(f"custom data for unknown component {u!r}", {"component": u})
            group = build_group(spec.group)
            specs = {}
            for p, rows in spec.specializations.items():
                if p not in rg.points:
                    raise SchemaError(f"specialization of {u!r} at unknown point {p!r}", {"point": p})
                specs[p] = build_hom(rows, group, table.group(rg.points[p]), f"specialization of {u} at {p}")
            generic = None
            if spec.generic is not None:
                generic = build_hom(spec.generic, table.group(rg.components[u]), group, f"generic restriction of {u}")
            data[u] = CustomComponentData(group, specs, generic)
        return data

    def build(self) -> tuple[ReductionGraph, CohomologyTable, dict[str, CustomComponentData]]:
        rg = self.build_graph()
        table = self.build_table(rg.context)
        return rg, table, self.build_custom(rg, table)

    # === Serialization ===

    @classmethod
    def from_graph(cls, rg: ReductionGraph, source: "ReductionDescriptor") -> Self:
        """Descriptor of ``rg`` with inline labels, keeping the label names and table of ``source``."""
        return cls(
            context=PermutationGroupSpec.of(rg.context.ambient),
            galois=rg.context.group.permutations(),
            labels=source.labels,
            points=[PointSpec(id=p, label=h.permutations()) for p, h in rg.points.items()],
            components=[
                ComponentSpec(id=u, label=h.permutations(), kind=rg.kinds[u].value) for u, h in rg.components.items()
            ],
            branches=[BranchSpec(point=p, component=u) for u, p in rg.branches],
            table=source.table,
        )


class ReductionInput(ReductionDescriptor):
    """Input of the reduction commands; ``normal`` is the subgroup for ``basechange``."""

    normal: LabelRef | None = None
