"""Descriptors for permutation groups and lattices with a group action."""

from typing import Literal, Self

from pydantic import Field, model_validator

from shagraph.exceptions import SchemaError
from shagraph.glattice.groups import FiniteGroup, Subgroup
from shagraph.glattice.lattice import (
    GLattice,
    dual,
    norm_one_lattice,
    permutation_lattice,
    regular_lattice,
    sign_lattice,
    trivial_lattice,
)
from shagraph.models.algebra import MatrixRows, build_matrix
from shagraph.models.base import ShagraphBaseModel

Generators = list[list[int]]
Preset = Literal["trivial", "regular", "norm_one", "sign", "permutation"]


class PermutationGroupSpec(ShagraphBaseModel):
    """Permutation group on ``{0, ..., degree - 1}`` given by generators.

    Examples
    --------
    >>> PermutationGroupSpec(degree=2, generators=[[1, 0]]).build().order
    2
    """

    degree: int = Field(gt=0, description="Size of the permuted set")
    generators: Generators = Field(default_factory=list, description="Generating permutations")

    def build(self) -> FiniteGroup:
        return FiniteGroup(self.degree, tuple(tuple(g) for g in self.generators))

    @classmethod
    def of(cls, group: FiniteGroup) -> Self:
        return cls(degree=group.degree, generators=[list(g) for g in group.generators])


def build_subgroup(group: FiniteGroup, generators: Generators) -> Subgroup:
    """Subgroup generated by permutations, each of which must lie in ``group``."""
    return group.subgroup_from_permutations(generators)


class LatticeSpec(ShagraphBaseModel):
    """Lattice given by generator matrices or by a named construction.

    Either ``action`` (one ``rank x rank`` matrix per group generator) or
    ``preset`` is required. ``sign`` and ``permutation`` presets need
    ``subgroup``; ``dual`` replaces the result by its dual lattice.
    """

    group: PermutationGroupSpec
    rank: int | None = Field(None, ge=0, description="Lattice rank")
    action: list[MatrixRows] | None = Field(None, description="Matrices of the group generators")
    preset: Preset | None = Field(None, description="Named construction")
    subgroup: Generators | None = Field(None, description="Subgroup generators for sign and permutation presets")
    dual: bool = Field(False, description="Use the dual lattice")

    @model_validator(mode="after")
    def _one_source(self) -> Self:
        if (self.action is None) == (self.preset is None):
            raise ValueError("give exactly one of action and preset")
        if self.action is not None and self.rank is None:
            raise ValueError("an explicit action needs a rank")
        if self.preset in {"sign", "permutation"} and self.subgroup is None:
            raise ValueError(f"preset {self.preset} needs a subgroup")
        return self

    def build(self) -> GLattice:
        group = self.group.build()
        lattice = self._construct(group)
        return dual(lattice) if self.dual else lattice

    def _construct(self, group: FiniteGroup) -> GLattice:
        match self.preset:
            case "trivial":
                return trivial_lattice(group, self.rank if self.rank is not None else 1)
            case "regular":
                return regular_lattice(group)
            case "norm_one":
                return norm_one_lattice(group)
            case "sign":
                return sign_lattice(group, build_subgroup(group, self.subgroup or []))
            case "permutation":
                return permutation_lattice(group, build_subgroup(group, self.subgroup or []))
        rank = self.rank or 0
        action = self.action or []
        if len(action) != len(group.generators):
            raise SchemaError(f"{len(action)} action matrices for {len(group.generators)} generators")
        matrices = [build_matrix(rows, rank, rank, "action") for rows in action]
        return GLattice.from_generator_action(group, rank, matrices)


class LatticeInput(ShagraphBaseModel):
    """Input of the ``tate``, ``flasque-check`` and ``resolve`` commands.

    ``subgroups`` restricts ``tate`` to the listed subgroups; by default one
    representative of every conjugacy class is used.
    """

    lattice: LatticeSpec
    subgroups: list[Generators] | None = None
