"""Descriptors for abelian groups, homomorphisms and the ``snf`` command."""

from typing import Annotated

from pydantic import Field

from shagraph.abelian.groups import InvariantFactors, PresentedGroup
from shagraph.abelian.homs import GroupHom
from shagraph.abelian.matrix import IntegerMatrix
from shagraph.exceptions import SchemaError
from shagraph.models.base import ShagraphBaseModel

MatrixRows = Annotated[list[list[int]], Field(description="Integer matrix, one list per row")]


class PresentationSpec(ShagraphBaseModel):
    """``Z^generators`` modulo the row span of ``relations``."""

    generators: int = Field(ge=0, description="Number of generators")
    relations: MatrixRows = Field(default_factory=list)

    def build(self) -> PresentedGroup:
        if any(len(r) != self.generators for r in self.relations):
            raise SchemaError(f"every relation needs {self.generators} entries")
        return PresentedGroup.from_relations(self.generators, self.relations)


GroupSpec = str | PresentationSpec


def build_group(spec: GroupSpec) -> PresentedGroup:
    """Group from an invariant-factor string such as ``"Z x Z/2"`` or a presentation.

    Raises
    ------
    SchemaError
        If the string does not parse
    """
    if isinstance(spec, PresentationSpec):
        return spec.build()
    try:
        return PresentedGroup.from_invariants(InvariantFactors.parse(spec))
    except ValueError as err:
        raise SchemaError(str(err), {"group": spec}) from err


def build_matrix(rows: list[list[int]], height: int, width: int, what: str) -> IntegerMatrix:
    """Matrix of a prescribed shape; an empty list stands for any zero-size matrix."""
    if not rows and (height == 0 or width == 0):
        return IntegerMatrix.zeros(height, width)
    if len(rows) != height or any(len(r) != width for r in rows):
        raise SchemaError(f"{what}: expected a {height}x{width} matrix", {"rows": rows})
    return IntegerMatrix.from_rows(rows, cols=width)


def build_hom(rows: list[list[int]], domain: PresentedGroup, codomain: PresentedGroup, what: str) -> GroupHom:
    return GroupHom(domain, codomain, build_matrix(rows, codomain.generator_count, domain.generator_count, what))


class MatrixInput(ShagraphBaseModel):
    """Input of the ``snf`` command."""

    matrix: MatrixRows

    def build(self) -> IntegerMatrix:
        if not self.matrix:
            raise SchemaError("matrix needs at least one row")
        width = len(self.matrix[0])
        return build_matrix(self.matrix, len(self.matrix), width, "matrix")
