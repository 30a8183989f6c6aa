"""Pytest configuration and shared fixtures for shagraph tests."""

from collections.abc import Mapping, Sequence

import pytest

from shagraph.abelian import GroupHom, PresentedGroup, zero_hom
from shagraph.decograph import CoefficientSystem, Graph, constant_system
from shagraph.glattice import FiniteGroup, GLattice, Subgroup, sign_lattice
from shagraph.reduction import (
    CohomologyTable,
    ComponentKind,
    CustomComponentData,
    GaloisContext,
    ReductionGraph,
)

Z = PresentedGroup.free(1)
Z2 = PresentedGroup.cyclic(2)
Z4 = PresentedGroup.cyclic(4)
TRIVIAL = PresentedGroup.trivial()


def reduction_graph(
    group: FiniteGroup,
    points: Mapping[str, Subgroup],
    components: Mapping[str, Subgroup],
    branches: Sequence[tuple[str, str]],
    custom: Sequence[str] = (),
) -> ReductionGraph:
    """Reduction graph over the whole of ``group``; ``custom`` lists the non-rational components."""
    kinds = {u: ComponentKind.CUSTOM if u in custom else ComponentKind.RATIONAL for u in components}
    return ReductionGraph(GaloisContext.of(group), dict(points), dict(components), kinds, tuple(branches))


def table(
    group: FiniteGroup,
    groups: Mapping[Subgroup, PresentedGroup],
    restrictions: Mapping[tuple[Subgroup, Subgroup], GroupHom] | None = None,
) -> CohomologyTable:
    return CohomologyTable(group, dict(groups), dict(restrictions or {}))


def cycle_graph(n: int) -> Graph:
    """``v0 - v1 - ... - v{n-1} - v0``."""
    vertices = [f"v{i}" for i in range(n)]
    return Graph.build(vertices, {f"e{i}": (vertices[i], vertices[(i + 1) % n]) for i in range(n)})


def path_graph(n: int) -> Graph:
    vertices = [f"v{i}" for i in range(n)]
    return Graph.build(vertices, {f"e{i}": (vertices[i], vertices[i + 1]) for i in range(n - 1)})


# === Groups ===


@pytest.fixture
def z2() -> FiniteGroup:
    return FiniteGroup.cyclic(2)


@pytest.fixture
def z4() -> FiniteGroup:
    return FiniteGroup.cyclic(4)


@pytest.fixture
def klein() -> FiniteGroup:
    return FiniteGroup.klein_four()


@pytest.fixture
def s3() -> FiniteGroup:
    return FiniteGroup.symmetric(3)


# === Lattices ===


@pytest.fixture
def z2_sign(z2: FiniteGroup) -> GLattice:
    """``Z`` with the generator of ``Z/2`` acting by ``-1``."""
    return sign_lattice(z2, z2.trivial_subgroup)


# === Decorated graphs ===


@pytest.fixture
def triangle() -> Graph:
    return cycle_graph(3)


@pytest.fixture
def path3() -> Graph:
    return path_graph(3)


@pytest.fixture
def constant_triangle(triangle: Graph) -> CoefficientSystem:
    return constant_system(triangle, Z2)


# === Reduction graphs ===


@pytest.fixture
def nonmonotonic_tree(z2: FiniteGroup) -> ReductionGraph:
    """Two components over ``k`` meeting at one point with a quadratic residue field."""
    whole, trivial = z2.whole, z2.trivial_subgroup
    return reduction_graph(z2, {"P": trivial}, {"U1": whole, "U2": whole}, [("U1", "P"), ("U2", "P")])


@pytest.fixture
def nonmonotonic_table(z2: FiniteGroup) -> CohomologyTable:
    """``A_k = 0`` and ``A_k' = Z/2``."""
    whole, trivial = z2.whole, z2.trivial_subgroup
    return table(z2, {whole: TRIVIAL, trivial: Z2}, {(whole, trivial): zero_hom(TRIVIAL, Z2)})


@pytest.fixture
def hexagon(z2: FiniteGroup) -> ReductionGraph:
    """Three rational components over ``k`` meeting pairwise in ``k``-points."""
    whole = z2.whole
    components = {"U1": whole, "U2": whole, "U3": whole}
    points = {"P12": whole, "P23": whole, "P31": whole}
    branches = [("U1", "P12"), ("U2", "P12"), ("U2", "P23"), ("U3", "P23"), ("U3", "P31"), ("U1", "P31")]
    return reduction_graph(z2, points, components, branches)


@pytest.fixture
def z2_table(z2: FiniteGroup) -> CohomologyTable:
    """``A_k = Z/2`` on the whole group only."""
    return table(z2, {z2.whole: Z2})


@pytest.fixture
def loop_with_custom(z2: FiniteGroup) -> tuple[ReductionGraph, CohomologyTable, dict[str, CustomComponentData]]:
    """Rational ``U2`` and custom ``U1`` meeting at two ``k``-points.

    ``A_{U1} = Z/2 x Z/2`` specializes onto each coordinate, so the loop carries no Sha.
    """
    whole = z2.whole
    rg = reduction_graph(
        z2,
        {"P": whole, "Q": whole},
        {"U1": whole, "U2": whole},
        [("U1", "P"), ("U1", "Q"), ("U2", "P"), ("U2", "Q")],
        custom=("U1",),
    )
    t = table(z2, {whole: Z2})
    v4 = PresentedGroup.from_orders(0, [2, 2])
    data = CustomComponentData(
        v4,
        {"P": GroupHom.from_columns(v4, Z2, [[1], [0]]), "Q": GroupHom.from_columns(v4, Z2, [[0], [1]])},
        GroupHom.from_columns(Z2, v4, [[1, 1]]),
    )
    return rg, t, {"U1": data}
