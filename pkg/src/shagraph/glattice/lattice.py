"""Integer lattices with a finite permutation group action.

A lattice vector is a column; ``action(g) @ v`` is ``g . v`` and
``action(g h) == action(g) @ action(h)``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from shagraph import logger
from shagraph.abelian.matrix import IntegerMatrix
from shagraph.abelian.normal_forms import column_echelon, elementary_divisors, kernel_basis, row_hermite, solve_columns
from shagraph.exceptions import IllDefinedMapError, MismatchError, PreconditionError
from shagraph.glattice.groups import FiniteGroup, Subgroup


@dataclass(frozen=True, eq=False)
class GLattice:
    """``Z^rank`` with a linear action of ``group``.

    Parameters
    ----------
    group : FiniteGroup
        Acting group
    rank : int
        Lattice rank
    actions : tuple[IntegerMatrix, ...]
        One ``rank x rank`` matrix per group element, indexed like ``group.elements``

    Raises
    ------
    IllDefinedMapError
        If the matrices do not form a representation by unimodular matrices
    """

    group: FiniteGroup
    rank: int
    actions: tuple[IntegerMatrix, ...] = field(repr=False)

    def __post_init__(self) -> None:
        grp = self.group
        if len(self.actions) != grp.order:
            raise MismatchError(f"{len(self.actions)} action matrices for a group of order {grp.order}")
        if any(a.shape != (self.rank, self.rank) for a in self.actions):
            raise MismatchError(f"action matrices must be {self.rank}x{self.rank}")
        if self.actions[grp.identity] != IntegerMatrix.identity(self.rank):
            raise IllDefinedMapError("identity element does not act trivially")
        for s in grp.generator_indices:
            if not self.actions[s].is_unimodular():
                raise IllDefinedMapError("action matrix is not invertible over Z", {"element": list(grp.elements[s])})
            for g in range(grp.order):
                if self.actions[grp.mul(g, s)] != self.actions[g] @ self.actions[s]:
                    raise IllDefinedMapError(
                        "action is not multiplicative",
                        {"g": list(grp.elements[g]), "h": list(grp.elements[s])},
                    )

    @classmethod
    def from_generator_action(
        cls, group: FiniteGroup, rank: int, matrices: Sequence[IntegerMatrix]
    ) -> GLattice:
        """Extend matrices given on ``group.generators`` to all elements by word evaluation."""
        if len(matrices) != len(group.generators):
            raise MismatchError(f"{len(matrices)} matrices for {len(group.generators)} generators")
        actions: list[IntegerMatrix | None] = [None] * group.order
        actions[group.identity] = IntegerMatrix.identity(rank)
        for element, parent, pos in group.spanning_tree(group.generator_indices):
            base = actions[parent]
            assert base is not None
            actions[element] = base @ matrices[pos]
        if any(a is None for a in actions):
            raise IllDefinedMapError("generators do not reach every element")
        return cls(group, rank, tuple(a for a in actions if a is not None))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GLattice)
            and self.group == other.group
            and self.rank == other.rank
            and self.actions == other.actions
        )

    def __hash__(self) -> int:
        return hash((self.group, self.rank, self.actions))

    def action(self, g: int) -> IntegerMatrix:
        return self.actions[g]

    @property
    def generator_action(self) -> tuple[IntegerMatrix, ...]:
        return tuple(self.actions[s] for s in self.group.generator_indices)

    def norm(self, h: Subgroup) -> IntegerMatrix:
        """``N_H = sum of action(h) over h in H``."""
        total = IntegerMatrix.zeros(self.rank, self.rank)
        for g in h.sorted_elements():
            total += self.actions[g]
        return total

    def verify_all_pairs(self) -> bool:
        """Check ``action(g h) == action(g) action(h)`` over the full multiplication table."""
        grp = self.group
        return all(
            self.actions[grp.mul(g, h)] == self.actions[g] @ self.actions[h]
            for g in range(grp.order)
            for h in range(grp.order)
        )

    def is_trivial_action(self) -> bool:
        identity = IntegerMatrix.identity(self.rank)
        return all(a == identity for a in self.generator_action)


def dual(m: GLattice) -> GLattice:
    """``Hom(M, Z)``: ``g`` acts by the inverse transpose, ``action(g^-1)^T``."""
    grp = m.group
    return GLattice(grp, m.rank, tuple(m.actions[grp.inv(g)].T for g in range(grp.order)))


def trivial_lattice(group: FiniteGroup, rank: int = 1) -> GLattice:
    identity = IntegerMatrix.identity(rank)
    return GLattice(group, rank, (identity,) * group.order)


def permutation_lattice(group: FiniteGroup, h: Subgroup) -> GLattice:
    """``Z[G/H]`` with basis the left cosets of ``h`` (ordered by least element).

    Examples
    --------
    >>> g = FiniteGroup.cyclic(2)
    >>> permutation_lattice(g, g.trivial_subgroup).rank
    2
    """
    if h.parent != group:
        raise MismatchError("subgroup belongs to a different group")
    cosets = h.left_cosets()
    where = {x: i for i, coset in enumerate(cosets) for x in coset}
    n = len(cosets)
    actions = []
    for g in range(group.order):
        targets = [where[group.mul(g, min(coset))] for coset in cosets]
        actions.append(IntegerMatrix.from_rows([[int(targets[j] == i) for j in range(n)] for i in range(n)], cols=n))
    return GLattice(group, n, tuple(actions))


def regular_lattice(group: FiniteGroup) -> GLattice:
    return permutation_lattice(group, group.trivial_subgroup)


def sign_lattice(group: FiniteGroup, h: Subgroup) -> GLattice:
    """``Z`` with elements outside the index-2 subgroup ``h`` acting by ``-1``."""
    if h.parent != group:
        raise MismatchError("subgroup belongs to a different group")
    if h.index != 2:  # noqa: PLR2004
        raise PreconditionError(f"sign lattice needs an index-2 subgroup, got index {h.index}")
    return GLattice(
        group,
        1,
        tuple(IntegerMatrix.from_rows([[1 if g in h else -1]]) for g in range(group.order)),
    )


def norm_one_lattice(group: FiniteGroup) -> GLattice:
    """``Z[G]/(N)`` with basis the images of ``e_g`` for ``g != e``.

    The image of ``e_e`` is minus the sum of the basis, so the rank is ``|G| - 1``.
    """
    n = group.order - 1
    actions = []
    for g in range(group.order):
        columns = []
        for x in range(1, group.order):
            y = group.mul(g, x)
            columns.append([-1] * n if y == group.identity else [int(y - 1 == i) for i in range(n)])
        actions.append(IntegerMatrix.from_columns(columns, n))
    return GLattice(group, n, tuple(actions))


def direct_sum(lattices: Sequence[GLattice]) -> GLattice:
    if not lattices:
        raise PreconditionError("direct sum of no lattices needs an explicit group")
    group = lattices[0].group
    if any(m.group != group for m in lattices):
        raise MismatchError("lattices are acted on by different groups")
    return GLattice(
        group,
        sum(m.rank for m in lattices),
        tuple(IntegerMatrix.block_diagonal([m.actions[g] for m in lattices]) for g in range(group.order)),
    )


def sublattice(m: GLattice, basis: IntegerMatrix) -> GLattice:
    """Restrict the action to the invariant sublattice spanned by the columns of ``basis``.

    Raises
    ------
    PreconditionError
        If the span is not invariant
    """
    k = basis.cols
    actions = []
    for g in range(m.group.order):
        images = (m.actions[g] @ basis).columns()
        coords = solve_columns(basis, images) if k else []
        if any(c is None for c in coords):
            raise PreconditionError("sublattice is not invariant under the action")
        actions.append(IntegerMatrix.from_columns([c for c in coords if c is not None], k))
    return GLattice(m.group, k, tuple(actions))


def is_equivariant(source: GLattice, target: GLattice, matrix: IntegerMatrix) -> bool:
    """Whether ``matrix: source -> target`` commutes with the actions."""
    return all(
        target.actions[s] @ matrix == matrix @ source.actions[s] for s in source.group.generator_indices
    )


@dataclass(frozen=True)
class LatticeSequence:
    """``0 -> sub -inject-> mid -surject-> quot -> 0``.

    Parameters
    ----------
    sub, mid, quot : GLattice
        Lattices over one group
    inject : IntegerMatrix
        ``mid.rank x sub.rank``
    surject : IntegerMatrix
        ``quot.rank x mid.rank``
    middle_is_permutation : bool
        Set when ``mid`` was assembled from permutation lattices
    """

    sub: GLattice
    mid: GLattice
    quot: GLattice
    inject: IntegerMatrix
    surject: IntegerMatrix
    middle_is_permutation: bool = False

    def verify(self) -> dict[str, bool]:
        """Exactness flags, one per required property."""
        flags = {
            "inject_injective": column_echelon(self.inject).rank == self.sub.rank,
            "surject_surjective": elementary_divisors(self.surject) == (1,) * self.quot.rank,
            "composite_zero": (self.surject @ self.inject).is_zero(),
            "equivariant": is_equivariant(self.sub, self.mid, self.inject)
            and is_equivariant(self.mid, self.quot, self.surject),
            "rank_additive": self.mid.rank == self.sub.rank + self.quot.rank,
        }
        image = row_hermite(self.inject.T)
        flags["image_equals_kernel"] = image == kernel_basis(self.surject).T
        logger.debug("lattice sequence checks: %s", flags)
        return flags

    @property
    def is_exact(self) -> bool:
        return all(self.verify().values())


def norm_one_sequence(group: FiniteGroup) -> LatticeSequence:
    """``0 -> Z -> Z[G] -> Z[G]/(N) -> 0`` with ``1 -> N``."""
    n = group.order
    inject = IntegerMatrix.from_rows([[1] for _ in range(n)], cols=1)
    columns = [[-1] * (n - 1)] + [[int(i == j) for i in range(n - 1)] for j in range(n - 1)]
    surject = IntegerMatrix.from_columns(columns, n - 1)
    return LatticeSequence(
        trivial_lattice(group),
        regular_lattice(group),
        norm_one_lattice(group),
        inject,
        surject,
        middle_is_permutation=True,
    )
