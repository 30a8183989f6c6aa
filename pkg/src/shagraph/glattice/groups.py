"""Finite permutation groups and their subgroups.

Elements are permutations of ``{0, ..., degree - 1}`` stored as tuples, sorted
so that the identity has index 0. Composition is ``(g h)(i) = g(h(i))``.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from sympy.combinatorics import Permutation, PermutationGroup

from shagraph import logger
from shagraph.config import Settings
from shagraph.exceptions import LimitExceededError, PreconditionError

Perm = tuple[int, ...]


def _check_permutation(p: Sequence[int], degree: int) -> Perm:
    perm = tuple(int(x) for x in p)
    if len(perm) != degree or sorted(perm) != list(range(degree)):
        raise PreconditionError(f"{list(p)} is not a permutation of degree {degree}")
    return perm


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Permutation group with enumerated elements and multiplication table.

    Parameters
    ----------
    degree : int
        Size of the permuted set
    generators : tuple[Perm, ...]
        Generating permutations (may be empty for the trivial group)

    Raises
    ------
    LimitExceededError
        If the group order exceeds ``Settings().max_group_order``

    Examples
    --------
    >>> FiniteGroup(3, ((1, 0, 2), (1, 2, 0))).order
    6
    """

    degree: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...] = field(init=False)
    table: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise PreconditionError("permutation degree must be positive")
        gens = tuple(_check_permutation(g, self.degree) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        sympy_gens = [Permutation(list(g), size=self.degree) for g in gens] or [Permutation(self.degree - 1)]
        group = PermutationGroup(sympy_gens)
        order = int(group.order())
        limit = Settings().max_group_order
        if order > limit:
            raise LimitExceededError(
                f"group of order {order} exceeds the bound {limit}",
                {"order": order, "max_group_order": limit},
            )
        elements = tuple(sorted(tuple(p.array_form) for p in group.generate()))
        index = {e: i for i, e in enumerate(elements)}
        table = tuple(tuple(index[tuple(g[x] for x in h)] for h in elements) for g in elements)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "table", table)
        logger.debug("FiniteGroup degree=%d order=%d", self.degree, order)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteGroup) and (self.degree, self.elements) == (other.degree, other.elements)

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    # === Catalog ===

    @classmethod
    def trivial(cls, degree: int = 1) -> FiniteGroup:
        return cls(degree, ())

    @classmethod
    def cyclic(cls, n: int) -> FiniteGroup:
        """Cyclic group of order ``n`` acting regularly on ``n`` points."""
        return cls(n, (tuple((i + 1) % n for i in range(n)),) if n > 1 else ())

    @classmethod
    def klein_four(cls) -> FiniteGroup:
        return cls(4, ((1, 0, 3, 2), (2, 3, 0, 1)))

    @classmethod
    def symmetric(cls, n: int) -> FiniteGroup:
        if n < 2:  # noqa: PLR2004
            return cls.trivial(max(n, 1))
        transposition = (1, 0, *range(2, n))
        cycle = tuple((i + 1) % n for i in range(n))
        return cls(n, (transposition, cycle))

    @classmethod
    def dihedral(cls, n: int) -> FiniteGroup:
        """Symmetries of the ``n``-gon (order ``2n``)."""
        rotation = tuple((i + 1) % n for i in range(n))
        reflection = tuple((-i) % n for i in range(n))
        return cls(n, (rotation, reflection))

    # === Arithmetic on indices ===

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.table)

    def inv(self, g: int) -> int:
        return self.inverses[g]

    def conjugate(self, g: int, h: int) -> int:
        """``g h g^-1``."""
        return self.mul(self.mul(g, h), self.inv(g))

    @cached_property
    def _index(self) -> dict[Perm, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def index_of(self, perm: Sequence[int]) -> int:
        key = tuple(perm)
        if key not in self._index:
            raise PreconditionError(f"{list(perm)} is not an element of the group")
        return self._index[key]

    @cached_property
    def generator_indices(self) -> tuple[int, ...]:
        return tuple(self.index_of(g) for g in self.generators)

    # === Subgroups ===

    def closure(self, gens: Iterable[int]) -> frozenset[int]:
        """Elements of the subgroup generated by ``gens``."""
        gens = tuple(gens)
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = self.mul(x, s)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return frozenset(seen)

    def reduce_generators(self, gens: Iterable[int]) -> tuple[int, ...]:
        """Greedy deterministic generating subset of `gens`."""
        chosen: list[int] = []
        current = frozenset({self.identity})
        for g in sorted(set(gens)):
            if g not in current:
                chosen.append(g)
                current = self.closure(chosen)
        return tuple(chosen)

    def subgroup(self, gens: Iterable[int]) -> Subgroup:
        reduced = self.reduce_generators(gens)
        return Subgroup(self, self.closure(reduced), reduced)

    def subgroup_from_permutations(self, perms: Iterable[Sequence[int]]) -> Subgroup:
        return self.subgroup(self.index_of(p) for p in perms)

    @cached_property
    def whole(self) -> Subgroup:
        return self.subgroup(self.generator_indices)

    @cached_property
    def trivial_subgroup(self) -> Subgroup:
        return self.subgroup(())

    @cached_property
    def all_subgroups(self) -> tuple[Subgroup, ...]:
        """Every subgroup exactly once, ordered by (order, sorted elements).

        Subgroups are joins of cyclic subgroups, so breadth-first joins from
        the trivial subgroup reach all of them.
        """
        cyclic = {self.subgroup((g,)) for g in range(self.order)}
        found: dict[frozenset[int], Subgroup] = {self.trivial_subgroup.elements: self.trivial_subgroup}
        queue: deque[Subgroup] = deque([self.trivial_subgroup])
        ordered_cyclic = sorted(cyclic, key=Subgroup.sort_key)
        while queue:
            current = queue.popleft()
            for c in ordered_cyclic:
                if c.elements <= current.elements:
                    continue
                gens = self.reduce_generators(current.generators + c.generators)
                elements = self.closure(gens)
                if elements not in found:
                    sub = Subgroup(self, elements, gens)
                    found[elements] = sub
                    queue.append(sub)
        logger.debug("enumerated %d subgroups of a group of order %d", len(found), self.order)
        return tuple(sorted(found.values(), key=Subgroup.sort_key))

    @cached_property
    def subgroup_classes(self) -> tuple[tuple[Subgroup, ...], ...]:
        """Partition of :attr:`all_subgroups` into conjugacy classes (each class sorted)."""
        remaining = list(self.all_subgroups)
        classes: list[tuple[Subgroup, ...]] = []
        while remaining:
            rep = remaining[0]
            members = {rep.conjugate(g).elements for g in range(self.order)}
            cls = tuple(s for s in remaining if s.elements in members)
            classes.append(cls)
            remaining = [s for s in remaining if s.elements not in members]
        return tuple(classes)

    @cached_property
    def class_representatives(self) -> tuple[Subgroup, ...]:
        return tuple(c[0] for c in self.subgroup_classes)

    def spanning_tree(self, gens: Sequence[int], elements: frozenset[int] | None = None) -> list[tuple[int, int, int]]:
        """Breadth-first Cayley tree ``(element, parent, generator position)`` with ``element = parent * gens[pos]``.

        The identity is the root and is not listed.
        """
        reach = elements if elements is not None else frozenset(range(self.order))
        seen = {self.identity}
        edges: list[tuple[int, int, int]] = []
        queue: deque[int] = deque([self.identity])
        while queue:
            x = queue.popleft()
            for pos, s in enumerate(gens):
                y = self.mul(x, s)
                if y not in seen and y in reach:
                    seen.add(y)
                    edges.append((y, x, pos))
                    queue.append(y)
        return edges


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of a :class:`FiniteGroup` as a set of element indices.

    Parameters
    ----------
    parent : FiniteGroup
        Ambient group
    elements : frozenset[int]
        Indices of member elements
    generators : tuple[int, ...]
        Indices generating the subgroup (not part of equality)
    """

    parent: FiniteGroup = field(repr=False)
    elements: frozenset[int]
    generators: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.parent.identity not in self.elements:
            raise PreconditionError("subgroup must contain the identity")
        if self.parent.closure(self.generators) != self.elements:
            raise PreconditionError("subgroup generators do not generate its elements")

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.elements), tuple(sorted(self.elements)))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, g: object) -> bool:
        return g in self.elements

    def __le__(self, other: Subgroup) -> bool:
        return self.elements <= other.elements

    def __lt__(self, other: Subgroup) -> bool:
        return self.elements < other.elements

    def intersection(self, other: Subgroup) -> Subgroup:
        common = self.elements & other.elements
        return self.parent.subgroup(common)

    def conjugate(self, g: int) -> Subgroup:
        """``g H g^-1``."""
        grp = self.parent
        return Subgroup(grp, frozenset(grp.conjugate(g, h) for h in self.elements),
                        tuple(sorted({grp.conjugate(g, h) for h in self.generators})))

    def is_normal(self) -> bool:
        grp = self.parent
        return all(grp.conjugate(g, h) in self.elements for g in grp.generator_indices for h in self.generators)

    def is_normal_in(self, other: Subgroup) -> bool:
        grp = self.parent
        return self <= other and all(
            grp.conjugate(g, h) in self.elements for g in other.generators for h in self.generators
        )

    def sorted_elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))

    def left_cosets(self) -> tuple[frozenset[int], ...]:
        """Cosets ``gH`` ordered by their least element index."""
        return self.left_cosets_within(frozenset(range(self.parent.order)))

    def left_cosets_within(self, ambient: frozenset[int]) -> tuple[frozenset[int], ...]:
        grp = self.parent
        cosets: list[frozenset[int]] = []
        covered: set[int] = set()
        for g in sorted(ambient):
            if g in covered:
                continue
            coset = frozenset(grp.mul(g, h) for h in self.elements)
            cosets.append(coset)
            covered |= coset
        return tuple(cosets)

    def permutations(self) -> list[list[int]]:
        """Generators as permutation lists (descriptor form)."""
        return [list(self.parent.elements[g]) for g in self.generators]

    def __str__(self) -> str:
        return f"<{', '.join(str(list(self.parent.elements[g])) for g in self.generators)}> (order {self.order})"
