"""Finitely generated abelian groups given by presentations."""

from __future__ import annotations

import math
import re
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from shagraph.abelian.matrix import IntegerMatrix
from shagraph.abelian.normal_forms import elementary_divisors, in_row_span, row_hermite

_FREE = re.compile(r"^Z(?:\^(\d+))?$")
_CYCLIC = re.compile(r"^Z/(\d+)$")


@dataclass(frozen=True, slots=True)
class InvariantFactors:
    """Canonical isomorphism class ``Z^r x Z/d1 x ... x Z/ds`` with ``d1 | d2 | ...``.

    Parameters
    ----------
    free_rank : int
        Rank of the free part
    torsion : tuple[int, ...]
        Invariant factors, each at least 2, forming a divisor chain

    Examples
    --------
    >>> str(InvariantFactors(2, (2, 4)))
    'Z^2 x Z/2 x Z/4'
    >>> str(InvariantFactors(0, ()))
    '0'
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(d < 2 for d in self.torsion):  # noqa: PLR2004
            raise ValueError(f"torsion factors must be >= 2, got {self.torsion}")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:], strict=False)):
            raise ValueError(f"torsion factors must form a divisor chain, got {self.torsion}")

    @classmethod
    def from_divisors(cls, generator_count: int, divisors: Sequence[int]) -> InvariantFactors:
        """Build from the nonzero Smith diagonal of a relation matrix on ``generator_count`` generators."""
        return cls(generator_count - len(divisors), tuple(d for d in divisors if d != 1))

    @classmethod
    def parse(cls, text: str) -> InvariantFactors:
        """Parse the ``Z^r x Z/d1 x ...`` format; ``0`` is the trivial group.

        Factors may come in any order and need not be a divisor chain;
        the result is normalized.
        """
        text = text.strip()
        if text in {"0", ""}:
            return cls()
        rank = 0
        cyclic: list[int] = []
        for part in (p.strip() for p in text.split("x")):
            if m := _FREE.match(part):
                rank += int(m.group(1) or 1)
            elif m := _CYCLIC.match(part):
                cyclic.append(int(m.group(1)))
            else:
                raise ValueError(f"cannot parse group factor {part!r} in {text!r}")
        group = PresentedGroup.from_orders(rank, cyclic)
        return group.invariants

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        """Group order, or ``None`` when the group is infinite."""
        return None if self.free_rank else math.prod(self.torsion)

    def __str__(self) -> str:
        parts: list[str] = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


@dataclass(frozen=True)
class PresentedGroup:
    """Quotient of ``Z^generator_count`` by the row span of ``relations``.

    Parameters
    ----------
    generator_count : int
        Number of generators
    relations : IntegerMatrix
        One relation per row, ``relations.cols == generator_count``
    """

    generator_count: int
    relations: IntegerMatrix

    def __post_init__(self) -> None:
        if self.relations.cols != self.generator_count:
            raise ValueError(
                f"relation matrix has {self.relations.cols} columns for {self.generator_count} generators"
            )

    @classmethod
    def free(cls, rank: int) -> PresentedGroup:
        return cls(rank, IntegerMatrix.zeros(0, rank))

    @classmethod
    def trivial(cls) -> PresentedGroup:
        return cls.free(0)

    @classmethod
    def cyclic(cls, n: int) -> PresentedGroup:
        """``Z/n``; ``n == 0`` gives ``Z``."""
        return cls(1, IntegerMatrix.from_rows([[n]]) if n else IntegerMatrix.zeros(0, 1))

    @classmethod
    def from_orders(cls, free_rank: int, orders: Sequence[int]) -> PresentedGroup:
        """``Z^free_rank`` times cyclic groups of the given orders, one generator each."""
        n = free_rank + len(orders)
        rows = [[d if j == free_rank + i else 0 for j in range(n)] for i, d in enumerate(orders)]
        return cls(n, IntegerMatrix.from_rows(rows, cols=n))

    @classmethod
    def from_invariants(cls, inv: InvariantFactors) -> PresentedGroup:
        return cls.from_orders(inv.free_rank, inv.torsion)

    @classmethod
    def from_relations(cls, generator_count: int, relations: Sequence[Sequence[int]]) -> PresentedGroup:
        return cls(generator_count, IntegerMatrix.from_rows(relations, cols=generator_count))

    @cached_property
    def invariants(self) -> InvariantFactors:
        """Canonical form of this group."""
        return InvariantFactors.from_divisors(self.generator_count, elementary_divisors(self.relations))

    @property
    def is_zero(self) -> bool:
        return self.invariants.is_trivial

    @property
    def order(self) -> int | None:
        return self.invariants.order

    def is_zero_element(self, vec: Sequence[int]) -> bool:
        """Whether the coordinate vector ``vec`` represents the identity."""
        return in_row_span(self.relations, vec)

    def reduced(self) -> PresentedGroup:
        """Same group and generators with relations in Hermite form."""
        return PresentedGroup(self.generator_count, row_hermite(self.relations))

    def __str__(self) -> str:
        return str(self.invariants)


def canonical_form(g: PresentedGroup) -> InvariantFactors:
    """Unique invariant-factor decomposition of ``g``; unit factors are dropped.

    Examples
    --------
    >>> str(canonical_form(PresentedGroup.from_relations(2, [[2, 0], [0, 3]])))
    'Z/6'
    """
    return g.invariants


def direct_sum(groups: Sequence[PresentedGroup]) -> PresentedGroup:
    """External direct sum; generators are concatenated in order."""
    n = sum(g.generator_count for g in groups)
    return PresentedGroup(n, IntegerMatrix.block_diagonal([g.relations for g in groups]))


def is_zero_group(g: PresentedGroup) -> bool:
    return g.is_zero


def isomorphic(a: PresentedGroup, b: PresentedGroup) -> bool:
    return a.invariants == b.invariants


def power(g: PresentedGroup, m: int) -> PresentedGroup:
    """``g^m`` as an m-fold direct sum."""
    return direct_sum([g] * m)
