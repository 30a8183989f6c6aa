"""Tate cohomology in degrees -1 and 0, bar-complex H^1, flasque tests."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor

from shagraph import logger
from shagraph.abelian.groups import InvariantFactors, PresentedGroup
from shagraph.abelian.matrix import IntegerMatrix
from shagraph.abelian.normal_forms import kernel_basis, solve_columns
from shagraph.config import Settings
from shagraph.exceptions import LimitExceededError, MismatchError, VerificationError
from shagraph.glattice.groups import Subgroup
from shagraph.glattice.lattice import GLattice, dual


def _check(h: Subgroup, m: GLattice) -> None:
    if h.parent != m.group:
        raise MismatchError("subgroup and lattice belong to different groups")


def _quotient(basis: IntegerMatrix, spanning: Sequence[Sequence[int]]) -> InvariantFactors:
    """``span(basis) / span(spanning)`` where every spanning vector lies in the first span."""
    coords = solve_columns(basis, spanning) if basis.cols and spanning else []
    if any(c is None for c in coords):
        raise VerificationError("sublattice generator outside the ambient lattice")
    return PresentedGroup.from_relations(basis.cols, [c for c in coords if c is not None]).invariants


def fixed_basis(h: Subgroup, m: GLattice) -> IntegerMatrix:
    """Canonical column basis of ``M^H``: the kernel of the stacked ``action(s) - I``."""
    _check(h, m)
    identity = IntegerMatrix.identity(m.rank)
    stacked = IntegerMatrix.vstack([m.actions[s] - identity for s in h.generators], cols=m.rank)
    return kernel_basis(stacked)


def tate_h0(h: Subgroup, m: GLattice) -> InvariantFactors:
    """``M^H / N_H M``."""
    basis = fixed_basis(h, m)
    return _quotient(basis, m.norm(h).columns())


def tate_h_minus1(h: Subgroup, m: GLattice) -> InvariantFactors:
    """``ker(N_H) / I_H M``.

    ``I_H M`` is spanned by ``(action(s) - I) M`` over generators ``s`` of ``h``.
    """
    _check(h, m)
    basis = kernel_basis(m.norm(h))
    identity = IntegerMatrix.identity(m.rank)
    augmentation = [v for s in h.generators for v in (m.actions[s] - identity).columns()]
    return _quotient(basis, augmentation)


def h1(h: Subgroup, m: GLattice) -> InvariantFactors:
    """First cohomology ``Z^1(H, M) / B^1(H, M)``.

    A crossed homomorphism is determined by its values ``x_i`` on the generators
    of ``h``; they are free coordinates, and the cocycle identity is imposed on
    every (element, generator) pair of ``h``.

    Raises
    ------
    LimitExceededError
        If ``|H|`` exceeds ``Settings().max_group_order``
    """
    _check(h, m)
    limit = Settings().max_group_order
    if h.order > limit:
        raise LimitExceededError(f"subgroup of order {h.order} exceeds the bound {limit}", {"order": h.order})
    gens = h.generators
    r, t = m.rank, len(gens)
    if t == 0 or r == 0:
        return InvariantFactors(0, ())
    grp = m.group
    width = r * t

    def placed(g: int, pos: int) -> IntegerMatrix:
        blocks = [m.actions[g] if i == pos else IntegerMatrix.zeros(r, r) for i in range(t)]
        return IntegerMatrix.hstack(blocks, rows=r)

    # value of the cocycle at g as a linear function of the generator values
    cochain = {grp.identity: IntegerMatrix.zeros(r, width)}
    tree = grp.spanning_tree(gens, h.elements)
    for element, parent, pos in tree:
        cochain[element] = cochain[parent] + placed(parent, pos)
    tree_edges = {(parent, pos) for _, parent, pos in tree}
    constraints = [
        cochain[grp.mul(g, s)] - cochain[g] - placed(g, pos)
        for g in h.sorted_elements()
        for pos, s in enumerate(gens)
        if (g, pos) not in tree_edges
    ]
    cocycles = kernel_basis(IntegerMatrix.vstack(constraints, cols=width))
    identity = IntegerMatrix.identity(r)
    coboundary = IntegerMatrix.vstack([m.actions[s] - identity for s in gens], cols=r)
    logger.debug("h1: |H|=%d rank=%d cocycle rank=%d", h.order, r, cocycles.cols)
    return _quotient(cocycles, coboundary.columns())


def _first_failure(
    subgroups: Sequence[Subgroup], test: Callable[[Subgroup], bool], workers: int
) -> Subgroup | None:
    if workers <= 1 or len(subgroups) <= 1:
        return next((h for h in subgroups if not test(h)), None)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(test, subgroups))
    return next((h for h, ok in zip(subgroups, results, strict=True) if not ok), None)


def flasque_witness(m: GLattice, workers: int | None = None) -> Subgroup | None:
    """Least conjugacy-class representative ``H`` with ``H^1(H, dual(m)) != 0``, or ``None``."""
    d = dual(m)
    return _first_failure(
        m.group.class_representatives,
        lambda h: h1(h, d).is_trivial,
        workers if workers is not None else Settings().parallel,
    )


def coflasque_witness(m: GLattice, workers: int | None = None) -> Subgroup | None:
    """Least conjugacy-class representative ``H`` with ``H^1(H, m) != 0``, or ``None``."""
    return _first_failure(
        m.group.class_representatives,
        lambda h: h1(h, m).is_trivial,
        workers if workers is not None else Settings().parallel,
    )


def is_flasque(m: GLattice, workers: int | None = None) -> bool:
    return flasque_witness(m, workers) is None


def is_coflasque(m: GLattice, workers: int | None = None) -> bool:
    return coflasque_witness(m, workers) is None


def tate_duality_holds(h: Subgroup, m: GLattice) -> bool:
    """Whether ``Ĥ^-1(H, M)`` and ``H^1(H, dual(M))`` have the same invariants."""
    return tate_h_minus1(h, m) == h1(h, dual(m))
