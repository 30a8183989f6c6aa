"""Constructive flasque resolutions ``0 -> T -> Q -> S -> 0`` of character lattices."""

from __future__ import annotations

from shagraph import logger
from shagraph.abelian.matrix import IntegerMatrix
from shagraph.abelian.normal_forms import kernel_basis
from shagraph.exceptions import VerificationError
from shagraph.glattice.cohomology import fixed_basis, flasque_witness
from shagraph.glattice.lattice import GLattice, LatticeSequence, direct_sum, dual, permutation_lattice, sublattice


def permutation_cover(m: GLattice) -> tuple[GLattice, IntegerMatrix]:
    """Equivariant surjection ``P -> M`` from a sum of permutation lattices.

    For every conjugacy-class representative ``H`` and every vector ``f`` of the
    canonical basis of ``M^H`` one copy of ``Z[G/H]`` is added, with the coset
    ``gH`` sent to ``action(g) f`` (``g`` the least element of the coset).

    Returns
    -------
    tuple[GLattice, IntegerMatrix]
        ``P`` and the ``m.rank x P.rank`` matrix of the surjection
    """
    grp = m.group
    pieces: list[GLattice] = []
    columns: list[tuple[int, ...]] = []
    for h in grp.class_representatives:
        basis = fixed_basis(h, m)
        if basis.cols == 0:
            continue
        block = permutation_lattice(grp, h)
        representatives = [min(coset) for coset in h.left_cosets()]
        for f in basis.columns():
            pieces.append(block)
            columns.extend(m.actions[g].apply(f) for g in representatives)
        logger.debug("permutation cover: subgroup of order %d contributes %d copies", h.order, basis.cols)
    if not pieces:
        return GLattice(grp, 0, (IntegerMatrix.zeros(0, 0),) * grp.order), IntegerMatrix.zeros(m.rank, 0)
    return direct_sum(pieces), IntegerMatrix.from_columns(columns, m.rank)


def flasque_resolution(t_hat: GLattice, workers: int | None = None) -> LatticeSequence:
    """Resolve ``t_hat`` as ``0 -> t_hat -> Q -> S -> 0`` with ``Q`` permutation and ``S`` flasque.

    The dual ``M`` of ``t_hat`` is covered by :func:`permutation_cover`; with
    ``N`` the kernel of the cover, the dual of ``0 -> N -> P -> M -> 0`` is
    returned. The result is verified before it is returned.

    Raises
    ------
    VerificationError
        If the sequence is not exact or ``S`` is not flasque; ``detail`` names
        the failing check or subgroup
    """
    m = dual(t_hat)
    p, cover = permutation_cover(m)
    k = kernel_basis(cover)
    n = sublattice(p, k)
    sequence = LatticeSequence(
        sub=t_hat,
        mid=dual(p),
        quot=dual(n),
        inject=cover.T,
        surject=k.T,
        middle_is_permutation=True,
    )
    flags = sequence.verify()
    partial = {"rank_sub": t_hat.rank, "rank_mid": p.rank, "rank_quot": n.rank}
    failed = [name for name, ok in flags.items() if not ok]
    if failed:
        raise VerificationError("flasque resolution is not exact", {"failed": failed}, partial)
    witness = flasque_witness(sequence.quot, workers)
    if witness is not None:
        raise VerificationError(
            "flasque resolution produced a non-flasque quotient",
            {"subgroup": witness.permutations(), "order": witness.order},
            partial,
        )
    logger.info("flasque resolution verified: ranks %d -> %d -> %d", t_hat.rank, p.rank, n.rank)
    return sequence
