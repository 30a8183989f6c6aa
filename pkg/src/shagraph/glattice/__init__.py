"""Finite groups acting on lattices: Tate cohomology and flasque resolutions."""

from shagraph.glattice.cohomology import (
    coflasque_witness,
    fixed_basis,
    flasque_witness,
    h1,
    is_coflasque,
    is_flasque,
    tate_duality_holds,
    tate_h0,
    tate_h_minus1,
)
from shagraph.glattice.groups import FiniteGroup, Subgroup
from shagraph.glattice.lattice import (
    GLattice,
    LatticeSequence,
    direct_sum,
    dual,
    is_equivariant,
    norm_one_lattice,
    norm_one_sequence,
    permutation_lattice,
    regular_lattice,
    sign_lattice,
    sublattice,
    trivial_lattice,
)
from shagraph.glattice.resolution import flasque_resolution, permutation_cover

__all__ = [
    "FiniteGroup",
    "GLattice",
    "LatticeSequence",
    "Subgroup",
    "coflasque_witness",
    "direct_sum",
    "dual",
    "fixed_basis",
    "flasque_resolution",
    "flasque_witness",
    "h1",
    "is_coflasque",
    "is_equivariant",
    "is_flasque",
    "norm_one_lattice",
    "norm_one_sequence",
    "permutation_cover",
    "permutation_lattice",
    "regular_lattice",
    "sign_lattice",
    "sublattice",
    "tate_duality_holds",
    "tate_h0",
    "tate_h_minus1",
    "trivial_lattice",
]
