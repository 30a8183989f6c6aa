"""Exact arithmetic of finitely generated abelian groups."""

from shagraph.abelian.groups import (
    InvariantFactors,
    PresentedGroup,
    canonical_form,
    direct_sum,
    is_zero_group,
    isomorphic,
    power,
)
from shagraph.abelian.homs import (
    GroupHom,
    add_homs,
    cokernel,
    cokernel_projection,
    compose,
    corestriction,
    direct_sum_hom,
    equals,
    factor_through_injection,
    identity,
    image,
    image_inclusion,
    inverse,
    is_exact,
    is_injective,
    is_isomorphism,
    is_surjective,
    is_zero_hom,
    kernel,
    kernel_inclusion,
    lift_matrix,
    lift_through_surjection,
    negate,
    preimage_columns,
    scalar_hom,
    zero_hom,
)
from shagraph.abelian.matrix import IntegerMatrix, Vector
from shagraph.abelian.normal_forms import (
    SmithForm,
    column_echelon,
    elementary_divisors,
    in_row_span,
    kernel_basis,
    row_hermite,
    smith_normal_form,
    solve,
    solve_columns,
)

__all__ = [
    "GroupHom",
    "IntegerMatrix",
    "InvariantFactors",
    "PresentedGroup",
    "SmithForm",
    "Vector",
    "add_homs",
    "canonical_form",
    "cokernel",
    "cokernel_projection",
    "column_echelon",
    "compose",
    "corestriction",
    "direct_sum",
    "direct_sum_hom",
    "elementary_divisors",
    "equals",
    "factor_through_injection",
    "identity",
    "image",
    "image_inclusion",
    "in_row_span",
    "inverse",
    "is_exact",
    "is_injective",
    "is_isomorphism",
    "is_surjective",
    "is_zero_group",
    "is_zero_hom",
    "isomorphic",
    "kernel",
    "kernel_basis",
    "kernel_inclusion",
    "lift_matrix",
    "lift_through_surjection",
    "negate",
    "power",
    "preimage_columns",
    "row_hermite",
    "scalar_hom",
    "smith_normal_form",
    "solve",
    "solve_columns",
    "zero_hom",
]
