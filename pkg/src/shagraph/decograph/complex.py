"""The two-term cochain complex of a decorated graph and its cohomology."""

from __future__ import annotations

from dataclasses import dataclass

from shagraph import logger
from shagraph.abelian.groups import InvariantFactors, PresentedGroup, direct_sum, power
from shagraph.abelian.homs import (
    GroupHom,
    cokernel_projection,
    compose,
    direct_sum_hom,
    factor_through_injection,
    kernel_inclusion,
)
from shagraph.abelian.matrix import IntegerMatrix
from shagraph.decograph.graph import Graph, cycle_rank
from shagraph.decograph.system import CoefficientSystem, SystemMorphism
from shagraph.exceptions import MismatchError


@dataclass(frozen=True)
class CochainComplex:
    """``C0 = sum of A_x -d-> C1 = sum of A_e``, summands in id order."""

    c0: PresentedGroup
    c1: PresentedGroup
    d: GroupHom

    @property
    def h0_inclusion(self) -> GroupHom:
        return kernel_inclusion(self.d)

    @property
    def h1_projection(self) -> GroupHom:
        return cokernel_projection(self.d)


def _require_match(g: Graph, a: CoefficientSystem) -> None:
    if a.graph != g:
        raise MismatchError("coefficient system lives on a different graph")


def cochain_complex(g: Graph, a: CoefficientSystem) -> CochainComplex:
    """Build the complex; the block of ``d`` at (edge ``e``, vertex ``x``) is the sum
    of ``A_alpha`` over half-edges of ``e`` at ``x`` (both halves for a loop)."""
    _require_match(g, a)
    c0 = direct_sum([a.vertex_groups[v] for v in g.vertices])
    c1 = direct_sum([a.edge_groups[e] for e in g.edges])
    col_offset = {}
    offset = 0
    for v in g.vertices:
        col_offset[v] = offset
        offset += a.vertex_groups[v].generator_count
    rows = [[0] * c0.generator_count for _ in range(c1.generator_count)]
    row = 0
    for e in g.edges:
        for half in (h for h in g.half_edges if h.edge == e):
            block = a.maps[half].matrix
            start = col_offset[g.vertex_of(half)]
            for i in range(block.rows):
                for j in range(block.cols):
                    rows[row + i][start + j] += block.entries[i][j]
        row += a.edge_groups[e].generator_count
    d = GroupHom(c0, c1, IntegerMatrix.from_rows(rows, cols=c0.generator_count))
    return CochainComplex(c0, c1, d)


def h0(g: Graph, a: CoefficientSystem) -> InvariantFactors:
    """``ker d``."""
    return cochain_complex(g, a).h0_inclusion.domain.invariants


def h1(g: Graph, a: CoefficientSystem) -> InvariantFactors:
    """``coker d``."""
    return cochain_complex(g, a).h1_projection.codomain.invariants


def topological_h1(g: Graph, a0: PresentedGroup) -> InvariantFactors:
    """``Hom(H_1(g), a0) = a0^m`` with ``m`` the cycle rank.

    A disconnected graph is accepted with a warning; ``m`` then counts components.
    """
    if not g.is_connected():
        logger.warning("topological_h1 on a graph with %d components", g.component_count)
    return power(a0, cycle_rank(g)).invariants


def induced_maps(f: SystemMorphism) -> tuple[GroupHom, GroupHom]:
    """Maps ``H^0(A) -> H^0(B)`` and ``H^1(A) -> H^1(B)`` induced by ``f``."""
    g = f.source.graph
    ca = cochain_complex(g, f.source)
    cb = cochain_complex(g, f.target)
    f0 = direct_sum_hom([f.vertex_maps[v] for v in g.vertices])
    f1 = direct_sum_hom([f.edge_maps[e] for e in g.edges])
    map0 = factor_through_injection(cb.h0_inclusion, compose(f0, ca.h0_inclusion))
    map1 = GroupHom(ca.h1_projection.codomain, cb.h1_projection.codomain, f1.matrix)
    return map0, map1
