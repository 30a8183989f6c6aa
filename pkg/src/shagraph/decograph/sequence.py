"""Short exact sequences of coefficient systems and their six-term cohomology sequence."""

from __future__ import annotations

from dataclasses import dataclass

from shagraph import logger
from shagraph.abelian.groups import InvariantFactors, PresentedGroup
from shagraph.abelian.homs import (
    GroupHom,
    direct_sum_hom,
    is_exact,
    is_injective,
    is_surjective,
    lift_matrix,
    preimage_columns,
)
from shagraph.abelian.matrix import IntegerMatrix
from shagraph.decograph.complex import cochain_complex, induced_maps
from shagraph.decograph.system import SystemMorphism
from shagraph.exceptions import MismatchError, PreconditionError

SPOTS = ("H0(A)", "H0(B)", "H0(C)", "H1(A)", "H1(B)", "H1(C)")


@dataclass(frozen=True)
class ShortExactSequence:
    """``0 -> A -first-> B -second-> C -> 0``, exact at every vertex and edge.

    Raises
    ------
    PreconditionError
        If some component sequence is not short exact
    """

    first: SystemMorphism
    second: SystemMorphism

    def __post_init__(self) -> None:
        if self.first.target != self.second.source:
            raise MismatchError("morphisms of the sequence are not composable")
        for kind, f_maps, g_maps in (
            ("vertex", self.first.vertex_maps, self.second.vertex_maps),
            ("edge", self.first.edge_maps, self.second.edge_maps),
        ):
            for key, f in f_maps.items():
                g = g_maps[key]
                if not (is_injective(f) and is_exact(f, g) and is_surjective(g)):
                    raise PreconditionError(f"sequence is not exact at {kind} {key}", {kind: key})


@dataclass(frozen=True)
class SixTermResult:
    """``H0(A) -> H0(B) -> H0(C) -delta-> H1(A) -> H1(B) -> H1(C)``.

    Parameters
    ----------
    groups : tuple[PresentedGroup, ...]
        The six cohomology groups in order
    maps : tuple[GroupHom, ...]
        The five maps between consecutive groups; ``maps[2]`` is the connecting map
    exactness : dict[str, bool]
        Exactness at each of the six spots (injectivity at the first, surjectivity at the last)
    """

    groups: tuple[PresentedGroup, ...]
    maps: tuple[GroupHom, ...]
    exactness: dict[str, bool]

    @property
    def invariants(self) -> tuple[InvariantFactors, ...]:
        return tuple(grp.invariants for grp in self.groups)

    @property
    def connecting(self) -> GroupHom:
        return self.maps[2]

    @property
    def is_exact(self) -> bool:
        return all(self.exactness.values())


def connecting_map(ses: ShortExactSequence) -> GroupHom:
    """Snake map ``H^0(C) -> H^1(A)``.

    A cocycle of ``C`` is lifted to ``C0(B)``, pushed through ``d_B`` and pulled
    back along the injection ``C1(A) -> C1(B)``.
    """
    f, g = ses.first, ses.second
    graph = f.source.graph
    ca = cochain_complex(graph, f.source)
    cb = cochain_complex(graph, f.target)
    cc = cochain_complex(graph, g.target)
    g0 = direct_sum_hom([g.vertex_maps[v] for v in graph.vertices])
    f1 = direct_sum_hom([f.edge_maps[e] for e in graph.edges])
    include_c = cc.h0_inclusion
    lifts = lift_matrix(g0, include_c.matrix)
    boundaries = (cb.d.matrix @ lifts).columns()
    pulled = preimage_columns(f1, boundaries)
    if any(c is None for c in pulled):
        raise PreconditionError("boundary of a lifted cocycle does not come from the first system")
    columns = [c for c in pulled if c is not None]
    target = ca.h1_projection.codomain
    return GroupHom(include_c.domain, target, IntegerMatrix.from_columns(columns, target.generator_count))


def six_term(ses: ShortExactSequence) -> SixTermResult:
    """Six-term exact sequence with every spot checked."""
    f0, f1 = induced_maps(ses.first)
    g0, g1 = induced_maps(ses.second)
    delta = connecting_map(ses)
    maps = (f0, g0, delta, f1, g1)
    groups = (f0.domain, f0.codomain, g0.codomain, f1.domain, f1.codomain, g1.codomain)
    checks = (
        is_injective(f0),
        is_exact(f0, g0),
        is_exact(g0, delta),
        is_exact(delta, f1),
        is_exact(f1, g1),
        is_surjective(g1),
    )
    exactness = dict(zip(SPOTS, checks, strict=True))
    logger.debug("six-term exactness: %s", exactness)
    return SixTermResult(groups, maps, exactness)
