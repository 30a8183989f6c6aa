"""Homomorphisms between presented abelian groups.

A :class:`GroupHom` matrix has one row per codomain generator and one column per
domain generator. Kernels, images and cokernels come with their structure maps;
equality of maps is decided modulo the codomain relations.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from shagraph.abelian.groups import PresentedGroup, direct_sum
from shagraph.abelian.matrix import IntegerMatrix, Vector
from shagraph.abelian.normal_forms import kernel_basis, row_hermite, solve_columns
from shagraph.exceptions import IllDefinedMapError, MismatchError, PreconditionError


def _zero_in(group: PresentedGroup, vectors: Sequence[Sequence[int]]) -> list[bool]:
    if not vectors:
        return []
    if group.relations.rows == 0:
        return [not any(v) for v in vectors]
    return [x is not None for x in solve_columns(group.relations.T, vectors)]


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism ``domain -> codomain`` given on generators.

    Parameters
    ----------
    domain : PresentedGroup
        Source group
    codomain : PresentedGroup
        Target group
    matrix : IntegerMatrix
        ``codomain.generator_count x domain.generator_count``; column ``j`` is the image of generator ``j``

    Raises
    ------
    IllDefinedMapError
        If some domain relation is not sent into the codomain relations
    """

    domain: PresentedGroup
    codomain: PresentedGroup
    matrix: IntegerMatrix

    def __post_init__(self) -> None:
        if self.matrix.shape != (self.codomain.generator_count, self.domain.generator_count):
            raise MismatchError(
                f"matrix shape {self.matrix.shape} does not fit "
                f"{self.codomain.generator_count}x{self.domain.generator_count}"
            )
        images = [self.matrix.apply(r) for r in self.domain.relations.entries]
        bad = [i for i, ok in enumerate(_zero_in(self.codomain, images)) if not ok]
        if bad:
            raise IllDefinedMapError(
                "matrix does not respect the domain relations",
                {"relations": [list(self.domain.relations.row(i)) for i in bad]},
            )

    @classmethod
    def from_columns(
        cls, domain: PresentedGroup, codomain: PresentedGroup, columns: Sequence[Sequence[int]]
    ) -> GroupHom:
        return cls(domain, codomain, IntegerMatrix.from_columns(columns, codomain.generator_count))

    def __call__(self, vec: Sequence[int]) -> Vector:
        return self.matrix.apply(vec)

    @cached_property
    def relation_preimage(self) -> IntegerMatrix:
        """Hermite basis (rows) of ``{x : matrix @ x lies in the codomain relations}``."""
        n = self.domain.generator_count
        stacked = IntegerMatrix.hstack([self.matrix, self.codomain.relations.T], rows=self.matrix.rows)
        ker = kernel_basis(stacked)
        return row_hermite(ker.block(0, n, 0, ker.cols).T) if ker.cols else IntegerMatrix.zeros(0, n)


# === Constructors ===


def identity(g: PresentedGroup) -> GroupHom:
    return GroupHom(g, g, IntegerMatrix.identity(g.generator_count))


def zero_hom(domain: PresentedGroup, codomain: PresentedGroup) -> GroupHom:
    return GroupHom(domain, codomain, IntegerMatrix.zeros(codomain.generator_count, domain.generator_count))


def scalar_hom(g: PresentedGroup, k: int) -> GroupHom:
    """Multiplication by ``k`` on ``g``."""
    return GroupHom(g, g, IntegerMatrix.scalar(g.generator_count, k))


# === Algebra of maps ===


def compose(g: GroupHom, h: GroupHom) -> GroupHom:
    """``g o h`` (apply ``h`` first).

    Raises
    ------
    MismatchError
        If ``h.codomain`` is not ``g.domain``
    """
    if h.codomain != g.domain:
        raise MismatchError("cannot compose: codomain of the first map is not the domain of the second")
    return GroupHom(h.domain, g.codomain, g.matrix @ h.matrix)


def add_homs(a: GroupHom, b: GroupHom) -> GroupHom:
    _require_parallel(a, b)
    return GroupHom(a.domain, a.codomain, a.matrix + b.matrix)


def negate(h: GroupHom) -> GroupHom:
    return GroupHom(h.domain, h.codomain, -h.matrix)


def _require_parallel(a: GroupHom, b: GroupHom) -> None:
    if a.domain != b.domain or a.codomain != b.codomain:
        raise MismatchError("maps have different domains or codomains")


def equals(a: GroupHom, b: GroupHom) -> bool:
    """Equality of maps, tested modulo the codomain relations."""
    _require_parallel(a, b)
    return all(_zero_in(a.codomain, (a.matrix - b.matrix).columns()))


def is_zero_hom(h: GroupHom) -> bool:
    return all(_zero_in(h.codomain, h.matrix.columns()))


def direct_sum_hom(homs: Sequence[GroupHom]) -> GroupHom:
    """Block-diagonal map between direct sums."""
    return GroupHom(
        direct_sum([h.domain for h in homs]),
        direct_sum([h.codomain for h in homs]),
        IntegerMatrix.block_diagonal([h.matrix for h in homs]),
    )


# === Kernel, image, cokernel ===


def kernel_inclusion(h: GroupHom) -> GroupHom:
    """Inclusion of ``ker h`` into ``h.domain``; its domain is the kernel."""
    basis = h.relation_preimage
    coords = solve_columns(basis.T, h.domain.relations.entries) if h.domain.relations.rows else []
    if any(c is None for c in coords):
        raise IllDefinedMapError("domain relations escape the kernel lattice")
    kernel_group = PresentedGroup.from_relations(basis.rows, [c for c in coords if c is not None])
    return GroupHom(kernel_group, h.domain, basis.T)


def kernel(h: GroupHom) -> PresentedGroup:
    return kernel_inclusion(h).domain


def image_inclusion(h: GroupHom) -> GroupHom:
    """Inclusion of ``im h`` into ``h.codomain``; the image is presented on the domain generators."""
    image_group = PresentedGroup(h.domain.generator_count, h.relation_preimage)
    return GroupHom(image_group, h.codomain, h.matrix)


def image(h: GroupHom) -> PresentedGroup:
    return image_inclusion(h).domain


def corestriction(h: GroupHom) -> GroupHom:
    """The surjection ``h.domain -> im h`` matching :func:`image_inclusion`."""
    return GroupHom(h.domain, image(h), IntegerMatrix.identity(h.domain.generator_count))


def cokernel_projection(h: GroupHom) -> GroupHom:
    """Projection ``h.codomain -> coker h``, the identity on generators."""
    m = h.codomain.generator_count
    quotient = PresentedGroup(m, IntegerMatrix.vstack([h.codomain.relations, h.matrix.T], cols=m))
    return GroupHom(h.codomain, quotient, IntegerMatrix.identity(m))


def cokernel(h: GroupHom) -> PresentedGroup:
    return cokernel_projection(h).codomain


def is_injective(h: GroupHom) -> bool:
    return kernel(h).is_zero


def is_surjective(h: GroupHom) -> bool:
    return cokernel(h).is_zero


def is_isomorphism(h: GroupHom) -> bool:
    return is_injective(h) and is_surjective(h)


# === Solving through maps ===


def preimage_columns(h: GroupHom, targets: Sequence[Sequence[int]]) -> list[Vector | None]:
    """For each target ``y`` find ``x`` with ``h(x) == y`` in the codomain, or ``None``."""
    n = h.domain.generator_count
    stacked = IntegerMatrix.hstack([h.matrix, h.codomain.relations.T], rows=h.matrix.rows)
    return [None if z is None else z[:n] for z in solve_columns(stacked, targets)]


def _preimage_matrix(h: GroupHom, targets: Sequence[Sequence[int]], what: str) -> IntegerMatrix:
    columns = preimage_columns(h, targets)
    missing = [j for j, c in enumerate(columns) if c is None]
    if missing:
        raise PreconditionError(f"{what}: generators {missing} have no preimage")
    return IntegerMatrix.from_columns([c for c in columns if c is not None], h.domain.generator_count)


def lift_matrix(surj: GroupHom, targets: IntegerMatrix) -> IntegerMatrix:
    """Columnwise lifts of ``targets`` (codomain coordinates) through ``surj``.

    The result is a matrix of representatives; it need not define a homomorphism.
    """
    return _preimage_matrix(surj, targets.columns(), "lift")


def factor_through_injection(inj: GroupHom, phi: GroupHom) -> GroupHom:
    """The unique ``psi`` with ``inj o psi == phi``; requires ``im phi`` inside ``im inj``."""
    if inj.codomain != phi.codomain:
        raise MismatchError("factor_through_injection: maps have different codomains")
    return GroupHom(phi.domain, inj.domain, _preimage_matrix(inj, phi.matrix.columns(), "factor"))


def lift_through_surjection(surj: GroupHom, phi: GroupHom) -> GroupHom:
    """A map ``psi`` with ``surj o psi == phi``; raises when the chosen lifts are not a homomorphism."""
    if surj.codomain != phi.codomain:
        raise MismatchError("lift_through_surjection: maps have different codomains")
    return GroupHom(phi.domain, surj.domain, lift_matrix(surj, phi.matrix))


def inverse(h: GroupHom) -> GroupHom:
    """Inverse of an isomorphism of presented groups.

    Raises
    ------
    PreconditionError
        If ``h`` is not bijective
    """
    if not is_isomorphism(h):
        raise PreconditionError("inverse of a map that is not an isomorphism")
    m = h.codomain.generator_count
    return GroupHom(h.codomain, h.domain, lift_matrix(h, IntegerMatrix.identity(m)))


def is_exact(f: GroupHom, g: GroupHom) -> bool:
    """Exactness of ``A -f-> B -g-> C`` at ``B``."""
    if f.codomain != g.domain:
        raise MismatchError("is_exact: codomain of f is not the domain of g")
    if not is_zero_hom(compose(g, f)):
        return False
    kernel_gens = kernel_inclusion(g).matrix.columns()
    return all(c is not None for c in preimage_columns(f, kernel_gens))
