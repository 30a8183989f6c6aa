"""Tests for Tate cohomology, H^1, flasqueness and flasque resolutions."""

import pytest

from shagraph.abelian import IntegerMatrix, InvariantFactors, elementary_divisors
from shagraph.exceptions import LimitExceededError, MismatchError
from shagraph.glattice import (
    FiniteGroup,
    GLattice,
    Subgroup,
    coflasque_witness,
    dual,
    fixed_basis,
    flasque_resolution,
    flasque_witness,
    h1,
    is_coflasque,
    is_equivariant,
    is_flasque,
    norm_one_lattice,
    permutation_cover,
    permutation_lattice,
    regular_lattice,
    sign_lattice,
    sublattice,
    tate_duality_holds,
    tate_h0,
    tate_h_minus1,
    trivial_lattice,
)

from .oracles import bar_h1, tate_h0_oracle, tate_h_minus1_oracle
from .strategies import GROUPS

ZERO = InvariantFactors()
ZMOD2 = InvariantFactors(0, (2,))


def augmentation_kernel(group: FiniteGroup, h: Subgroup) -> GLattice:
    """Kernel of ``Z[G/H] -> Z``, spanned by ``e_i - e_0``."""
    n = h.index
    basis = IntegerMatrix.from_columns([[int(j == i) - int(j == 0) for j in range(n)] for i in range(1, n)], n)
    return sublattice(permutation_lattice(group, h), basis)


def lattice_catalog() -> list[tuple[str, GLattice]]:
    """Named lattices over the catalog groups, kept small enough for the bar-complex oracle.

    Every catalog group contributes its lattices of rank at most 4: trivial,
    sign and permutation lattices, the augmentation kernels of permutation
    lattices and their duals (the relative norm-one lattices). The regular
    and full norm-one lattices are added for groups of order at most 4.
    """
    out: list[tuple[str, GLattice]] = []
    for group in GROUPS:
        name = f"order{group.order}"
        out.append((f"{name}-trivial", trivial_lattice(group, 2)))
        if group.order <= 4:
            out.append((f"{name}-regular", regular_lattice(group)))
            out.append((f"{name}-norm-one", norm_one_lattice(group)))
            out.append((f"{name}-norm-one-dual", dual(norm_one_lattice(group))))
        for h in group.class_representatives:
            if h.index == 2:
                out.append((f"{name}-sign-{h.order}", sign_lattice(group, h)))
            if 1 < h.index <= 4:
                out.append((f"{name}-perm-{h.order}-{h.sorted_elements()}", permutation_lattice(group, h)))
            if 2 < h.index <= 5:
                kernel = augmentation_kernel(group, h)
                out.append((f"{name}-aug-{h.order}-{h.sorted_elements()}", kernel))
                out.append((f"{name}-rel-norm-one-{h.order}-{h.sorted_elements()}", dual(kernel)))
    return out


CATALOG = lattice_catalog()


def test_catalog_reaches_order_eight_groups() -> None:
    ranks = {m.rank for name, m in CATALOG if name.startswith("order8-")}
    assert ranks == {1, 2, 3, 4}
    assert any(name.startswith("order8-rel-norm-one") for name, _ in CATALOG)
    assert all(m.rank <= 4 for name, m in CATALOG if not name.startswith(("order2-", "order3-", "order4-")))


class TestSmallCases:
    """Hand-checked values over cyclic groups."""

    def test_sign_lattice(self, z2: FiniteGroup, z2_sign: GLattice) -> None:
        whole = z2.whole
        assert fixed_basis(whole, z2_sign).cols == 0
        assert tate_h0(whole, z2_sign) == ZERO
        assert tate_h_minus1(whole, z2_sign) == ZMOD2
        assert h1(whole, z2_sign) == ZMOD2
        assert h1(z2.trivial_subgroup, z2_sign) == ZERO

    def test_trivial_lattice(self, z2: FiniteGroup) -> None:
        z = trivial_lattice(z2)
        assert tate_h0(z2.whole, z) == ZMOD2
        assert tate_h_minus1(z2.whole, z) == ZERO
        assert h1(z2.whole, z) == ZERO
        assert is_flasque(z)
        assert is_coflasque(z)

    def test_norm_one_over_z4(self, z4: FiniteGroup) -> None:
        j = norm_one_lattice(z4)
        assert h1(z4.whole, j) == InvariantFactors(0, (4,))
        witness = coflasque_witness(j)
        assert witness is not None
        assert witness.order == 2

    def test_sign_lattice_is_neither(self, z2_sign: GLattice) -> None:
        assert not is_flasque(z2_sign)
        assert not is_coflasque(z2_sign)
        assert flasque_witness(z2_sign) == z2_sign.group.whole

    def test_mismatched_subgroup(self, z2: FiniteGroup, z4: FiniteGroup) -> None:
        with pytest.raises(MismatchError):
            h1(z4.whole, trivial_lattice(z2))

    def test_h1_respects_order_bound(self, z4: FiniteGroup, monkeypatch: pytest.MonkeyPatch) -> None:
        m = norm_one_lattice(z4)
        monkeypatch.setenv("SHAGRAPH_MAX_GROUP_ORDER", "2")
        with pytest.raises(LimitExceededError):
            h1(z4.whole, m)

    def test_parallel_witness_search_agrees(self, z4: FiniteGroup) -> None:
        j = norm_one_lattice(z4)
        assert coflasque_witness(j, workers=3) == coflasque_witness(j, workers=1)


class TestPermutationLattices:
    @pytest.mark.parametrize("group", GROUPS, ids=lambda g: f"order{g.order}")
    def test_permutation_lattices_are_flasque_and_coflasque(self, group: FiniteGroup) -> None:
        for h in group.class_representatives:
            m = permutation_lattice(group, h)
            assert is_flasque(m)
            assert is_coflasque(m)

    @pytest.mark.parametrize("group", GROUPS, ids=lambda g: f"order{g.order}")
    def test_duality(self, group: FiniteGroup) -> None:
        m = norm_one_lattice(group)
        assert all(tate_duality_holds(h, m) for h in group.class_representatives)


@pytest.mark.slow
class TestAgainstBarComplex:
    """Every catalog lattice and subgroup class against the brute-force oracles."""

    @pytest.mark.parametrize(("name", "m"), CATALOG, ids=[name for name, _ in CATALOG])
    def test_h1(self, name: str, m: GLattice) -> None:
        for h in m.group.class_representatives:
            assert h1(h, m) == bar_h1(h, m), f"{name} over a subgroup of order {h.order}"

    @pytest.mark.parametrize(("name", "m"), CATALOG, ids=[name for name, _ in CATALOG])
    def test_tate(self, name: str, m: GLattice) -> None:
        for h in m.group.class_representatives:
            assert tate_h0(h, m) == tate_h0_oracle(h, m), name
            assert tate_h_minus1(h, m) == tate_h_minus1_oracle(h, m), name
            assert tate_duality_holds(h, m), name


class TestResolution:
    """Permutation covers and flasque resolutions of character lattices."""

    def test_quadratic(self, z2: FiniteGroup) -> None:
        sequence = flasque_resolution(norm_one_lattice(z2))
        assert (sequence.sub.rank, sequence.mid.rank, sequence.quot.rank) == (1, 2, 1)
        assert sequence.is_exact
        assert sequence.middle_is_permutation
        assert sequence.quot.is_trivial_action()

    def test_biquadratic(self, klein: FiniteGroup) -> None:
        sequence = flasque_resolution(norm_one_lattice(klein))
        assert (sequence.sub.rank, sequence.mid.rank, sequence.quot.rank) == (3, 18, 15)
        assert sequence.is_exact
        assert is_flasque(sequence.quot)

    @pytest.mark.parametrize("group", GROUPS[:4], ids=lambda g: f"order{g.order}")
    def test_cover_is_equivariant_surjection(self, group: FiniteGroup) -> None:
        m = dual(norm_one_lattice(group))
        p, cover = permutation_cover(m)
        assert cover.shape == (m.rank, p.rank)
        assert is_equivariant(p, m, cover)
        assert elementary_divisors(cover) == (1,) * m.rank

