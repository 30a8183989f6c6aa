"""Tate cohomology, flasque tests and flasque resolutions of lattices."""

from typing import Any, ClassVar

from shagraph import logger
from shagraph.glattice.cohomology import (
    coflasque_witness,
    flasque_witness,
    h1,
    is_flasque,
    tate_duality_holds,
    tate_h0,
    tate_h_minus1,
)
from shagraph.glattice.groups import Subgroup
from shagraph.glattice.lattice import GLattice, dual
from shagraph.glattice.resolution import flasque_resolution
from shagraph.models import LatticeInput, build_subgroup
from shagraph.services.base import BaseService, Outcome


def _subgroup_json(h: Subgroup | None) -> dict[str, Any] | None:
    if h is None:
        return None
    return {"generators": h.permutations(), "order": h.order}


class LatticeService(BaseService):
    """Service for ``tate``, ``flasque-check`` and ``resolve``."""

    MODEL: ClassVar[type[LatticeInput]] = LatticeInput
    COMMANDS: ClassVar[tuple[str, ...]] = ("tate", "flasque-check", "resolve")

    def execute(self, command: str, payload: Any) -> Outcome:
        lattice = payload.lattice.build()
        logger.debug(f"lattice of rank {lattice.rank} over a group of order {lattice.group.order}")
        if command == "tate":
            return self.tate(lattice, payload)
        if command == "flasque-check":
            return self.flasque_check(lattice)
        return self.resolve(lattice)

    def tate(self, lattice: GLattice, payload: LatticeInput) -> Outcome:
        """Tate groups in degrees -1 and 0 and ``H^1`` of the lattice and its dual, per subgroup."""
        grp = lattice.group
        if payload.subgroups is None:
            subgroups = list(grp.class_representatives)
        else:
            subgroups = [build_subgroup(grp, gens) for gens in payload.subgroups]
        dual_lattice = dual(lattice)
        rows = []
        duality = True
        for h in subgroups:
            minus1 = tate_h_minus1(h, lattice)
            h1_dual = h1(h, dual_lattice)
            duality = duality and minus1 == h1_dual
            rows.append({
                "subgroup": _subgroup_json(h),
                "tate_h_minus1": str(minus1),
                "tate_h0": str(tate_h0(h, lattice)),
                "h1": str(h1(h, lattice)),
                "h1_dual": str(h1_dual),
                "duality": minus1 == h1_dual,
            })
        return Outcome(
            result={"rank": lattice.rank, "subgroups": rows},
            verification={"action_multiplicative": lattice.verify_all_pairs(), "tate_duality": duality},
        )

    def flasque_check(self, lattice: GLattice) -> Outcome:
        flasque = flasque_witness(lattice, self.workers)
        coflasque = coflasque_witness(lattice, self.workers)
        return Outcome(
            result={
                "rank": lattice.rank,
                "flasque": flasque is None,
                "coflasque": coflasque is None,
                "flasque_witness": _subgroup_json(flasque),
                "coflasque_witness": _subgroup_json(coflasque),
            },
            verification={"action_multiplicative": lattice.verify_all_pairs()},
        )

    def resolve(self, t_hat: GLattice) -> Outcome:
        """Flasque resolution with its exactness flags and a duality check on the flasque term."""
        sequence = flasque_resolution(t_hat, self.workers)
        s_hat = sequence.quot
        flags: dict[str, bool | None] = dict(sequence.verify())
        flags["s_hat_flasque"] = is_flasque(s_hat, self.workers)
        flags["s_hat_tate_duality"] = all(
            tate_duality_holds(h, s_hat) for h in s_hat.group.class_representatives
        )
        return Outcome(
            result={
                "ranks": {"t_hat": t_hat.rank, "q_hat": sequence.mid.rank, "s_hat": s_hat.rank},
                "rank_identity": sequence.mid.rank == t_hat.rank + s_hat.rank,
                "middle_is_permutation": sequence.middle_is_permutation,
                "is_flasque": flags["s_hat_flasque"],
                "s_hat_trivial_action": s_hat.is_trivial_action(),
                "s_hat_action": [a.to_lists() for a in s_hat.generator_action],
                "inject": sequence.inject.to_lists(),
                "surject": sequence.surject.to_lists(),
            },
            verification=flags,
        )
