"""Smith normal form of an integer matrix."""

from typing import Any, ClassVar

from shagraph import logger
from shagraph.abelian.groups import InvariantFactors
from shagraph.abelian.normal_forms import smith_normal_form
from shagraph.models import MatrixInput
from shagraph.services.base import BaseService, Outcome


class MatrixService(BaseService):
    """Service for the ``snf`` command.

    The matrix rows are read as relations, so the reported group is the
    cokernel of the transposed matrix.
    """

    MODEL: ClassVar[type[MatrixInput]] = MatrixInput
    COMMANDS: ClassVar[tuple[str, ...]] = ("snf",)

    def execute(self, command: str, payload: Any) -> Outcome:  # noqa: ARG002
        m = payload.build()
        form = smith_normal_form(m)
        diagonal = form.diagonal
        divisors = tuple(d for d in diagonal if d)
        group = InvariantFactors.from_divisors(m.cols, divisors)
        logger.info(f"smith form of a {m.rows}x{m.cols} matrix: diagonal {list(diagonal)}")
        return Outcome(
            result={
                "diagonal": list(diagonal),
                "rank": form.rank,
                "group": str(group),
                "U": form.U.to_lists(),
                "D": form.D.to_lists(),
                "V": form.V.to_lists(),
            },
            verification={
                "product": form.U @ m @ form.V == form.D,
                "unimodular": form.U.is_unimodular() and form.V.is_unimodular(),
                "divisor_chain": all(b % a == 0 for a, b in zip(divisors, divisors[1:], strict=False)),
            },
        )
