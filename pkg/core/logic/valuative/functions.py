"""
Diagonal valuative functions on R^r: v_M(sum a_i e_i) = min_i (v(a_i) + c_i).
"""

import logging
from fractions import Fraction
from typing import Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.logic.algebra import INFINITY, Rational, parse_rational
from core.logic.algebra.rationals import is_multiple
from core.logic.errors import InputValidationError
from core.logic.modules import GradedModule, HNFiltration, free_module, hn_filtration
from core.logic.valuative.valuation import MonomialValuation, v_eval

logger = logging.getLogger(__name__)


class DiagonalValuativeFunction(BaseModel):
    """
    A geometric valuative function on a free module, diagonal in the basis e_i.

    Fields:
        valuation: the monomial valuation v
        shifts: c_i = v_M(e_i), each in delta Z
    """
    valuation: MonomialValuation = Field(..., description="Underlying valuation")
    shifts: Tuple[Rational, ...] = Field(..., description="Values on the basis vectors")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def _check_shifts(self):
        if not self.shifts:
            raise InputValidationError("a valuative function needs rank >= 1")
        delta = self.valuation.index
        for i, c in enumerate(self.shifts):
            if not is_multiple(c, delta):
                raise InputValidationError(f"shift {c} (index {i}) is not in {delta}Z")
        return self

    @property
    def rank(self) -> int:
        return len(self.shifts)

    @property
    def delta(self) -> Fraction:
        return self.valuation.index


def make_function(valuation: MonomialValuation, shifts: Sequence) -> DiagonalValuativeFunction:
    return DiagonalValuativeFunction(
        valuation=valuation, shifts=tuple(parse_rational(c) for c in shifts)
    )


def vf_eval(vf: DiagonalValuativeFunction, m: Sequence) -> Union[Fraction, float]:
    """
    min_i (v(a_i) + c_i); infinity exactly when every a_i is 0.

    Raises:
        InputValidationError: If len(m) differs from the rank
    """
    if len(m) != vf.rank:
        raise InputValidationError(f"vector has length {len(m)}, expected rank {vf.rank}")
    values = [v_eval(vf.valuation, a) for a in m]
    return min(
        (val + c for val, c in zip(values, vf.shifts) if val != INFINITY),
        default=INFINITY,
    )


def associated_graded(vf: DiagonalValuativeFunction) -> GradedModule:
    """gr_{v_M}(M) = (+)_i gr_v(R)(-c_i)."""
    return free_module(vf.valuation.algebra, vf.shifts)


def graded_hn(vf: DiagonalValuativeFunction) -> HNFiltration:
    return hn_filtration(associated_graded(vf))


def phi(vf: DiagonalValuativeFunction) -> Fraction:
    """Phi(v_M) = mu_max - mu_min of the associated graded."""
    hn = graded_hn(vf)
    return hn.mu_max - hn.mu_min


def is_optimal(vf: DiagonalValuativeFunction) -> bool:
    return phi(vf) < vf.delta


def translate(vf: DiagonalValuativeFunction, c) -> DiagonalValuativeFunction:
    """Parallel transport vf + c.

    Raises:
        InputValidationError: If c is not in delta Z
    """
    c = parse_rational(c)
    if not is_multiple(c, vf.delta):
        raise InputValidationError(f"translation {c} is not in {vf.delta}Z")
    return vf.model_copy(update={"shifts": tuple(s + c for s in vf.shifts)})
