"""
Harder-Narasimhan filtrations of torsion-free split modules.

R is semistable, a direct sum of equal-slope stable blocks is semistable and
there are no maps from a block to one of strictly smaller slope, so the maximal
destabilizing submodule of a split module is the sum of its top-slope summands.
Grouping summands by slope in descending order therefore yields the filtration.
"""

import logging
from fractions import Fraction
from itertools import groupby
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.logic.algebra import Rational, WeightedAlgebra
from core.logic.errors import InputValidationError
from core.logic.modules.graded import GradedModule, from_summands
from core.logic.modules.summands import Summand, summand_sort_key

logger = logging.getLogger(__name__)


class HNStage(BaseModel):
    """
    One graded piece M_k / M_{k-1}: the summands of a common slope.

    Fields:
        indices: 0-based positions of the summands in the input module
        summands: the summands themselves, in input order
        slope: their common slope
    """
    indices: Tuple[int, ...] = Field(..., description="Positions in the input module")
    summands: Tuple[Summand, ...] = Field(..., description="Summands of this stage")
    slope: Rational = Field(..., description="Common slope")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def rank(self) -> int:
        return sum(s.rank for s in self.summands)


class HNFiltration(BaseModel):
    """0 = M_0 < M_1 < ... < M_l = M with strictly decreasing quotient slopes."""
    algebra: WeightedAlgebra = Field(..., description="Ambient weighted algebra")
    stages: Tuple[HNStage, ...] = Field(..., description="Stages by decreasing slope")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def _check_slopes(self):
        if not self.stages:
            raise InputValidationError("HN filtration needs at least one stage")
        slopes = self.quotient_slopes
        if any(a <= b for a, b in zip(slopes, slopes[1:])):
            raise InputValidationError(f"HN slopes must strictly decrease, got {slopes}")
        return self

    @property
    def quotient_slopes(self) -> List[Fraction]:
        """mu(M_k / M_{k-1}) for k = 1..l."""
        return [stage.slope for stage in self.stages]

    @property
    def mu_max(self) -> Fraction:
        return self.stages[0].slope

    @property
    def mu_min(self) -> Fraction:
        return self.stages[-1].slope

    @property
    def length(self) -> int:
        return len(self.stages)

    def prefix(self, k: int) -> GradedModule:
        """The submodule M_k, for 1 <= k <= length."""
        if k < 1 or k > self.length:
            raise InputValidationError(f"prefix index {k} outside 1..{self.length}")
        summands = [s for stage in self.stages[:k] for s in stage.summands]
        return from_summands(self.algebra, summands)

    def prefix_indices(self, k: int) -> Tuple[int, ...]:
        return tuple(sorted(i for stage in self.stages[:k] for i in stage.indices))

    def canonical(self) -> List[dict]:
        """
        Order-independent form: stages by slope descending, summands inside a
        stage by shift ascending then label.
        """
        out = []
        for stage in self.stages:
            ordered = sorted(stage.summands, key=lambda s: summand_sort_key(s, self.algebra))
            out.append({
                "slope": stage.slope,
                "summands": [s.model_dump(mode="json") for s in ordered],
            })
        return out


def hn_filtration(M: GradedModule) -> HNFiltration:
    """
    Raises:
        InputValidationError: If M has torsion or rank 0
    """
    if M.torsion:
        raise InputValidationError("HN restricted to torsion-free split modules")
    if M.rank == 0:
        raise InputValidationError("HN filtration of the zero module is undefined")
    R = M.algebra
    keyed = sorted(
        ((s.slope(R), i, s) for i, s in enumerate(M.summands)),
        key=lambda t: (-t[0], t[1]),
    )
    stages = []
    for mu, group in groupby(keyed, key=lambda t: t[0]):
        group = list(group)
        stages.append(HNStage(
            indices=tuple(i for _, i, _ in group),
            summands=tuple(s for _, _, s in group),
            slope=mu,
        ))
    logger.debug(f"HN of rank {M.rank} module: slopes {[st.slope for st in stages]}")
    return HNFiltration(algebra=R, stages=tuple(stages))


def is_semistable(M: GradedModule) -> bool:
    return hn_filtration(M).length == 1


def mu_max(M: GradedModule) -> Fraction:
    return hn_filtration(M).mu_max


def mu_min(M: GradedModule) -> Fraction:
    return hn_filtration(M).mu_min
