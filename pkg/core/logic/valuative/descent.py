"""
Hecke transforms, the Phi-descent loop and the comparison of optimal functions.

For a saturated submodule N spanned by the top-slope summands, the Hecke
transform keeps N and twists the quotient: gr(M') = N (+) (M/N)(delta). On a
diagonal function this lowers the shifts outside N by delta. Repeating it
along the maximal destabilizing submodule while Phi >= delta strictly lowers
Phi, and the loop stops at an optimal function, Phi in [0, delta).
"""

import logging
import math
from fractions import Fraction
from typing import Annotated, List, Literal, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from core.constants import COMPARE_TRANSLATE_SLACK, DESCENT_CAP_SLACK
from core.logic.algebra import Rational, WeightedAlgebra, parse_rational
from core.logic.errors import InputValidationError, InvariantViolation
from core.logic.modules import (
    GradedModule,
    HNFiltration,
    effective_shift,
    free_module,
    from_summands,
    hn_filtration,
)
from core.logic.valuative.functions import (
    DiagonalValuativeFunction,
    associated_graded,
    graded_hn,
    is_optimal,
    phi,
)

logger = logging.getLogger(__name__)


class HeckeStep(BaseModel):
    """
    One Hecke transform of the descent trace.

    Fields:
        stage: number of HN stages the selection meets
        selection: 0-based summand indices spanning N
        before, after: effective shifts (-slope) of every summand
        phi_before, phi_after: Phi of the module before and after
        delta: the step size
    """
    stage: int = Field(..., ge=1, description="HN stages spanned by N")
    selection: Tuple[int, ...] = Field(..., description="Summand indices of N")
    before: Tuple[Rational, ...] = Field(..., description="Effective shifts before")
    after: Tuple[Rational, ...] = Field(..., description="Effective shifts after")
    phi_before: Rational = Field(..., description="Phi before the step")
    phi_after: Rational = Field(..., description="Phi after the step")
    delta: Rational = Field(..., description="Index of the valuation")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def scaled(self, factor: Fraction) -> "HeckeStep":
        return HeckeStep(
            stage=self.stage,
            selection=self.selection,
            before=tuple(c * factor for c in self.before),
            after=tuple(c * factor for c in self.after),
            phi_before=self.phi_before * factor,
            phi_after=self.phi_after * factor,
            delta=self.delta * factor,
        )


class Optimization(BaseModel):
    function: DiagonalValuativeFunction
    trace: Tuple[HeckeStep, ...] = ()

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def steps(self) -> int:
        return len(self.trace)


class Descent(BaseModel):
    module: GradedModule
    trace: Tuple[HeckeStep, ...] = ()

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class ParallelTransport(BaseModel):
    """vf_2 = vf_1 + c."""
    kind: Literal['parallel_transport'] = 'parallel_transport'
    c: Rational

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class HeckeRelated(BaseModel):
    """hecke(vf_2, selection) = vf_1 + c, with selection the HN prefix M_stage."""
    kind: Literal['hecke_related'] = 'hecke_related'
    stage: int
    selection: Tuple[int, ...]
    c: Rational

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class Unrelated(BaseModel):
    kind: Literal['unrelated'] = 'unrelated'

    model_config = ConfigDict(frozen=True)


Comparison = Annotated[Union[ParallelTransport, HeckeRelated, Unrelated], Field(discriminator='kind')]


def _phi_of(hn: HNFiltration) -> Fraction:
    return hn.mu_max - hn.mu_min


def effective_shifts(M: GradedModule) -> Tuple[Fraction, ...]:
    return tuple(effective_shift(s, M.algebra) for s in M.summands)


def check_selection(M: GradedModule, selection: Sequence[int]) -> Tuple[int, ...]:
    """
    Validate that ``selection`` spans a saturated HN-compatible submodule:
    nonempty, proper and closed upward in slope.
    """
    summands = M.summands
    chosen = tuple(sorted(set(selection)))
    ok = (
        len(chosen) == len(tuple(selection))
        and 0 < len(chosen) < len(summands)
        and all(isinstance(i, int) and 0 <= i < len(summands) for i in chosen)
    )
    if ok:
        slopes = [s.slope(M.algebra) for s in summands]
        lowest = min(slopes[i] for i in chosen)
        ok = all(i in chosen for i, mu in enumerate(slopes) if mu > lowest)
    if not ok:
        logger.warning(f"Rejected Hecke selection {tuple(selection)} on rank {M.rank} module")
        raise InputValidationError(f"not a saturated HN-compatible submodule: {tuple(selection)}")
    return chosen


def hecke_module(M: GradedModule, selection: Sequence[int], delta) -> GradedModule:
    """
    N (+) (M/N)(delta) for N spanned by ``selection``; summand order is kept.

    Raises:
        InputValidationError: If M has torsion or the selection is not valid
    """
    if M.torsion:
        raise InputValidationError("HN restricted to torsion-free split modules")
    delta = parse_rational(delta)
    chosen = set(check_selection(M, selection))
    out = [
        s if i in chosen else s.twisted(delta, M.algebra)
        for i, s in enumerate(M.summands)
    ]
    return from_summands(M.algebra, out)


def hecke(vf: DiagonalValuativeFunction, selection: Sequence[int]) -> DiagonalValuativeFunction:
    """Shifts outside the selection drop by delta."""
    chosen = set(check_selection(associated_graded(vf), selection))
    delta = vf.delta
    shifts = tuple(c if i in chosen else c - delta for i, c in enumerate(vf.shifts))
    return vf.model_copy(update={"shifts": shifts})


def phi_descent_bound(step: HeckeStep, hn_before: HNFiltration) -> bool:
    """
    phi_after <= max(mu_2 - mu_min, mu_2 - mu_max + delta, phi_before - delta),
    with mu_2 the slope of M_2/M_1.

    Raises:
        InputValidationError: If the filtration has a single stage
    """
    if hn_before.length < 2:
        raise InputValidationError("bound requires μ(M₂/M₁)")
    mu_2 = hn_before.stages[1].slope
    bound = max(
        mu_2 - hn_before.mu_min,
        mu_2 - hn_before.mu_max + step.delta,
        step.phi_before - step.delta,
    )
    return step.phi_after <= bound


def descend(M: GradedModule, delta) -> Descent:
    """
    Hecke-transform along the top HN stage while Phi >= delta.

    Raises:
        InvariantViolation: If a step fails to lower Phi, breaks the descent
            bound, or the iteration cap is exceeded
    """
    delta = parse_rational(delta)
    if delta <= 0:
        raise InputValidationError(f"delta must be positive, got {delta}")
    hn = hn_filtration(M)
    current = _phi_of(hn)
    cap = math.ceil(current / delta) + M.rank + DESCENT_CAP_SLACK
    trace: List[HeckeStep] = []

    while current >= delta:
        if len(trace) >= cap:
            logger.error(f"Descent exceeded {cap} steps at phi={current}")
            raise InvariantViolation(f"descent did not terminate within {cap} steps")
        selection = hn.prefix_indices(1)
        after = hecke_module(M, selection, delta)
        hn_after = hn_filtration(after)
        step = HeckeStep(
            stage=1,
            selection=selection,
            before=effective_shifts(M),
            after=effective_shifts(after),
            phi_before=current,
            phi_after=_phi_of(hn_after),
            delta=delta,
        )
        if step.phi_after >= step.phi_before or not phi_descent_bound(step, hn):
            logger.error(f"Descent step broke its bound: {step}")
            raise InvariantViolation(f"phi did not descend: {step.phi_before} -> {step.phi_after}")
        logger.debug(f"Hecke step {len(trace) + 1}: phi {step.phi_before} -> {step.phi_after}")
        trace.append(step)
        M, hn, current = after, hn_after, step.phi_after

    logger.info(f"Descent finished after {len(trace)} step(s), phi={current}")
    return Descent(module=M, trace=tuple(trace))


def optimize(vf: DiagonalValuativeFunction) -> Optimization:
    """
    Run the descent with delta normalized to 1, then rescale.
    The result satisfies Phi in [0, delta).
    """
    delta = vf.delta
    unit = WeightedAlgebra(weights=tuple(w / delta for w in vf.valuation.weights))
    normalized = free_module(unit, (c / delta for c in vf.shifts))
    result = descend(normalized, 1)
    shifts = tuple(-s.slope(unit) * delta for s in result.module.summands)
    function = vf.model_copy(update={"shifts": shifts})
    return Optimization(function=function, trace=tuple(st.scaled(delta) for st in result.trace))


def compare_optimal(vf1: DiagonalValuativeFunction, vf2: DiagonalValuativeFunction):
    """
    Classify two optimal functions on the same module.

    Returns:
        ParallelTransport(c) when vf2 = vf1 + c; HeckeRelated when a Hecke
        transform of vf2 along an HN prefix is a translate of vf1; Unrelated otherwise

    Raises:
        InputValidationError: On non-optimal input, or mismatched valuation or rank
        InvariantViolation: If Phi(vf1) + Phi(vf2) < delta and the pair is Unrelated
    """
    if vf1.valuation != vf2.valuation:
        raise InputValidationError("compare needs a common valuation")
    if vf1.rank != vf2.rank:
        raise InputValidationError(f"compare needs equal ranks, got {vf1.rank} and {vf2.rank}")
    for name, vf in (("first", vf1), ("second", vf2)):
        if not is_optimal(vf):
            raise InputValidationError(f"{name} function is not optimal (phi={phi(vf)} >= {vf.delta})")

    delta = vf1.delta
    diffs = {b - a for a, b in zip(vf1.shifts, vf2.shifts)}
    if len(diffs) == 1:
        return ParallelTransport(c=diffs.pop())

    bound = phi(vf1) + phi(vf2) + COMPARE_TRANSLATE_SLACK * delta
    hn = graded_hn(vf2)
    for k in range(1, hn.length):
        selection = hn.prefix_indices(k)
        transformed = hecke(vf2, selection)
        diffs = {b - a for a, b in zip(vf1.shifts, transformed.shifts)}
        if len(diffs) == 1:
            c = diffs.pop()
            if abs(c) <= bound:
                return HeckeRelated(stage=k, selection=selection, c=c)

    if phi(vf1) + phi(vf2) < delta:
        logger.error(f"Optimal functions {vf1.shifts} and {vf2.shifts} classified as unrelated")
        raise InvariantViolation("optimal functions with small phi must be parallel transports")
    return Unrelated()


def optimal_tangent_cone(vf: DiagonalValuativeFunction) -> HNFiltration:
    """HN filtration of the associated graded of the optimal function."""
    return graded_hn(optimize(vf).function)
