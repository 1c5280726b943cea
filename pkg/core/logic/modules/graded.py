"""
Split graded modules over a weighted algebra and their exact invariants.

Degrees are evaluated through the closed form

    deg(M) = sum_torsion length * a_top(R/P) - (sum lambda_i) a_top(R) + sum abstract degrees,

and the counting-function estimators below provide an independent check of it.
"""

import logging
import math
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.logic.algebra import (
    WeightedAlgebra,
    coefficients,
    dim_leq,
    parse_rational,
    quotient_algebra,
    quotient_volume,
    step_integral,
    volume,
)
from core.logic.errors import InputValidationError, InvariantViolation
from core.logic.modules.summands import AbstractSummand, FreeSummand, TorsionPiece

logger = logging.getLogger(__name__)


class GradedModule(BaseModel):
    """
    M = (+)_i R(-lambda_i) (+) torsion (+) abstract blocks, over ``algebra``.

    Fields:
        algebra: the ambient weighted algebra R
        free: shifted free rank-1 summands
        torsion: pieces supported on coordinate hyperplanes
        abstract: stable blocks given by (rank, degree)
    """
    algebra: WeightedAlgebra = Field(..., description="Ambient weighted algebra")
    free: Tuple[FreeSummand, ...] = Field((), description="Free summands R(-lambda)")
    torsion: Tuple[TorsionPiece, ...] = Field((), description="Torsion pieces")
    abstract: Tuple[AbstractSummand, ...] = Field((), description="Abstract stable blocks")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def _check_axes(self):
        for piece in self.torsion:
            if piece.axis > self.algebra.n:
                raise InputValidationError(
                    f"torsion axis {piece.axis} outside 1..{self.algebra.n}"
                )
        return self

    @property
    def rank(self) -> int:
        return len(self.free) + sum(a.rank for a in self.abstract)

    @property
    def a_top(self) -> Fraction:
        """a_n(M) = rank(M) a_n(R)."""
        return self.rank * volume(self.algebra)

    @property
    def summands(self) -> tuple:
        """Torsion-free summands, free ones first; indices into this tuple are selections."""
        return self.free + self.abstract

    @property
    def is_torsion_free(self) -> bool:
        return len(self.torsion) == 0


def free_module(algebra: WeightedAlgebra, shifts: Iterable) -> GradedModule:
    """(+)_i R(-shifts[i])."""
    return GradedModule(
        algebra=algebra,
        free=tuple(FreeSummand(shift=parse_rational(s)) for s in shifts),
    )


def from_summands(algebra: WeightedAlgebra, summands: Iterable, torsion: Iterable = ()) -> GradedModule:
    summands = tuple(summands)
    return GradedModule(
        algebra=algebra,
        free=tuple(s for s in summands if s.kind == 'free'),
        abstract=tuple(s for s in summands if s.kind == 'abstract'),
        torsion=tuple(torsion),
    )


def degree(M: GradedModule) -> Fraction:
    R = M.algebra
    torsion_part = sum(
        (p.length * quotient_volume(R, p.axis) for p in M.torsion), Fraction(0)
    )
    shift_sum = sum((s.shift for s in M.free), Fraction(0))
    abstract_part = sum((a.degree for a in M.abstract), Fraction(0))
    return torsion_part - shift_sum * volume(R) + abstract_part


def slope(M: GradedModule) -> Fraction:
    """
    mu(M) = deg(M) / a_n(M).

    Raises:
        InputValidationError: If M has rank 0
    """
    if M.rank == 0:
        raise InputValidationError("slope undefined for torsion module")
    return degree(M) / M.a_top


def twist(M: GradedModule, amount) -> GradedModule:
    """M(amount): every grading position moves down by ``amount``."""
    amount = parse_rational(amount)
    R = M.algebra
    return GradedModule(
        algebra=R,
        free=tuple(s.twisted(amount, R) for s in M.free),
        torsion=tuple(p.model_copy(update={"shift": p.shift - amount}) for p in M.torsion),
        abstract=tuple(a.twisted(amount, R) for a in M.abstract),
    )


def dual(M: GradedModule) -> GradedModule:
    """
    Hom_R(M, R) for a free split module: R(-lambda) -> R(lambda).

    Raises:
        InputValidationError: If M has torsion or abstract summands
    """
    if M.torsion or M.abstract:
        raise InputValidationError("dual supported only on free split modules")
    return free_module(M.algebra, (-s.shift for s in M.free))


def degree_of_dual(M: GradedModule) -> Fraction:
    """
    deg(M^dual) read off 0 -> M^dual -> (+) R(lambda_i) -> Ext^1(Q, R) -> 0.

    Raises:
        InvariantViolation: If the result disagrees with -deg(M)
    """
    R = M.algebra
    free_part = sum((s.shift for s in M.free), Fraction(0)) * volume(R)
    torsion_part = sum(
        (p.length * quotient_volume(R, p.axis) for p in M.torsion), Fraction(0)
    )
    abstract_part = sum((a.degree for a in M.abstract), Fraction(0))
    out = free_part - torsion_part - abstract_part
    if out != -degree(M):
        logger.error(f"degree_of_dual mismatch: {out} vs {-degree(M)}")
        raise InvariantViolation(f"degree of dual {out} is not -deg(M) = {-degree(M)}")
    return out


def direct_sum(M: GradedModule, N: GradedModule) -> GradedModule:
    if M.algebra != N.algebra:
        raise InputValidationError("direct sum needs a common ambient algebra")
    return GradedModule(
        algebra=M.algebra,
        free=M.free + N.free,
        torsion=M.torsion + N.torsion,
        abstract=M.abstract + N.abstract,
    )


def _check_indices(M: GradedModule, indices: Sequence[int]) -> Tuple[int, ...]:
    total = len(M.summands)
    out = tuple(indices)
    for i in out:
        if not isinstance(i, int) or isinstance(i, bool) or i < 0 or i >= total:
            raise InputValidationError(f"summand index {i!r} outside 0..{total - 1}")
    if len(set(out)) != len(out):
        raise InputValidationError("summand indices must be distinct")
    return out


def submodule(M: GradedModule, indices: Sequence[int]) -> GradedModule:
    """The split submodule spanned by the selected torsion-free summands (0-based)."""
    indices = _check_indices(M, indices)
    return from_summands(M.algebra, (M.summands[i] for i in sorted(indices)))


def complement(M: GradedModule, indices: Sequence[int]) -> GradedModule:
    """M / submodule(M, indices); torsion stays in the quotient."""
    chosen = set(_check_indices(M, indices))
    rest = (s for i, s in enumerate(M.summands) if i not in chosen)
    return from_summands(M.algebra, rest, M.torsion)


def module_dim_leq(M: GradedModule, x) -> int:
    """
    dim_k(M_{<=x}) for a module without abstract blocks.

    Raises:
        InputValidationError: If M has abstract summands
    """
    if M.abstract:
        raise InputValidationError("abstract summands have no counting function")
    x = parse_rational(x)
    R = M.algebra
    total = sum(dim_leq(R, x - s.shift) for s in M.free)
    for p in M.torsion:
        Q = quotient_algebra(R, p.axis)
        if Q is None:
            total += p.length if x >= p.shift else 0
        else:
            total += p.length * dim_leq(Q, x - p.shift)
    return total


def _shifted_integral(R, shift: Fraction, T: Fraction) -> Fraction:
    """Integral over [0, T] of u -> dim_leq(R, u - shift)."""
    return step_integral(R, T - shift) - step_integral(R, -shift)


def _torsion_integral(R: WeightedAlgebra, piece: TorsionPiece, T: Fraction) -> Fraction:
    Q = quotient_algebra(R, piece.axis)
    if Q is None:
        return piece.length * max(Fraction(0), T - max(piece.shift, Fraction(0)))
    return piece.length * _shifted_integral(Q, piece.shift, T)


def estimate_subtop(M: GradedModule, T) -> Fraction:
    """
    n!/T^n * integral_0^T (dim(M_{<=x}) - a_n(M) x^n/n!) dx.

    Converges to a_{n-1}(M) at rate O(1/T).
    """
    T = parse_rational(T)
    if T <= 0:
        raise InputValidationError(f"T must be positive, got {T}")
    if M.abstract:
        raise InputValidationError("abstract summands have no counting function")
    R = M.algebra
    n = R.n
    integral = sum((_shifted_integral(R, s.shift, T) for s in M.free), Fraction(0))
    integral += sum((_torsion_integral(R, p, T) for p in M.torsion), Fraction(0))
    integral -= M.a_top * T ** (n + 1) / math.factorial(n + 1)
    return integral * math.factorial(n) / T ** n


def estimate_degree(M: GradedModule, T) -> Fraction:
    """estimate_subtop(M, T) - rank(M) a_{n-1}(R)."""
    return estimate_subtop(M, T) - M.rank * coefficients(M.algebra).a_subtop
