"""
Weighted polynomial algebras k[x_1^(g_1), ..., x_n^(g_n)] and their closed-form
Riemann-Roch coefficients.
"""

import math
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.logic.algebra.rationals import Rational, parse_rational
from core.logic.errors import InputValidationError


class WeightedAlgebra(BaseModel):
    """
    The graded algebra k[x_1, ..., x_n] with deg(x_i) = weights[i].

    Fields:
        weights: positive rational grading weights, in variable order
    """
    weights: Tuple[Rational, ...] = Field(..., description="Positive rational weights (g_1, ..., g_n)")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def _check_weights(self):
        _validate_weights(self.weights)
        return self

    @property
    def n(self) -> int:
        """Krull dimension."""
        return len(self.weights)

    @property
    def weight_product(self) -> Fraction:
        return math.prod(self.weights, start=Fraction(1))

    @property
    def weight_sum(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def __str__(self) -> str:
        names = variable_names(self.n)
        inner = ", ".join(f"{x}^({w})" for x, w in zip(names, self.weights))
        return f"k[{inner}]"


class RRCoefficients(BaseModel):
    """
    Asymptotic Riemann-Roch coefficients: dim(S_{<=x}) ~ a_top x^n/n! + a_subtop x^(n-1)/(n-1)!.
    """
    a_top: Rational = Field(..., description="Leading coefficient a_n (the volume)")
    a_subtop: Rational = Field(..., description="Subleading coefficient a_(n-1)")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


def variable_names(n: int) -> Tuple[str, ...]:
    """Variable names used for display and polynomial parsing."""
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i}" for i in range(1, n + 1))


def _validate_weights(weights: Sequence[Fraction]) -> None:
    if len(weights) == 0:
        raise InputValidationError("weights must be a nonempty list")
    for i, w in enumerate(weights):
        if w <= 0:
            raise InputValidationError(f"weight must be positive (index {i}: {w})")


def make_algebra(weights: Sequence) -> WeightedAlgebra:
    """
    Build a weighted polynomial algebra.

    Args:
        weights: positive rationals, as Fractions, ints or "p/q" strings

    Returns:
        The validated WeightedAlgebra

    Raises:
        InputValidationError: If the list is empty or a weight is not positive
    """
    parsed = tuple(parse_rational(w) for w in weights)
    _validate_weights(parsed)
    return WeightedAlgebra(weights=parsed)


def coefficients(S: WeightedAlgebra) -> RRCoefficients:
    """a_top = 1/prod(g_i), a_subtop = sum(g_i) / (2 prod(g_i))."""
    a_top = 1 / S.weight_product
    return RRCoefficients(a_top=a_top, a_subtop=S.weight_sum * a_top / 2)


def volume(S: WeightedAlgebra) -> Fraction:
    return coefficients(S).a_top


def log_discrepancy(S: WeightedAlgebra) -> Fraction:
    """A(v) of the monomial valuation induced by the grading: the weight sum."""
    return S.weight_sum


def quotient_algebra(S: WeightedAlgebra, axis: int) -> Optional[WeightedAlgebra]:
    """
    R/(x_axis) as a weighted algebra, with ``axis`` 1-based.

    Returns None for n = 1, where the quotient is the ground field.

    Raises:
        InputValidationError: If ``axis`` is outside 1..n
    """
    if axis < 1 or axis > S.n:
        raise InputValidationError(f"axis {axis} outside 1..{S.n}")
    if S.n == 1:
        return None
    return WeightedAlgebra(weights=S.weights[:axis - 1] + S.weights[axis:])


def quotient_volume(S: WeightedAlgebra, axis: int) -> Fraction:
    """a_top(R/(x_axis)) = 1/prod_{j != axis} g_j; 1 when n = 1."""
    Q = quotient_algebra(S, axis)
    return Fraction(1) if Q is None else volume(Q)
