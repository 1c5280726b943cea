"""
Building blocks of split graded modules.

A split module is a direct sum of shifted free rank-1 summands R(-lambda),
torsion pieces supported on coordinate hyperplanes, and abstract stable blocks
that carry only (rank, degree).
"""

from fractions import Fraction
from typing import Annotated, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from core.logic.algebra import Rational, WeightedAlgebra, volume


class FreeSummand(BaseModel):
    """
    The summand R(-shift). Its slope is -shift.
    """
    kind: Literal['free'] = Field('free', description="Summand discriminator")
    shift: Rational = Field(..., description="lambda in R(-lambda)")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def rank(self) -> int:
        return 1

    def slope(self, algebra: WeightedAlgebra) -> Fraction:
        return -self.shift

    def degree(self, algebra: WeightedAlgebra) -> Fraction:
        return -self.shift * volume(algebra)

    def twisted(self, amount: Fraction, algebra: WeightedAlgebra) -> "FreeSummand":
        """R(-shift)(amount) = R(-(shift - amount))."""
        return FreeSummand(shift=self.shift - amount)


class AbstractSummand(BaseModel):
    """
    A stable block known only through its rank and degree; never decomposed.
    Its slope is degree / (rank * a_top(R)).
    """
    kind: Literal['abstract'] = Field('abstract', description="Summand discriminator")
    rank: int = Field(..., ge=1, description="Rank of the block")
    degree: Rational = Field(..., description="Degree of the block")
    label: str = Field('', description="Free-text label")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def slope(self, algebra: WeightedAlgebra) -> Fraction:
        return self.degree / (self.rank * volume(algebra))

    def twisted(self, amount: Fraction, algebra: WeightedAlgebra) -> "AbstractSummand":
        return self.model_copy(update={"degree": self.degree + amount * self.rank * volume(algebra)})


class TorsionPiece(BaseModel):
    """
    Torsion supported on the hyperplane P = (x_axis), with length(H^0_P(Q)) = length.
    The shift only positions the piece in the grading; it does not enter the degree.
    """
    axis: int = Field(..., ge=1, description="1-based coordinate index selecting P = (x_axis)")
    length: int = Field(..., ge=1, description="length(H^0_P(Q))")
    shift: Rational = Field(Fraction(0), description="Grading position of the piece")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


Summand = Annotated[Union[FreeSummand, AbstractSummand], Field(discriminator='kind')]


def effective_shift(summand, algebra: WeightedAlgebra) -> Fraction:
    """The free twist with the same slope: -slope."""
    return -summand.slope(algebra)


def summand_sort_key(summand, algebra: WeightedAlgebra) -> Tuple:
    """Canonical order inside an HN stage: shift ascending, then label."""
    label = getattr(summand, 'label', '')
    return (effective_shift(summand, algebra), label, summand.kind, summand.rank)
