"""
Problem files: the JSON input accepted by the CLI and the HTTP endpoints.

A problem names an ambient algebra and, depending on the command, a split
module, one or two diagonal valuative functions and a few scalar parameters.
All numbers are exact rational strings ("p/q" or "p"); integers are accepted.

Example
-------
{
  "algebra": {"weights": ["1", "2"]},
  "valuative_function": {"shifts": ["1", "2"]},
  "parameters": {"selection": [0]}
}
"""

from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from core.logic.algebra import Rational, WeightedAlgebra, make_algebra
from core.logic.errors import InputValidationError
from core.logic.modules import AbstractSummand, FreeSummand, GradedModule, TorsionPiece
from core.logic.valuative import DiagonalValuativeFunction, MonomialValuation, make_function

FunctionSlot = Literal['valuative_function', 'other_function']


class AlgebraSection(BaseModel):
    weights: Tuple[Rational, ...] = Field(..., description="Grading weights of the variables")

    model_config = ConfigDict(extra='forbid')

    @field_validator("weights")
    def _check_weights(cls, v):
        return make_algebra(v).weights


class ModuleSection(BaseModel):
    free: Tuple[Rational, ...] = Field((), description="Shifts lambda of the summands R(-lambda)")
    torsion: Tuple[TorsionPiece, ...] = Field((), description="Torsion pieces on coordinate hyperplanes")
    abstract: Tuple[AbstractSummand, ...] = Field((), description="Stable blocks (rank, degree, label)")

    model_config = ConfigDict(extra='forbid')


class ValuationSection(BaseModel):
    weights: Tuple[Rational, ...] = Field(..., description="Values v(x_i)")

    model_config = ConfigDict(extra='forbid')


class FunctionSection(BaseModel):
    """A diagonal valuative function; the valuation defaults to the algebra weights."""
    valuation: Optional[ValuationSection] = Field(None, description="Monomial valuation")
    shifts: Tuple[Rational, ...] = Field(..., description="Values on the basis vectors")
    rank: Optional[int] = Field(None, ge=1, description="Declared rank, checked against the shifts")

    model_config = ConfigDict(extra='forbid')

    @model_validator(mode="after")
    def _check_rank(self):
        if not self.shifts:
            raise ValueError("shifts must be a nonempty list")
        if self.rank is not None and self.rank != len(self.shifts):
            raise ValueError(f"declared rank {self.rank} but {len(self.shifts)} shifts given")
        return self


class Parameters(BaseModel):
    x: Optional[Rational] = Field(None, description="Grading bound for count")
    T: Optional[Rational] = Field(None, description="Integration bound for cesaro")
    genus: Optional[int] = Field(None, ge=0, description="Curve genus for cone")
    degL: Optional[int] = Field(None, ge=1, description="deg(L) for cone")
    selection: Optional[Tuple[int, ...]] = Field(None, description="0-based summand indices for hecke")
    twist: Optional[Rational] = Field(None, description="Twist applied by module")
    vector: Optional[Tuple[str, ...]] = Field(None, description="Polynomials evaluated by phi")

    model_config = ConfigDict(extra='forbid')


class ProblemFile(BaseModel):
    algebra: Optional[AlgebraSection] = Field(None, description="Ambient weighted algebra")
    module: Optional[ModuleSection] = Field(None, description="Split graded module")
    valuative_function: Optional[FunctionSection] = Field(None, description="Primary function")
    other_function: Optional[FunctionSection] = Field(None, description="Second function for compare")
    parameters: Parameters = Field(default_factory=Parameters, description="Scalar parameters")

    model_config = ConfigDict(extra='forbid')

    @model_validator(mode="after")
    def _check_consistency(self):
        n = self._arity()
        if self.module is not None and n is not None:
            for piece in self.module.torsion:
                if piece.axis > n:
                    raise ValueError(f"torsion axis {piece.axis} outside 1..{n}")
        for slot in ('valuative_function', 'other_function'):
            section = getattr(self, slot)
            if section is not None and section.valuation is not None and n is not None:
                if len(section.valuation.weights) != n:
                    raise ValueError(f"{slot} valuation has {len(section.valuation.weights)} weights, expected {n}")
        return self

    def _arity(self) -> Optional[int]:
        return None if self.algebra is None else len(self.algebra.weights)

    def to_algebra(self) -> WeightedAlgebra:
        if self.algebra is None:
            raise InputValidationError("missing section algebra")
        return WeightedAlgebra(weights=self.algebra.weights)

    def to_module(self) -> GradedModule:
        if self.module is None:
            raise InputValidationError("missing section module")
        return GradedModule(
            algebra=self.to_algebra(),
            free=tuple(FreeSummand(shift=s) for s in self.module.free),
            torsion=self.module.torsion,
            abstract=self.module.abstract,
        )

    def to_function(self, slot: FunctionSlot = 'valuative_function') -> DiagonalValuativeFunction:
        section = getattr(self, slot)
        if section is None:
            raise InputValidationError(f"missing section {slot}")
        if section.valuation is not None:
            valuation = MonomialValuation(weights=section.valuation.weights)
        else:
            valuation = MonomialValuation.of(self.to_algebra())
        return make_function(valuation, section.shifts)


def require_parameter(problem: ProblemFile, name: str):
    value = getattr(problem.parameters, name)
    if value is None:
        raise InputValidationError(f"missing parameter {name}")
    return value


def selection_list(problem: ProblemFile) -> List[int]:
    return list(require_parameter(problem, "selection"))
