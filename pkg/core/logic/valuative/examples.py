"""
Worked examples: the plane with the weighted tangent valuation, and cones
over curves embedded by a line bundle L.

For a curve of genus g >= 2 the tangent module of the cone splits as
R (+) T/R with mu(T/R) = (2 - 2g)/deg L; descending along R twists T/R up
floor((2g - 2)/deg L) times before Phi drops below 1. For g in {0, 1} the
extension is non-split and T is semistable, so it is modelled as one block.
"""

import logging
import math
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from core.constants import VERIFY_DEGREE_MAX, VERIFY_GENUS_MAX
from core.logic.algebra import Rational, format_rational, make_algebra, volume
from core.logic.errors import InputValidationError, InvariantViolation
from core.logic.modules import AbstractSummand, FreeSummand, GradedModule, HNFiltration, hn_filtration
from core.logic.valuative.functions import DiagonalValuativeFunction, graded_hn, make_function, phi
from core.logic.valuative.descent import (
    Comparison,
    HeckeStep,
    compare_optimal,
    descend,
    optimize,
)
from core.logic.valuative.valuation import MonomialValuation

logger = logging.getLogger(__name__)

CONE_ALGEBRA = make_algebra(["1", "1"])


class ConeResult(BaseModel):
    genus: int
    degL: int
    optimal_shift: int = Field(..., description="Number of twists l applied to T/R")
    phi: Rational = Field(..., description="Phi of the optimal function")
    gr: GradedModule = Field(..., description="Associated graded of the optimal function")
    trace: Tuple[HeckeStep, ...] = ()

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class PlaneExample(BaseModel):
    v0: DiagonalValuativeFunction
    v1: DiagonalValuativeFunction
    hn_v1: HNFiltration
    phi_v0: Rational
    phi_v1: Rational
    optimal: DiagonalValuativeFunction
    trace: Tuple[HeckeStep, ...]
    comparison: Comparison

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class Check(BaseModel):
    name: str
    expected: Any
    actual: Any
    passed: bool


def _require_int(name: str, value, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InputValidationError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return value


def cone_example(g: int, degL: int) -> ConeResult:
    """
    Raises:
        InputValidationError: If g < 0 or degL < 1
    """
    g = _require_int("genus", g, 0)
    degL = _require_int("degL", degL, 1)
    a_top = volume(CONE_ALGEBRA)
    quotient_slope = Fraction(2 - 2 * g, degL)

    if g <= 1:
        tangent = AbstractSummand(rank=2, degree=quotient_slope * a_top, label="T")
        M = GradedModule(algebra=CONE_ALGEBRA, abstract=(tangent,))
    else:
        quotient = AbstractSummand(rank=1, degree=quotient_slope * a_top, label="T/R")
        M = GradedModule(algebra=CONE_ALGEBRA, free=(FreeSummand(shift=Fraction(0)),), abstract=(quotient,))

    result = descend(M, 1)
    final_hn = hn_filtration(result.module)
    shift = len(result.trace)
    expected_shift = math.floor(Fraction(2 * g - 2, degL)) if g >= 2 else 0
    if shift != expected_shift:
        raise InvariantViolation(f"cone g={g} degL={degL}: {shift} twists, expected {expected_shift}")
    logger.info(f"Cone example g={g} degL={degL}: l={shift}")
    return ConeResult(
        genus=g,
        degL=degL,
        optimal_shift=shift,
        phi=final_hn.mu_max - final_hn.mu_min,
        gr=result.module,
        trace=result.trace,
    )


def plane_example() -> PlaneExample:
    """
    k[x, y] with v(x) = 1, v(y) = 2 on M = R^2: v1 has shifts (1, 2), and one
    Hecke transform along gr(-1) gives v0 + 1.
    """
    v = MonomialValuation(weights=(Fraction(1), Fraction(2)))
    v0 = make_function(v, ["0", "0"])
    v1 = make_function(v, ["1", "2"])
    result = optimize(v1)
    return PlaneExample(
        v0=v0,
        v1=v1,
        hn_v1=graded_hn(v1),
        phi_v0=phi(v0),
        phi_v1=phi(v1),
        optimal=result.function,
        trace=result.trace,
        comparison=compare_optimal(v0, result.function),
    )


def expected_grid() -> List[Tuple[int, int]]:
    return [
        (g, d)
        for g in range(0, VERIFY_GENUS_MAX + 1)
        for d in range(1, VERIFY_DEGREE_MAX + 1)
    ]


def verify_examples(expected: Dict[str, Any]) -> List[Check]:
    """
    Compare the plane scenario and the cone grid with the expected values.

    ``expected`` has a "plane" object (steps, final_shifts, phi_before,
    phi_after, transport) and a "cone" list of
    {genus, degL, optimal_shift, phi} entries.
    """
    checks: List[Check] = []

    def record(name, want, got):
        checks.append(Check(name=name, expected=want, actual=got, passed=want == got))

    plane = expected.get("plane", {})
    scenario = plane_example()
    record("plane.steps", plane.get("steps"), len(scenario.trace))
    record("plane.final_shifts", plane.get("final_shifts"),
           [format_rational(c) for c in scenario.optimal.shifts])
    record("plane.phi_before", plane.get("phi_before"), format_rational(scenario.phi_v1))
    record("plane.phi_after", plane.get("phi_after"), format_rational(phi(scenario.optimal)))
    transport = scenario.comparison.c if scenario.comparison.kind == 'parallel_transport' else None
    record("plane.transport", plane.get("transport"),
           None if transport is None else format_rational(transport))

    table = {}
    for row in expected.get("cone", []):
        try:
            table[(int(row["genus"]), int(row["degL"]))] = row
        except (KeyError, TypeError, ValueError) as e:
            raise InputValidationError(f"malformed cone entry {row!r}") from e

    for g, d in expected_grid():
        row = table.get((g, d))
        out = cone_example(g, d)
        name = f"cone[g={g},degL={d}]"
        if row is None:
            record(f"{name}.present", True, False)
            continue
        record(f"{name}.optimal_shift", row.get("optimal_shift"), out.optimal_shift)
        record(f"{name}.phi", row.get("phi"), format_rational(out.phi))

    failed = [c for c in checks if not c.passed]
    level = logging.WARNING if failed else logging.INFO
    logger.log(level, f"verify-examples: {len(checks) - len(failed)}/{len(checks)} checks passed")
    return checks
