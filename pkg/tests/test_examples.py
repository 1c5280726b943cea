import json
import math
from fractions import Fraction

import pytest

from core.logic.errors import InputValidationError
from core.logic.modules import hn_filtration
from core.logic.valuative import (
    ParallelTransport,
    cone_example,
    expected_grid,
    plane_example,
    verify_examples,
)


@pytest.mark.parametrize("g", range(2, 7))
@pytest.mark.parametrize("degL", [1, 2, 3])
def test_cone_twist_count_matches_floor(g, degL):
    result = cone_example(g, degL)
    residual = Fraction(2 * g - 2, degL)
    assert result.optimal_shift == math.floor(residual)
    assert result.phi == residual - math.floor(residual)
    assert len(result.trace) == result.optimal_shift


@pytest.mark.parametrize("g, degL, shift, phi", [
    (2, 1, 2, Fraction(0)),
    (2, 3, 0, Fraction(2, 3)),
    (3, 3, 1, Fraction(1, 3)),
    (5, 2, 4, Fraction(0)),
])
def test_cone_spot_values(g, degL, shift, phi):
    result = cone_example(g, degL)
    assert (result.optimal_shift, result.phi) == (shift, phi)


def test_cone_gr_keeps_the_trivial_summand():
    result = cone_example(3, 3)
    hn = hn_filtration(result.gr)
    assert hn.quotient_slopes == [0, Fraction(-1, 3)]
    assert hn.stages[1].summands[0].label == "T/R"


@pytest.mark.parametrize("g", [0, 1])
def test_low_genus_cone_is_already_optimal(g):
    for degL in (1, 2, 3):
        result = cone_example(g, degL)
        assert result.optimal_shift == 0
        assert result.phi == 0
        assert result.trace == ()
        assert result.gr.abstract[0].rank == 2


@pytest.mark.parametrize("g, degL", [(-1, 1), (2, 0), (2, -3), (True, 1), (2, "1"), (1.5, 2)])
def test_cone_rejects_invalid_inputs(g, degL):
    with pytest.raises(InputValidationError):
        cone_example(g, degL)


def test_plane_example():
    scenario = plane_example()
    assert scenario.phi_v1 == 1
    assert scenario.phi_v0 == 0
    assert scenario.hn_v1.quotient_slopes == [-1, -2]
    assert len(scenario.trace) == 1
    assert scenario.optimal.shifts == (1, 1)
    assert scenario.comparison == ParallelTransport(c=1)


def test_expected_grid_covers_every_pair():
    grid = expected_grid()
    assert (0, 1) in grid and (5, 3) in grid
    assert len(grid) == len(set(grid)) == 18


def test_shipped_fixture_verifies(expected_fixture):
    checks = verify_examples(json.loads(expected_fixture.read_text()))
    assert checks
    assert all(c.passed for c in checks), [c for c in checks if not c.passed]


def test_corrupted_fixture_fails(expected_fixture):
    data = json.loads(expected_fixture.read_text())
    data["plane"]["steps"] = 2
    data["cone"][8]["phi"] = "1/3"
    del data["cone"][0]

    failed = {c.name for c in verify_examples(data) if not c.passed}
    assert failed == {
        "plane.steps",
        "cone[g=2,degL=3].phi",
        "cone[g=0,degL=1].present",
    }


def test_malformed_cone_row_is_rejected(expected_fixture):
    data = json.loads(expected_fixture.read_text())
    data["cone"].append({"genus": "two"})
    with pytest.raises(InputValidationError, match="malformed cone entry"):
        verify_examples(data)
