import math
from fractions import Fraction

import pytest

from core.logic.algebra import make_algebra
from core.logic.algebra.rationals import is_multiple
from core.logic.errors import InputValidationError, InvariantViolation
from core.logic.modules import AbstractSummand, FreeSummand, GradedModule, free_module, hn_filtration, slope
from core.logic.valuative import (
    HeckeRelated,
    MonomialValuation,
    ParallelTransport,
    Unrelated,
    associated_graded,
    compare_optimal,
    descend,
    graded_hn,
    hecke,
    hecke_module,
    make_function,
    optimal_tangent_cone,
    optimize,
    phi,
    phi_descent_bound,
    translate,
)

VALUATIONS = {
    Fraction(1): ("1", "2"),
    Fraction(1, 2): ("1/2", "1"),
    Fraction(3): ("3", "6"),
}


def _random_function(rng, delta=None):
    if delta is None:
        delta = list(VALUATIONS)[int(rng.integers(0, len(VALUATIONS)))]
    v = MonomialValuation(weights=VALUATIONS[delta])
    rank = int(rng.integers(1, 9))
    return make_function(v, [delta * int(rng.integers(-10, 11)) for _ in range(rank)])


def test_hecke_on_the_plane(v0, v1):
    after = hecke(v1, [0])
    assert after.shifts == (1, 1)
    assert after == translate(v0, 1)


@pytest.mark.parametrize("selection", [[], [0, 1], [1], [0, 0], [5]])
def test_hecke_rejects_bad_selections(v1, selection):
    with pytest.raises(InputValidationError, match="not a saturated HN-compatible submodule"):
        hecke(v1, selection)


def test_repeated_hecke_twists_the_quotient():
    v = MonomialValuation(weights=("1", "1"))
    vf = make_function(v, ["0", "5"])
    for _ in range(3):
        vf = hecke(vf, [0])
    assert vf.shifts == (0, 2)
    assert associated_graded(vf) == free_module(v.algebra, ["0", "2"])


def test_hecke_module_twists_abstract_blocks():
    cone = make_algebra(["1", "1"])
    M = GradedModule(algebra=cone, free=(FreeSummand(shift=0),),
                     abstract=(AbstractSummand(rank=1, degree=-2, label="T/R"),))
    after = hecke_module(M, [0], 1)
    assert after.free == M.free
    assert slope(GradedModule(algebra=cone, abstract=after.abstract)) == -1


@pytest.mark.slow
def test_hecke_matches_split_module_form(rng):
    for _ in range(100):
        vf = _random_function(rng)
        hn = graded_hn(vf)
        if hn.length < 2:
            continue
        k = int(rng.integers(1, hn.length))
        selection = hn.prefix_indices(k)
        expected = hecke_module(associated_graded(vf), selection, vf.delta)
        assert associated_graded(hecke(vf, selection)) == expected


def test_optimize_plane(v0, v1):
    result = optimize(v1)
    assert result.steps == 1
    assert result.function.shifts == (1, 1)
    step = result.trace[0]
    assert (step.phi_before, step.phi_after) == (1, 0)
    assert step.selection == (0,)
    assert optimize(v0).steps == 0


def test_optimize_three_steps():
    vf = make_function(MonomialValuation(weights=("1",)), ["0", "1", "3"])
    result = optimize(vf)
    assert [step.after for step in result.trace] == [(0, 0, 2), (0, 0, 1), (0, 0, 0)]
    assert [step.phi_before for step in result.trace] == [3, 2, 1]
    assert phi(result.function) == 0


def test_phi_descent_bound_examples(v1):
    step = optimize(v1).trace[0]
    assert phi_descent_bound(step, graded_hn(v1))

    vf = make_function(MonomialValuation(weights=("1",)), ["0", "1", "3"])
    first = optimize(vf).trace[0]
    assert first.phi_after == 2
    assert phi_descent_bound(first, graded_hn(vf))

    with pytest.raises(InputValidationError, match="bound requires"):
        phi_descent_bound(step, hn_filtration(free_module(v1.valuation.algebra, ["0", "0"])))


@pytest.mark.slow
def test_descent_on_random_functions(rng):
    for _ in range(300):
        vf = _random_function(rng)
        delta = vf.delta
        phi0 = phi(vf)
        result = optimize(vf)

        assert result.steps <= math.ceil(phi0 / delta) + vf.rank
        for step in result.trace:
            assert step.phi_before >= delta
            assert step.phi_after < step.phi_before
            hn_before = hn_filtration(free_module(vf.valuation.algebra, step.before))
            assert phi_descent_bound(step, hn_before)
            assert is_multiple(step.phi_after, delta)
            assert all(is_multiple(mu, delta) for mu in hn_before.quotient_slopes)

        final = phi(result.function)
        assert 0 <= final < delta


@pytest.mark.slow
def test_optimal_functions_from_translates_are_parallel(rng):
    for _ in range(100):
        vf = _random_function(rng)
        k = int(rng.integers(-5, 6))
        shifted = translate(vf, k * vf.delta)
        a, b = optimize(vf).function, optimize(shifted).function
        assert compare_optimal(a, b) == ParallelTransport(c=k * vf.delta)
        assert b == translate(a, k * vf.delta)
        assert [st.rank for st in optimal_tangent_cone(vf).stages] == \
            [st.rank for st in optimal_tangent_cone(shifted).stages]


def test_compare_optimal_examples(v0, v1):
    assert compare_optimal(v0, translate(v0, 3)) == ParallelTransport(c=3)
    result = optimize(v1).function
    assert compare_optimal(v0, result) == ParallelTransport(c=1)
    assert compare_optimal(result, v0) == ParallelTransport(c=-1)


def test_compare_optimal_rejects_bad_inputs(v0, v1):
    with pytest.raises(InputValidationError, match="not optimal"):
        compare_optimal(v0, v1)
    with pytest.raises(InputValidationError, match="equal ranks"):
        compare_optimal(v0, make_function(v0.valuation, ["0"]))
    with pytest.raises(InputValidationError, match="common valuation"):
        compare_optimal(v0, make_function(MonomialValuation(weights=("1", "1")), ["0", "0"]))


def test_compare_classifier_branches(monkeypatch):
    # relax the optimality precondition to reach the non-transport branches
    monkeypatch.setattr("core.logic.valuative.descent.is_optimal", lambda vf: True)
    v = MonomialValuation(weights=("1",))
    related = compare_optimal(make_function(v, ["2", "2"]), make_function(v, ["0", "1"]))
    assert related == HeckeRelated(stage=1, selection=(0,), c=-2)
    assert compare_optimal(make_function(v, ["0", "5"]), make_function(v, ["0", "1"])) == Unrelated()


def test_descent_cap_violation_is_reported(monkeypatch, v1):
    monkeypatch.setattr("core.logic.valuative.descent.DESCENT_CAP_SLACK", -100)
    with pytest.raises(InvariantViolation, match="did not terminate"):
        optimize(v1)


def test_descend_on_cone_module():
    cone = make_algebra(["1", "1"])
    M = GradedModule(algebra=cone, free=(FreeSummand(shift=0),),
                     abstract=(AbstractSummand(rank=1, degree="-4/3"),))
    result = descend(M, 1)
    assert len(result.trace) == 1
    assert result.trace[0].after == (0, Fraction(1, 3))
