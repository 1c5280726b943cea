"""
Shared pytest fixtures for gradestab tests: standard algebras, the plane
functions, seeded random generators, a numpy lattice-point oracle and the
service/HTTP entry points.
"""
import math
import os
import pathlib
from fractions import Fraction

import numpy as np
import pytest

# Set test environment variables
os.environ.setdefault('ENVIRONMENT', 'testing')
os.environ.setdefault('ALLOWED_ORIGINS', 'http://localhost:3000')

from core.logic.algebra import make_algebra
from core.logic.valuative import MonomialValuation, make_function
from routes.services import get_service_worker

ROOT = pathlib.Path(__file__).resolve().parents[1]
PROBLEMS = ROOT / 'fixtures' / 'problems'
EXPECTED = ROOT / 'fixtures' / 'expected_examples.json'


def brute_count(weights, x) -> int:
    """#{k in Z_{>=0}^n : sum k_i w_i <= x} by enumerating the first n-1 exponents."""
    x = Fraction(x)
    L = 1
    for w in weights:
        L = math.lcm(L, Fraction(w).denominator)
    g = [int(Fraction(w) * L) for w in weights]
    bound = math.floor(x * L)
    if bound < 0:
        return 0
    if len(g) == 1:
        return bound // g[0] + 1
    axes = [np.arange(bound // gi + 1, dtype=np.int64) for gi in g[:-1]]
    grids = np.meshgrid(*axes, indexing='ij')
    used = sum(gi * grid for gi, grid in zip(g, grids))
    rest = bound - used
    return int(np.where(rest >= 0, rest // g[-1] + 1, 0).sum())


def random_rational(rng, low: int, high: int, max_den: int = 7) -> Fraction:
    """A rational in [low, high] with denominator at most max_den."""
    den = int(rng.integers(1, max_den + 1))
    return Fraction(int(rng.integers(low * den, high * den + 1)), den)


@pytest.fixture
def rng():
    """Seeded generator so property checks are reproducible."""
    return np.random.default_rng(20240611)


@pytest.fixture
def plane_algebra():
    """k[x^(1), y^(2)]."""
    return make_algebra(["1", "2"])


@pytest.fixture
def algebra_23():
    return make_algebra(["2", "3"])


@pytest.fixture
def line_algebra():
    return make_algebra(["1"])


@pytest.fixture
def plane_valuation():
    return MonomialValuation(weights=(Fraction(1), Fraction(2)))


@pytest.fixture
def v0(plane_valuation):
    return make_function(plane_valuation, ["0", "0"])


@pytest.fixture
def v1(plane_valuation):
    return make_function(plane_valuation, ["1", "2"])


@pytest.fixture
def service_worker():
    return get_service_worker()


@pytest.fixture
def problems_dir() -> pathlib.Path:
    return PROBLEMS


@pytest.fixture
def expected_fixture() -> pathlib.Path:
    return EXPECTED


@pytest.fixture
def lattice_count():
    """Brute-force oracle for dim_leq."""
    return brute_count


@pytest.fixture
def rational_sampler():
    return random_rational
