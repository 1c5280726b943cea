"""
Exact lattice-point counting for weighted polynomial algebras.

``dim_leq`` follows the recursion over the last variable,

    dim_n(x) = sum_{k=0}^{floor(x/g_n)} dim_{n-1}(x - k g_n),

with a memo private to each call. Grading values are scaled by the lcm L of
the weight denominators so that every attainable value s = sum g_i k_i becomes
the integer s*L and the memo keys are exact.

``step_integral`` integrates the counting step function exactly: the number of
monomials of each exact scaled degree is a knapsack count, and the integral is
a finite sum of level * interval-length terms.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from core.logic.algebra.rationals import denominator_lcm, parse_rational
from core.logic.algebra.weighted import WeightedAlgebra, coefficients
from core.logic.errors import InputValidationError

logger = logging.getLogger(__name__)


def scaled_weights(S: WeightedAlgebra) -> Tuple[int, Tuple[int, ...]]:
    """Return (L, (g_1 L, ..., g_n L)) with every g_i L a positive integer."""
    L = denominator_lcm(S.weights)
    return L, tuple(int(w * L) for w in S.weights)


def dim_leq(S: WeightedAlgebra, x) -> int:
    """
    #{(k_1, ..., k_n) in Z_{>=0}^n : sum g_i k_i <= x}.

    Args:
        S: the weighted algebra
        x: any rational; negative values give 0

    Returns:
        The exact count
    """
    x = parse_rational(x)
    if x < 0:
        return 0
    L, g = scaled_weights(S)
    bound = math.floor(x * L)

    @lru_cache(maxsize=None)
    def count(nvars: int, budget: int) -> int:
        if budget < 0:
            return 0
        last = g[nvars - 1]
        if nvars == 1:
            return budget // last + 1
        return sum(count(nvars - 1, budget - k * last) for k in range(budget // last + 1))

    out = count(S.n, bound)
    logger.debug(f"dim_leq({S}, {x}) = {out}; memo {count.cache_info()}")
    return out


def exact_degree_counts(S: WeightedAlgebra, bound: int) -> List[int]:
    """
    Number of monomials of each exact scaled degree 0..bound.

    Unbounded-knapsack counting over the scaled weights: after processing a
    weight g, ``ways[s]`` counts the exponent vectors of the processed
    variables with scaled degree exactly s.
    """
    _, g = scaled_weights(S)
    ways = [0] * (bound + 1)
    if bound < 0:
        return ways
    ways[0] = 1
    for w in g:
        for s in range(w, bound + 1):
            ways[s] += ways[s - w]
    return ways


def step_integral(S: WeightedAlgebra, t) -> Fraction:
    """
    Exact value of the integral of dim_leq(S, u) for u from 0 to t.

    On [s/L, (s+1)/L) the counting function is constant, equal to the number
    of monomials of scaled degree <= s.
    """
    t = parse_rational(t)
    if t <= 0:
        return Fraction(0)
    L, _ = scaled_weights(S)
    bound = math.floor(t * L)
    ways = exact_degree_counts(S, bound)

    level = 0
    full_cells = 0
    for s in range(bound):
        level += ways[s]
        full_cells += level
    level += ways[bound]
    return Fraction(full_cells, L) + level * (t - Fraction(bound, L))


def cesaro_residual(S: WeightedAlgebra, T) -> Fraction:
    """
    (1/T^n) * integral_0^T (dim_leq(S,x) - a_top x^n/n! - a_subtop x^(n-1)/(n-1)!) dx.

    Raises:
        InputValidationError: If T <= 0
    """
    T = parse_rational(T)
    if T <= 0:
        raise InputValidationError(f"T must be positive, got {T}")
    n = S.n
    rr = coefficients(S)
    polynomial_part = (
        rr.a_top * T ** (n + 1) / math.factorial(n + 1)
        + rr.a_subtop * T ** n / math.factorial(n)
    )
    return (step_integral(S, T) - polynomial_part) / T ** n
