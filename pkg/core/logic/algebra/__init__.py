from core.logic.algebra.rationals import (
    INFINITY,
    Rational,
    format_rational,
    format_value,
    parse_rational,
    rational_gcd,
)
from core.logic.algebra.weighted import (
    RRCoefficients,
    WeightedAlgebra,
    coefficients,
    log_discrepancy,
    make_algebra,
    quotient_algebra,
    quotient_volume,
    variable_names,
    volume,
)
from core.logic.algebra.counting import cesaro_residual, dim_leq, exact_degree_counts, step_integral
