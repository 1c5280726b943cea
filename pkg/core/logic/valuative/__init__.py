from core.logic.valuative.valuation import MonomialValuation, Polynomial, log_discrepancy, parse_polynomial, v_eval
from core.logic.valuative.functions import (
    DiagonalValuativeFunction,
    associated_graded,
    graded_hn,
    is_optimal,
    make_function,
    phi,
    translate,
    vf_eval,
)
from core.logic.valuative.descent import (
    Comparison,
    Descent,
    HeckeRelated,
    HeckeStep,
    Optimization,
    ParallelTransport,
    Unrelated,
    check_selection,
    compare_optimal,
    descend,
    effective_shifts,
    hecke,
    hecke_module,
    optimal_tangent_cone,
    optimize,
    phi_descent_bound,
)
from core.logic.valuative.examples import (
    Check,
    ConeResult,
    PlaneExample,
    cone_example,
    expected_grid,
    plane_example,
    verify_examples,
)
