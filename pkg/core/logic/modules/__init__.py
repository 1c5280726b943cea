from core.logic.modules.summands import (
    AbstractSummand,
    FreeSummand,
    Summand,
    TorsionPiece,
    effective_shift,
)
from core.logic.modules.graded import (
    GradedModule,
    complement,
    degree,
    degree_of_dual,
    direct_sum,
    dual,
    estimate_degree,
    estimate_subtop,
    free_module,
    from_summands,
    module_dim_leq,
    slope,
    submodule,
    twist,
)
from core.logic.modules.hn import HNFiltration, HNStage, hn_filtration, is_semistable, mu_max, mu_min
