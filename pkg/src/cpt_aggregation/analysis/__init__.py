"""Closed forms and experiment sweeps.

Only the formulas are re-exported here; import ``cpt_aggregation.analysis.experiments``
directly for sweeps.
"""

from cpt_aggregation.analysis.formulas import (
    approximation_ratio,
    balanced_optimum,
    central_binomial_bound,
    even_case_inequality,
    odd_case_inequality,
    symmetric_input_objective,
    tkn_input_objective,
    tkn_input_objective_by_overlap,
    tkn_optimum,
    tkn_trivial_ratio,
    unit_configuration_optimum,
)

__all__ = [
    "approximation_ratio",
    "balanced_optimum",
    "central_binomial_bound",
    "even_case_inequality",
    "odd_case_inequality",
    "symmetric_input_objective",
    "tkn_input_objective",
    "tkn_input_objective_by_overlap",
    "tkn_optimum",
    "tkn_trivial_ratio",
    "unit_configuration_optimum",
]
