"""CPT Aggregation - combine conditional preference tables over swap preferences.

Exact and approximate aggregation of complete CPTs for one target attribute, with the
instance families and closed forms used to measure approximation ratios.
"""

__version__ = "0.1.0"
__license__ = "MIT"

from cpt_aggregation.algorithms import (
    SolveReport,
    best_input_parent_set,
    exact_union_majority,
    exhaustive_optimum,
    optimal_for_parent_set,
    remove_irrelevant_parents,
    trivial_best_input,
)
from cpt_aggregation.api import AggregationAPI, AsyncAggregationAPI
from cpt_aggregation.metrics import build_matrix, is_symmetric, objective, swap_disagreement
from cpt_aggregation.model import AttributeSet, Context, Cpt, Instance, parse_instance, serialize_cpt

__all__ = [
    "AggregationAPI",
    "AsyncAggregationAPI",
    "AttributeSet",
    "Context",
    "Cpt",
    "Instance",
    "SolveReport",
    "best_input_parent_set",
    "build_matrix",
    "exact_union_majority",
    "exhaustive_optimum",
    "is_symmetric",
    "objective",
    "optimal_for_parent_set",
    "parse_instance",
    "remove_irrelevant_parents",
    "serialize_cpt",
    "swap_disagreement",
    "trivial_best_input",
]
