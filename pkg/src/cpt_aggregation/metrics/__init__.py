"""Swap disagreement, the objective and the explicit vote matrix."""

from cpt_aggregation.metrics.disagreement import (
    MinorityView,
    disagreement_profile,
    is_symmetric,
    minority_rules,
    objective,
    pairwise_disagreements,
    swap_disagreement,
)
from cpt_aggregation.metrics.vote_matrix import (
    ConfigHistogram,
    FreqCount,
    VoteMatrix,
    build_matrix,
    config_histogram,
    freq,
    majority_lower_bound,
)

__all__ = [
    "ConfigHistogram",
    "FreqCount",
    "MinorityView",
    "VoteMatrix",
    "build_matrix",
    "config_histogram",
    "disagreement_profile",
    "freq",
    "is_symmetric",
    "majority_lower_bound",
    "minority_rules",
    "objective",
    "pairwise_disagreements",
    "swap_disagreement",
]
