"""Best input parent set: optimize over every parent set used by some input."""

import logging
from typing import List, Optional, Tuple

from cpt_aggregation.algorithms.base_solver import BaseSolver, SolveReport
from cpt_aggregation.algorithms.fixed_parent_set import majority_for_parent_set
from cpt_aggregation.metrics.disagreement import objective
from cpt_aggregation.model.cpt import AttributeSet, Cpt
from cpt_aggregation.model.instance import Instance

logger = logging.getLogger(__name__)


def distinct_parent_sets(instance: Instance) -> List[AttributeSet]:
    """Input parent sets without repeats, in order of first appearance."""
    seen: List[AttributeSet] = []
    for cpt in instance:
        if cpt.parents not in seen:
            seen.append(cpt.parents)
    return seen


class BestInputParentSetSolver(BaseSolver):
    """Run the fixed-parent-set optimum once per distinct input parent set and keep the best.

    Never worse than the trivial rule, since every input is a candidate of its own
    parent set. Ties go to the parent set of the lowest input index.
    """

    def __init__(self, max_parent_bits: Optional[int] = None):
        self.max_parent_bits = max_parent_bits

    def get_name(self) -> str:
        return "alg1"

    def _solve(self, instance: Instance) -> Tuple[Cpt, Optional[AttributeSet]]:
        best: Optional[Tuple[int, Cpt, AttributeSet]] = None
        for parents in distinct_parent_sets(instance):
            candidate = majority_for_parent_set(instance, parents, self.max_parent_bits)
            value = objective(instance, candidate)
            logger.debug(f"Parent set {parents}: objective {value}")
            if best is None or value < best[0]:
                best = (value, candidate, parents)
        assert best is not None
        return best[1], best[2]


def best_input_parent_set(instance: Instance, max_parent_bits: Optional[int] = None) -> SolveReport:
    return BestInputParentSetSolver(max_parent_bits).solve(instance)
