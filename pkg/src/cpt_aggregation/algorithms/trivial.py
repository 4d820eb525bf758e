"""Trivial best-input rule: return the input CPT closest to all the others."""

import logging
from typing import Optional, Tuple

import numpy as np

from cpt_aggregation.algorithms.base_solver import BaseSolver, SolveReport
from cpt_aggregation.metrics.disagreement import pairwise_disagreements
from cpt_aggregation.model.cpt import AttributeSet, Cpt
from cpt_aggregation.model.instance import Instance

logger = logging.getLogger(__name__)


class TrivialSolver(BaseSolver):
    """Pick the input minimizing the objective; the lowest index wins ties.

    This is a 2-approximation of the optimum.
    """

    def get_name(self) -> str:
        return "trivial"

    def _solve(self, instance: Instance) -> Tuple[Cpt, Optional[AttributeSet]]:
        totals = pairwise_disagreements(instance).sum(axis=1)
        best = int(np.argmin(totals))
        logger.debug(f"Best input is {best} with objective {int(totals[best])}")
        return instance[best], None


def trivial_best_input(instance: Instance) -> SolveReport:
    return TrivialSolver().solve(instance)
