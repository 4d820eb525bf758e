"""Exact solver: per-context majority over the union of all input parent sets."""

import logging
from typing import Optional, Tuple

from cpt_aggregation.algorithms.base_solver import BaseSolver, SolveReport
from cpt_aggregation.algorithms.fixed_parent_set import majority_for_parent_set
from cpt_aggregation.model.cpt import AttributeSet, Cpt
from cpt_aggregation.model.instance import Instance

logger = logging.getLogger(__name__)


class UnionMajoritySolver(BaseSolver):
    """Global optimum.

    Every input vote is constant on the contexts of the union, so the majority on each
    such context is realizable and no CPT can do better.
    """

    def __init__(self, max_parent_bits: Optional[int] = None):
        self.max_parent_bits = max_parent_bits

    def get_name(self) -> str:
        return "exact-union"

    def _solve(self, instance: Instance) -> Tuple[Cpt, Optional[AttributeSet]]:
        union = instance.parent_union
        logger.debug(f"Union of input parent sets: {union}")
        return majority_for_parent_set(instance, union, self.max_parent_bits), union


def exact_union_majority(instance: Instance, max_parent_bits: Optional[int] = None) -> SolveReport:
    return UnionMajoritySolver(max_parent_bits).solve(instance)
