"""Brute-force oracle over every complete CPT with parents inside a small pool.

Works directly on the vote matrix and shares no code with the majority solvers, so it
can check them independently.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from cpt_aggregation import config
from cpt_aggregation.algorithms.base_solver import BaseSolver, SolveReport
from cpt_aggregation.errors import ResourceLimitError, UniverseMismatchError
from cpt_aggregation.metrics.vote_matrix import build_matrix
from cpt_aggregation.model.cpt import AttributeSet, Cpt, project
from cpt_aggregation.model.instance import Instance

logger = logging.getLogger(__name__)


def _all_assignments(k: int) -> np.ndarray:
    """Row ``v`` holds the preferences encoded by ``v``; bit ``i`` (LSB first) is context ``i``."""
    contexts = 1 << k
    values = np.arange(1 << contexts, dtype=np.int64)
    return ((values[:, None] >> np.arange(contexts, dtype=np.int64)) & 1).astype(np.int64)


class ExhaustiveSolver(BaseSolver):
    """Enumerate every parent set inside the pool and every preference vector over it.

    Ties go to the smaller parent set, then the lower parent bitmask, then the lower
    preference value.
    """

    def __init__(
        self,
        pool: Optional[AttributeSet] = None,
        max_pool: Optional[int] = None,
        max_matrix_n: Optional[int] = None,
    ):
        self.pool = pool
        self.max_pool = config.MAX_EXHAUSTIVE_POOL if max_pool is None else max_pool
        self.max_matrix_n = max_matrix_n

    def get_name(self) -> str:
        return "exhaustive"

    def _solve(self, instance: Instance) -> Tuple[Cpt, Optional[AttributeSet]]:
        pool = instance.parent_union if self.pool is None else self.pool
        if pool.width != instance.width:
            raise UniverseMismatchError(f"Parent pool over {pool.width} attributes does not match n={instance.n}")
        if len(pool) > self.max_pool:
            raise ResourceLimitError("max_exhaustive_pool", len(pool), self.max_pool)

        matrix = build_matrix(instance, self.max_matrix_n)
        ones = matrix.row_ones()
        zeros = matrix.t - ones

        best: Optional[Tuple[int, AttributeSet, np.ndarray]] = None
        for parents in pool.subsets():
            k = len(parents)
            rows_to_context = project(instance.universe, parents)
            # choosing 0>1 on a context costs every 1>0 vote on its swaps, and vice versa
            cost_zero = np.bincount(rows_to_context, weights=ones, minlength=1 << k).astype(np.int64)
            cost_one = np.bincount(rows_to_context, weights=zeros, minlength=1 << k).astype(np.int64)
            assignments = _all_assignments(k)
            totals = assignments @ cost_one + (1 - assignments) @ cost_zero
            choice = int(np.argmin(totals))
            value = int(totals[choice])
            if best is None or value < best[0]:
                best = (value, parents, assignments[choice])
        assert best is not None

        value, parents, prefs = best
        logger.debug(f"Exhaustive optimum {value} over pool {pool} with parents {parents}")
        return Cpt(instance.n, parents, tuple(int(v) for v in prefs)), pool


def exhaustive_optimum(
    instance: Instance,
    pool: Optional[AttributeSet] = None,
    max_pool: Optional[int] = None,
    max_matrix_n: Optional[int] = None,
) -> SolveReport:
    """Exact optimum among CPTs with parents inside ``pool`` (default: union of input parents).

    Raises:
        ResourceLimitError: If the pool or the vote matrix exceeds its guard
    """
    return ExhaustiveSolver(pool, max_pool, max_matrix_n).solve(instance)
