"""Optimal aggregation for a fixed parent set, and irrelevant-parent removal.

For every context ``g`` of the parent set ``p`` the optimal rule is the majority over
all swaps consistent with ``g``. Input ``N_s`` contributes each of its rules consistent
with ``g`` once per swap the rule and ``g`` share, which is ``2^(n-1-|Pa_s ∪ p|)`` swaps.
Rules are grouped by their restriction to ``Pa_s ∩ p`` so the cost per input is
``O(|CPT_s| + 2^|p|)``.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from cpt_aggregation import config
from cpt_aggregation.algorithms.base_solver import BaseSolver, SolveReport
from cpt_aggregation.errors import ResourceLimitError, UniverseMismatchError
from cpt_aggregation.model.cpt import PREFER_ONE, PREFER_ZERO, AttributeSet, Cpt, project
from cpt_aggregation.model.instance import Instance

logger = logging.getLogger(__name__)


def _check_parent_set(instance: Instance, parents: AttributeSet, max_parent_bits: Optional[int]) -> None:
    if parents.width != instance.width:
        raise UniverseMismatchError(
            f"Parent set over {parents.width} attributes does not match instance n={instance.n}"
        )
    limit = config.MAX_PARENT_BITS if max_parent_bits is None else max_parent_bits
    if len(parents) > limit:
        raise ResourceLimitError("max_parent_bits", len(parents), limit)


def zero_votes(instance: Instance, parents: AttributeSet) -> np.ndarray:
    """Number of ``0>1`` votes over the swaps consistent with each context of ``parents``."""
    n = instance.n
    totals = np.zeros(1 << len(parents), dtype=np.int64)
    for cpt in instance:
        shared = cpt.parents & parents
        by_shared = np.bincount(project(cpt.parents, shared)[cpt.votes == PREFER_ZERO], minlength=1 << len(shared))
        rules = by_shared[project(parents, shared)].astype(np.int64)
        # numRules * 2^(n-|Pa_s|-1) is divisible by 2^|p \ Pa_s| since p \ Pa_s lies outside Pa_s
        scale = n - len(cpt.parents) - 1
        divisor = len(parents - cpt.parents)
        assert scale >= divisor
        totals += (rules << scale) >> divisor
    return totals


def remove_irrelevant_parents(cpt: Cpt) -> Cpt:
    """Drop parents whose value never changes the preference.

    Parents are scanned in ascending attribute order and the scan restarts after each
    removal, until no parent can be removed. The result is semantically equivalent to
    the input.
    """
    parents = cpt.parents
    votes = np.asarray(cpt.votes)
    removed = True
    while removed:
        removed = False
        k = len(parents)
        for position, attribute in enumerate(parents.indices):
            halves = votes.reshape(1 << position, 2, 1 << (k - 1 - position))
            if np.array_equal(halves[:, 0, :], halves[:, 1, :]):
                votes = halves[:, 0, :].reshape(-1)
                parents = parents - AttributeSet.from_indices([attribute], parents.width)
                logger.debug(f"Removed irrelevant parent {attribute}")
                removed = True
                break
    if parents == cpt.parents:
        return cpt
    return Cpt(cpt.n, parents, tuple(int(v) for v in votes))


def majority_for_parent_set(instance: Instance, parents: AttributeSet, max_parent_bits: Optional[int] = None) -> Cpt:
    """Build the CPT minimizing the objective among those with parents inside ``parents``.

    Args:
        instance: Problem instance
        parents: Allowed parent set ``p``
        max_parent_bits: Largest ``|p|`` allowed (defaults to ``config.MAX_PARENT_BITS``)

    Returns:
        Optimal CPT with irrelevant parents removed; ties between the two rules of a
        context resolve to ``1>0``

    Raises:
        ResourceLimitError: If ``|p|`` exceeds the guard
        UniverseMismatchError: If ``p`` is over a different universe
    """
    _check_parent_set(instance, parents, max_parent_bits)
    zeros = zero_votes(instance, parents)
    swaps_per_context = instance.t << (instance.n - 1 - len(parents))
    ones = swaps_per_context - zeros
    prefs = np.where(zeros > ones, PREFER_ZERO, PREFER_ONE)
    return remove_irrelevant_parents(Cpt(instance.n, parents, tuple(int(v) for v in prefs)))


class FixedParentSetSolver(BaseSolver):
    """Optimal CPT whose parents are a subset of a given parent set."""

    def __init__(self, parents: AttributeSet, max_parent_bits: Optional[int] = None):
        self.parents = parents
        self.max_parent_bits = max_parent_bits

    def get_name(self) -> str:
        return "fixed-parent"

    def _solve(self, instance: Instance) -> Tuple[Cpt, Optional[AttributeSet]]:
        return majority_for_parent_set(instance, self.parents, self.max_parent_bits), self.parents


def optimal_for_parent_set(
    instance: Instance, parents: AttributeSet, max_parent_bits: Optional[int] = None
) -> SolveReport:
    return FixedParentSetSolver(parents, max_parent_bits).solve(instance)
