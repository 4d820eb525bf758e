"""Swap disagreement between CPTs and the aggregation objective.

All counts are computed context-wise over the union of the two parent sets, never by
enumerating swaps, so cost is bounded by the product of the two CPT sizes.
"""

import logging
from typing import List, NamedTuple

import numpy as np

from cpt_aggregation.errors import UniverseMismatchError
from cpt_aggregation.model.cpt import PREFER_ONE, PREFER_ZERO, Context, Cpt, project
from cpt_aggregation.model.instance import Instance

logger = logging.getLogger(__name__)


class MinorityView(NamedTuple):
    """Compact view of a CPT: the majority rule plus the contexts that deviate from it."""

    majority: int
    exceptions: List[Context]


def _require_same_universe(a: Cpt, b: Cpt) -> None:
    if a.n != b.n:
        raise UniverseMismatchError(f"Cannot compare CPTs over n={a.n} and n={b.n}")


def swap_disagreement(a: Cpt, b: Cpt) -> int:
    """Number of swaps over the target attribute that ``a`` and ``b`` order differently.

    Args:
        a: First CPT
        b: Second CPT over the same universe

    Returns:
        Count in ``0..2^(n-1)``

    Raises:
        UniverseMismatchError: If the CPTs have different attribute counts
    """
    _require_same_universe(a, b)
    union = a.parents | b.parents
    votes_a = a.votes[project(union, a.parents)]
    votes_b = b.votes[project(union, b.parents)]
    differing = int(np.count_nonzero(votes_a != votes_b))
    return differing << ((a.n - 1) - len(union))


def disagreement_profile(instance: Instance, candidate: Cpt) -> List[int]:
    """Disagreement of ``candidate`` with each input CPT, in input order."""
    if candidate.n != instance.n:
        raise UniverseMismatchError(f"Candidate over n={candidate.n} does not match instance n={instance.n}")
    return [swap_disagreement(candidate, cpt) for cpt in instance]


def objective(instance: Instance, candidate: Cpt) -> int:
    """Total swap disagreement of ``candidate`` with every input CPT.

    Raises:
        UniverseMismatchError: If ``candidate`` is over a different universe
    """
    return sum(disagreement_profile(instance, candidate))


def pairwise_disagreements(instance: Instance) -> np.ndarray:
    """Symmetric ``t x t`` matrix of disagreements between input CPTs.

    Row ``s`` sums to the objective value of input ``s``.
    """
    t = instance.t
    table = np.zeros((t, t), dtype=np.int64)
    for s in range(t):
        for r in range(s + 1, t):
            table[s, r] = table[r, s] = swap_disagreement(instance[s], instance[r])
    return table


def is_symmetric(cpt: Cpt) -> bool:
    """Check whether every sub-table fixed by a proper parent subset is balanced.

    A CPT is symmetric when it has at least one parent and, for every proper subset
    ``S`` of its parents (the empty set included) and every context of ``S``, the rules
    extending that context split evenly between ``0>1`` and ``1>0``. Separable CPTs are
    not symmetric.
    """
    if len(cpt.parents) == 0:
        return False
    for subset in cpt.parents.subsets():
        if subset == cpt.parents:
            continue
        restricted = project(cpt.parents, subset)
        size = 1 << len(subset)
        totals = np.bincount(restricted, minlength=size)
        ones = np.bincount(restricted[cpt.votes == PREFER_ONE], minlength=size)
        if np.any(2 * ones != totals):
            logger.debug(f"{cpt} is unbalanced under parent subset {subset}")
            return False
    return True


def minority_rules(cpt: Cpt) -> MinorityView:
    """Split a CPT into its majority rule and the contexts carrying the other rule.

    Ties go to ``0>1``.
    """
    ones = int(np.count_nonzero(cpt.votes))
    majority = PREFER_ONE if 2 * ones > cpt.size else PREFER_ZERO
    return MinorityView(majority, [context for context, pref in cpt.rules() if pref != majority])
