"""Structured instance families used to exercise the aggregation algorithms.

- ``gen_tkn``: one CPT per (k-subset, context) pair, each preferring ``1>0`` on its own
  context only. The best input parent set recovers the optimum here while the trivial
  rule stays close to a factor of 2 away.
- ``gen_symmetric_disjoint``: symmetric CPTs over pairwise disjoint parent blocks,
  where the trivial rule is within 4/3 of the optimum.
- ``gen_copy_parent``: ``n - 1`` single-parent copy CPTs whose optimum needs every
  attribute as a parent, although each input has only one.
"""

import logging
from typing import Optional

import numpy as np

from cpt_aggregation.errors import ParameterError
from cpt_aggregation.model.cpt import MAX_ATTRIBUTES, AttributeSet, Cpt, popcount
from cpt_aggregation.model.instance import Instance

logger = logging.getLogger(__name__)


def _require_universe(n: int, minimum: int) -> None:
    if not minimum <= n <= MAX_ATTRIBUTES:
        raise ParameterError(f"n must be in {minimum}..{MAX_ATTRIBUTES}, got {n}")


def gen_tkn(n: int, k: int) -> Instance:
    """Build T^{k,n}.

    Parent sets are the k-subsets of the ``n - 1`` potential parents in ascending
    bitmask order; within each parent set, CPTs follow the ascending context order.

    Args:
        n: Attribute count, at least 3
        k: Parent-set size in ``2..n-1``

    Returns:
        Instance with ``C(n-1, k) * 2^k`` CPTs

    Raises:
        ParameterError: If ``n`` or ``k`` is out of range
    """
    _require_universe(n, 3)
    if not 2 <= k <= n - 1:
        raise ParameterError(f"k must be in 2..{n - 1} for n={n}, got {k}")

    width = n - 1
    cpts = []
    for bits in range(1 << width):
        if popcount(bits) != k:
            continue
        parents = AttributeSet(bits, width)
        for context in range(1 << k):
            prefs = [0] * (1 << k)
            prefs[context] = 1
            cpts.append(Cpt(n, parents, tuple(prefs)))
    logger.debug(f"Generated T^{{{k},{n}}} with {len(cpts)} CPTs")
    return Instance(n, tuple(cpts))


def _parity_prefs(k: int, negate: bool) -> tuple:
    parity = [popcount(index) & 1 for index in range(1 << k)]
    return tuple(bit ^ 1 if negate else bit for bit in parity)


def gen_symmetric_disjoint(n: int, t: int, seed: Optional[int] = None, parent_size: int = 1) -> Instance:
    """Build ``t`` symmetric CPTs over pairwise disjoint parent blocks.

    CPT ``s`` depends on attributes ``s*parent_size .. (s+1)*parent_size - 1`` and prefers
    ``1>0`` exactly on the contexts of odd parity. With ``parent_size=1`` this is the
    copy-parent rule ``0: 0>1, 1: 1>0``. A seed draws, per CPT, whether the rule is
    negated; both polarities are symmetric.

    Args:
        n: Attribute count
        t: Number of CPTs, at least 3
        seed: Optional polarity seed; ``None`` keeps every CPT un-negated
        parent_size: Parents per CPT

    Raises:
        ParameterError: If the blocks do not fit in the ``n - 1`` potential parents
    """
    _require_universe(n, 2)
    if parent_size < 1:
        raise ParameterError(f"parent_size must be at least 1, got {parent_size}")
    if t < 3 or t * parent_size > n - 1:
        raise ParameterError(
            f"t must be in 3..{(n - 1) // parent_size} for n={n} and parent_size={parent_size}, got {t}"
        )

    if seed is None:
        negations = np.zeros(t, dtype=bool)
    else:
        negations = np.random.default_rng(seed).integers(0, 2, size=t).astype(bool)

    width = n - 1
    cpts = []
    for s in range(t):
        parents = AttributeSet.from_indices(range(s * parent_size, (s + 1) * parent_size), width)
        cpts.append(Cpt(n, parents, _parity_prefs(parent_size, bool(negations[s]))))
    return Instance(n, tuple(cpts))


def gen_copy_parent(n: int) -> Instance:
    """Build the ``n - 1`` copy-parent CPTs: CPT ``s`` has parent ``s`` and copies its value.

    Raises:
        ParameterError: If ``n < 4``
    """
    _require_universe(n, 4)
    width = n - 1
    cpts = tuple(Cpt(n, AttributeSet.from_indices([s], width), (0, 1)) for s in range(width))
    return Instance(n, cpts)
