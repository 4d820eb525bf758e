"""Seeded random instances.

PRNG contract: ``numpy.random.SeedSequence(seed)`` is spawned into one child per CPT,
and each child drives its own ``PCG64`` generator through ``numpy.random.default_rng``.
CPT ``s`` draws, in order, its parent-set size (uniform in ``0..max_parents``), the
parent set (uniform among sets of that size), and one uniform bit per context. numpy
guarantees this stream is stable across platforms for a fixed numpy version, and the
per-CPT streams do not depend on ``t``: the first CPTs of an instance are unchanged
when more are requested.
"""

import logging

import numpy as np

from cpt_aggregation.errors import ParameterError
from cpt_aggregation.model.cpt import MAX_ATTRIBUTES, AttributeSet, Cpt
from cpt_aggregation.model.instance import Instance

logger = logging.getLogger(__name__)

MAX_SEED = (1 << 64) - 1


def gen_random(n: int, t: int, max_parents: int, seed: int) -> Instance:
    """Draw a random instance: per CPT a uniform parent-set size, then a uniform set of that size.

    Parent sets are therefore not uniform over all sets of size at most ``max_parents``;
    small sets are as likely in total as large ones.

    Args:
        n: Attribute count in ``2..30``
        t: Number of CPTs, at least 1
        max_parents: Largest parent-set size, in ``0..n-1``
        seed: 64-bit unsigned seed

    Returns:
        Instance that is identical for identical arguments

    Raises:
        ParameterError: If any bound is violated
    """
    if not 2 <= n <= MAX_ATTRIBUTES:
        raise ParameterError(f"n must be in 2..{MAX_ATTRIBUTES}, got {n}")
    if t < 1:
        raise ParameterError(f"t must be at least 1, got {t}")
    if not 0 <= max_parents <= n - 1:
        raise ParameterError(f"max_parents must be in 0..{n - 1}, got {max_parents}")
    if not 0 <= seed <= MAX_SEED:
        raise ParameterError(f"seed must be a 64-bit unsigned integer, got {seed}")

    width = n - 1
    cpts = []
    for child in np.random.SeedSequence(seed).spawn(t):
        rng = np.random.default_rng(child)
        size = int(rng.integers(0, max_parents + 1))
        members = sorted(int(a) for a in rng.choice(width, size=size, replace=False))
        prefs = rng.integers(0, 2, size=1 << size)
        cpts.append(Cpt(n, AttributeSet.from_indices(members, width), tuple(int(v) for v in prefs)))
    logger.debug(f"Generated random instance n={n} t={t} max_parents={max_parents} seed={seed}")
    return Instance(n, tuple(cpts))
