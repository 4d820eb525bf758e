"""Closed-form objective values for the generated families.

All values are exact Python integers or ``Fraction`` objects.
"""

from fractions import Fraction
from math import comb

from cpt_aggregation.errors import ParameterError


def _majority_half(t: int) -> int:
    """``c`` with ``t = 2c - 1`` (odd) or ``t = 2c`` (even)."""
    return (t + 1) // 2


def tkn_optimum(n: int, k: int) -> int:
    """Optimum on T^{k,n}, attained by the separable ``0>1`` CPT: ``2^(n-1) * C(n-1, k)``."""
    return (1 << (n - 1)) * comb(n - 1, k)


def tkn_input_objective(n: int, k: int) -> int:
    """Objective of any input of T^{k,n}: ``(2^n - 2^(n-k)) * C(n-1, k)``."""
    return ((1 << n) - (1 << (n - k))) * comb(n - 1, k)


def tkn_input_objective_by_overlap(n: int, k: int) -> int:
    """Objective of an input of T^{k,n}, summed over the overlap ``k'`` with the other parent sets.

    Inputs sharing the parent set disagree on ``2^(n-k)`` swaps. For a parent set
    overlapping in ``k' < k`` attributes, ``2^(k-k')`` inputs have a consistent context
    and disagree on ``2^(n-k) - 2^(n-2k+k')`` swaps; the other ``2^k - 2^(k-k')`` disagree
    on ``2^(n-k)``. Equals ``tkn_input_objective`` by Vandermonde's identity.
    """
    total = ((1 << k) - 1) * (1 << (n - k))
    for overlap in range(k):
        parent_sets = comb(k, overlap) * comb(n - 1 - k, k - overlap)
        if parent_sets == 0:
            continue
        # a second parent set exists only if k - overlap <= n - 1 - k, so n - 2k + overlap >= 1
        consistent = 1 << (k - overlap)
        per_set = consistent * ((1 << (n - k)) - (1 << (n - 2 * k + overlap)))
        per_set += ((1 << k) - consistent) * (1 << (n - k))
        total += parent_sets * per_set
    return total


def tkn_trivial_ratio(k: int) -> Fraction:
    """Ratio of the trivial rule to the optimum on T^{k,n}: ``2 - 2^(1-k)``, independent of ``n``."""
    return 2 - Fraction(1, 1 << (k - 1))


def symmetric_input_objective(n: int, t: int) -> int:
    """Objective of any input of ``t`` symmetric CPTs with disjoint parents: ``(t-1) * 2^(n-2)``."""
    return (t - 1) * (1 << (n - 2))


def unit_configuration_optimum(t: int) -> int:
    """Optimum when each of the ``2^t`` voting configurations occurs exactly once.

    A configuration with ``kappa`` minority votes costs ``kappa``. For odd ``t = 2c-1``
    this is ``2 * sum_{kappa<c} kappa*C(2c-1, kappa)``; for even ``t = 2c`` the balanced
    configurations add ``c * C(2c, c)``.
    """
    c = _majority_half(t)
    total = 2 * sum(kappa * comb(t, kappa) for kappa in range(c))
    if t % 2 == 0:
        total += c * comb(t, c)
    return total


def balanced_optimum(n: int, t: int) -> int:
    """Optimum for ``t`` symmetric CPTs with disjoint parents: ``t*2^(n-2) - 2^(n-t-1) * c * C(t, c)``.

    Raises:
        ParameterError: If ``t`` is not in ``1..n-1``
    """
    if not 1 <= t <= n - 1:
        raise ParameterError(f"t must be in 1..{n - 1} for n={n}, got {t}")
    c = _majority_half(t)
    return t * (1 << (n - 2)) - (1 << (n - t - 1)) * c * comb(t, c)


def odd_case_inequality(c: int) -> bool:
    """``c * C(2c-1, c) <= (c+1) * 2^(2c-3)`` for ``c >= 2``."""
    return c * comb(2 * c - 1, c) <= (c + 1) * (1 << (2 * c - 3))


def even_case_inequality(c: int) -> bool:
    """``c * C(2c-1, c) <= (2c+3) * 2^(2c-4)`` for ``c >= 2``."""
    return c * comb(2 * c - 1, c) <= (2 * c + 3) * (1 << (2 * c - 4))


def central_binomial_bound(d: int) -> bool:
    """``C(2d, d) <= 2^(2d-1)`` for ``d >= 1``."""
    return comb(2 * d, d) <= 1 << (2 * d - 1)


def approximation_ratio(value: int, optimum: int) -> Fraction:
    """Exact ratio ``value / optimum``; ``0 / 0`` is 1.

    Raises:
        ValueError: If ``optimum`` is 0 but ``value`` is not
    """
    if optimum == 0:
        if value != 0:
            raise ValueError(f"Value {value} cannot exceed a zero optimum")
        return Fraction(1)
    return Fraction(value, optimum)
