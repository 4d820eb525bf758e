"""Shared test fixtures for cpt-aggregation tests."""

import pytest

from cpt_aggregation.generators import gen_copy_parent, gen_symmetric_disjoint
from cpt_aggregation.model.cpt import Cpt
from cpt_aggregation.model.instance import Instance, parse_instance

T23_JSON = (
    '{"n":3,"cpts":['
    '{"parents":[0,1],"rules":{"00":"1>0","01":"0>1","10":"0>1","11":"0>1"}},'
    '{"parents":[0,1],"rules":{"00":"0>1","01":"1>0","10":"0>1","11":"0>1"}},'
    '{"parents":[0,1],"rules":{"00":"0>1","01":"0>1","10":"1>0","11":"0>1"}},'
    '{"parents":[0,1],"rules":{"00":"0>1","01":"0>1","10":"0>1","11":"1>0"}}'
    "]}"
)


def swap_vote(cpt: Cpt, swap: int) -> int:
    """Vote of ``cpt`` on the swap whose attribute ``a`` has value ``swap >> a & 1``.

    Reads the rule through its context label, independent of the library's projections.
    """
    label = "".join(str(swap >> attribute & 1) for attribute in cpt.parents.indices)
    return cpt.prefs[int(label, 2) if label else 0]


def brute_disagreement(a: Cpt, b: Cpt) -> int:
    """Swap disagreement by enumerating every swap."""
    return sum(swap_vote(a, swap) != swap_vote(b, swap) for swap in range(1 << (a.n - 1)))


def brute_objective(instance: Instance, candidate: Cpt) -> int:
    return sum(brute_disagreement(candidate, cpt) for cpt in instance)


@pytest.fixture
def t23_json():
    """The four-CPT instance T^{2,3} as a JSON document."""
    return T23_JSON


@pytest.fixture
def t23():
    """T^{2,3}: every input prefers 1>0 on exactly one context of {0,1}."""
    return parse_instance(T23_JSON)


@pytest.fixture
def separable_zero():
    """Separable 0>1 CPT over n=3."""
    return Cpt.separable(3, 0)


@pytest.fixture
def copy_parent_4():
    """Three copy-parent CPTs over n=4."""
    return gen_copy_parent(4)


@pytest.fixture
def symmetric_4_3():
    """Three symmetric single-parent CPTs over n=4 with seeded polarity."""
    return gen_symmetric_disjoint(4, 3, seed=0)
