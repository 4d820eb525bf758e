"""Aggregation algorithms."""

from typing import Optional

from cpt_aggregation.algorithms.base_solver import BaseSolver, SolveReport
from cpt_aggregation.algorithms.best_parent_set import BestInputParentSetSolver, best_input_parent_set
from cpt_aggregation.algorithms.exhaustive import ExhaustiveSolver, exhaustive_optimum
from cpt_aggregation.algorithms.fixed_parent_set import (
    FixedParentSetSolver,
    majority_for_parent_set,
    optimal_for_parent_set,
    remove_irrelevant_parents,
)
from cpt_aggregation.algorithms.trivial import TrivialSolver, trivial_best_input
from cpt_aggregation.algorithms.union_majority import UnionMajoritySolver, exact_union_majority
from cpt_aggregation.model.cpt import AttributeSet

ALGORITHMS = ("trivial", "alg1", "fixed-parent", "exact-union", "exhaustive")


def create_solver(
    algorithm: str,
    parents: Optional[AttributeSet] = None,
    pool: Optional[AttributeSet] = None,
    max_parent_bits: Optional[int] = None,
    max_matrix_n: Optional[int] = None,
) -> BaseSolver:
    """Instantiate a solver by tag.

    Args:
        algorithm: One of ``ALGORITHMS``
        parents: Parent set for ``fixed-parent``
        pool: Parent pool for ``exhaustive`` (defaults to the union of input parent sets)
        max_parent_bits: Override for the fixed-parent-set guard
        max_matrix_n: Override for the vote-matrix guard

    Returns:
        Solver instance

    Raises:
        ValueError: If the tag is unknown or ``fixed-parent`` has no parent set
    """
    if algorithm == "trivial":
        return TrivialSolver()
    if algorithm == "alg1":
        return BestInputParentSetSolver(max_parent_bits)
    if algorithm == "fixed-parent":
        if parents is None:
            raise ValueError("Algorithm 'fixed-parent' requires a parent set")
        return FixedParentSetSolver(parents, max_parent_bits)
    if algorithm == "exact-union":
        return UnionMajoritySolver(max_parent_bits)
    if algorithm == "exhaustive":
        return ExhaustiveSolver(pool, max_matrix_n=max_matrix_n)
    raise ValueError(f"Unknown algorithm '{algorithm}'; expected one of {', '.join(ALGORITHMS)}")


__all__ = [
    "ALGORITHMS",
    "BaseSolver",
    "BestInputParentSetSolver",
    "ExhaustiveSolver",
    "FixedParentSetSolver",
    "SolveReport",
    "TrivialSolver",
    "UnionMajoritySolver",
    "best_input_parent_set",
    "create_solver",
    "exact_union_majority",
    "exhaustive_optimum",
    "majority_for_parent_set",
    "optimal_for_parent_set",
    "remove_irrelevant_parents",
    "trivial_best_input",
]
