"""High-level API over the aggregation algorithms."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from cpt_aggregation.algorithms import SolveReport, create_solver
from cpt_aggregation.analysis.formulas import approximation_ratio
from cpt_aggregation.errors import AggregationError
from cpt_aggregation.metrics.disagreement import disagreement_profile
from cpt_aggregation.metrics.vote_matrix import VoteMatrix, build_matrix
from cpt_aggregation.model.cpt import AttributeSet, Cpt
from cpt_aggregation.model.instance import Instance

logger = logging.getLogger(__name__)


class ProcessingError(AggregationError):
    """Exception raised when a solve fails for a reason other than invalid input or a resource guard."""


@dataclass
class ComparisonResult:
    """Optimum, trivial rule and best input parent set on one instance."""

    optimum: SolveReport
    trivial: SolveReport
    alg1: SolveReport

    @property
    def ratio_trivial(self) -> Fraction:
        return approximation_ratio(self.trivial.objective, self.optimum.objective)

    @property
    def ratio_alg1(self) -> Fraction:
        return approximation_ratio(self.alg1.objective, self.optimum.objective)

    def to_dict(self) -> Dict:
        return {
            "optimum": self.optimum.to_dict(),
            "trivial": self.trivial.to_dict(),
            "alg1": self.alg1.to_dict(),
            "ratio_trivial": str(self.ratio_trivial),
            "ratio_alg1": str(self.ratio_alg1),
        }


class AggregationAPI:
    """Facade for solving, evaluating and comparing aggregation algorithms."""

    def __init__(self, max_parent_bits: Optional[int] = None, max_matrix_n: Optional[int] = None):
        """Initialize the API.

        Args:
            max_parent_bits: Override for the fixed-parent-set guard (None = config default)
            max_matrix_n: Override for the vote-matrix guard (None = config default)
        """
        self.max_parent_bits = max_parent_bits
        self.max_matrix_n = max_matrix_n

    def solve(
        self,
        instance: Instance,
        algorithm: str,
        parents: Optional[AttributeSet] = None,
        pool: Optional[AttributeSet] = None,
    ) -> SolveReport:
        """Run one algorithm.

        Args:
            instance: Problem instance
            algorithm: Solver tag
            parents: Parent set for ``fixed-parent``
            pool: Parent pool for ``exhaustive``

        Returns:
            SolveReport of the run

        Raises:
            TypeError: If ``instance`` is not an Instance
            ValueError: If the tag is unknown or its arguments are missing or invalid
            ResourceLimitError: If a resource guard is exceeded
            ProcessingError: If the solve fails for any other reason
        """
        if not isinstance(instance, Instance):
            raise TypeError(f"instance must be an Instance, got {type(instance)}")

        solver = create_solver(
            algorithm,
            parents=parents,
            pool=pool,
            max_parent_bits=self.max_parent_bits,
            max_matrix_n=self.max_matrix_n,
        )
        try:
            return solver.solve(instance)
        except (TypeError, ValueError, AggregationError):
            raise
        except Exception as e:
            raise ProcessingError(f"Algorithm '{algorithm}' failed: {e}", original_error=e) from e

    def evaluate(self, instance: Instance, candidate: Cpt) -> Tuple[int, List[int]]:
        """Objective value and per-input disagreements of a candidate CPT.

        Raises:
            UniverseMismatchError: If the candidate is over a different universe
        """
        per_input = disagreement_profile(instance, candidate)
        return sum(per_input), per_input

    def compare(self, instance: Instance) -> ComparisonResult:
        """Run the exact solver, the trivial rule and the best input parent set."""
        result = ComparisonResult(
            optimum=self.solve(instance, "exact-union"),
            trivial=self.solve(instance, "trivial"),
            alg1=self.solve(instance, "alg1"),
        )
        logger.info(
            f"Compared n={instance.n} t={instance.t}: opt={result.optimum.objective} "
            f"trivial={result.trivial.objective} alg1={result.alg1.objective}"
        )
        return result

    def matrix(self, instance: Instance) -> VoteMatrix:
        return build_matrix(instance, self.max_matrix_n)
