"""Base solver interface and the report every solver returns."""

import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from cpt_aggregation.metrics.disagreement import disagreement_profile
from cpt_aggregation.model.cpt import AttributeSet, Cpt
from cpt_aggregation.model.instance import Instance

logger = logging.getLogger(__name__)


@dataclass
class SolveReport:
    """Output of one aggregation run.

    Attributes:
        algorithm: Solver tag (``trivial``, ``alg1``, ``fixed-parent``, ``exact-union``, ``exhaustive``)
        output: Aggregated CPT
        objective: Total disagreement of ``output`` with the inputs
        per_input: Disagreement with each input, in input order
        chosen_parent_set: Parent set the solver optimized over, if it fixes one
        wall_time: Seconds spent in the solver
    """

    algorithm: str
    output: Cpt
    objective: int
    per_input: List[int] = field(default_factory=list)
    chosen_parent_set: Optional[AttributeSet] = None
    wall_time: float = 0.0

    def to_dict(self) -> Dict:
        """Convert to the SolveReport JSON shape."""
        return {
            "algorithm": self.algorithm,
            "objective": self.objective,
            "per_input": list(self.per_input),
            "chosen_parents": list(self.chosen_parent_set.indices) if self.chosen_parent_set is not None else None,
            "cpt": self.output.to_dict(),
            "wall_time_ms": round(self.wall_time * 1000.0, 3),
        }


class BaseSolver(ABC):
    """Abstract base class for aggregation algorithms."""

    @abstractmethod
    def get_name(self) -> str:
        """Get the solver tag.

        Returns:
            Tag used on the command line and in reports
        """
        pass

    @abstractmethod
    def _solve(self, instance: Instance) -> Tuple[Cpt, Optional[AttributeSet]]:
        """Compute the aggregated CPT.

        Args:
            instance: Problem instance

        Returns:
            Tuple of (output CPT, parent set the solver fixed or None)
        """
        pass

    def solve(self, instance: Instance) -> SolveReport:
        """Run the solver and evaluate its output against every input.

        Args:
            instance: Problem instance

        Returns:
            SolveReport with objective, per-input disagreements and timing
        """
        start = time.perf_counter()
        output, chosen = self._solve(instance)
        wall_time = time.perf_counter() - start

        per_input = disagreement_profile(instance, output)
        report = SolveReport(
            algorithm=self.get_name(),
            output=output,
            objective=sum(per_input),
            per_input=per_input,
            chosen_parent_set=chosen,
            wall_time=wall_time,
        )
        logger.info(
            f"{report.algorithm}: objective={report.objective} parents={output.parents} "
            f"(n={instance.n}, t={instance.t}, {wall_time * 1000:.2f} ms)"
        )
        return report
