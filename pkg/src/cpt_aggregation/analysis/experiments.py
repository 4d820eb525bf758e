"""Experiment sweeps: measured objectives next to their closed-form predictions."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Tuple

from cpt_aggregation.analysis.formulas import (
    balanced_optimum,
    symmetric_input_objective,
    tkn_input_objective,
    tkn_optimum,
)
from cpt_aggregation.api.aggregation_api import ComparisonResult
from cpt_aggregation.api.async_aggregation_api import AsyncAggregationAPI
from cpt_aggregation.errors import ParameterError
from cpt_aggregation.generators.family_spec import FamilySpec, generate_family, make_family_spec

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    "family",
    "n",
    "k",
    "t",
    "f_opt",
    "f_trivial",
    "f_alg1",
    "ratio_trivial_num",
    "ratio_trivial_den",
    "ratio_alg1_num",
    "ratio_alg1_den",
    "formula_opt",
    "formula_input",
)


@dataclass
class ExperimentRow:
    """One measured family member.

    Ratios stay exact; decimals are produced only for display.
    """

    family: str
    n: int
    k: Optional[int]
    t: int
    f_opt: int
    f_trivial: int
    f_alg1: int
    ratio_trivial: Fraction
    ratio_alg1: Fraction
    formula_opt: Optional[int] = None
    formula_input: Optional[int] = None

    def formulas_match(self) -> bool:
        """True when every present closed form equals its measured value."""
        if self.formula_opt is not None and self.formula_opt != self.f_opt:
            return False
        if self.formula_input is not None and self.formula_input != self.f_trivial:
            return False
        return True

    def is_ordered(self) -> bool:
        """``f_opt <= f_alg1 <= f_trivial <= 2 * f_opt``."""
        return self.f_opt <= self.f_alg1 <= self.f_trivial <= 2 * self.f_opt

    def to_csv_row(self) -> List[str]:
        values = [
            self.family,
            self.n,
            self.k,
            self.t,
            self.f_opt,
            self.f_trivial,
            self.f_alg1,
            self.ratio_trivial.numerator,
            self.ratio_trivial.denominator,
            self.ratio_alg1.numerator,
            self.ratio_alg1.denominator,
            self.formula_opt,
            self.formula_input,
        ]
        return ["" if value is None else str(value) for value in values]

    def summary(self) -> str:
        k = f" k={self.k}" if self.k is not None else ""
        return (
            f"{self.family} n={self.n}{k} t={self.t}: opt={self.f_opt} trivial={self.f_trivial} "
            f"alg1={self.f_alg1} ratio_trivial={float(self.ratio_trivial):.4f} "
            f"ratio_alg1={float(self.ratio_alg1):.4f}"
        )


def closed_forms(spec: FamilySpec) -> Tuple[Optional[int], Optional[int]]:
    """Predicted (optimum, input objective) for a family member, or ``(None, None)``.

    For copy-parent and symmetric-disjoint the input objective is that of every input,
    hence also the trivial rule's objective.
    """
    if spec.family == "tkn":
        return tkn_optimum(spec.n, spec.k), tkn_input_objective(spec.n, spec.k)
    if spec.family == "symmetric-disjoint":
        return balanced_optimum(spec.n, spec.t), symmetric_input_objective(spec.n, spec.t)
    if spec.family == "copy-parent":
        return balanced_optimum(spec.n, spec.n - 1), symmetric_input_objective(spec.n, spec.n - 1)
    return None, None


def make_row(spec: FamilySpec, t: int, comparison: ComparisonResult) -> ExperimentRow:
    formula_opt, formula_input = closed_forms(spec)
    return ExperimentRow(
        family=spec.family,
        n=spec.n,
        k=spec.k,
        t=t,
        f_opt=comparison.optimum.objective,
        f_trivial=comparison.trivial.objective,
        f_alg1=comparison.alg1.objective,
        ratio_trivial=comparison.ratio_trivial,
        ratio_alg1=comparison.ratio_alg1,
        formula_opt=formula_opt,
        formula_input=formula_input,
    )


def tkn_sweep(n_values: Iterable[int]) -> List[FamilySpec]:
    """Every T^{k,n} with ``n`` in ``n_values`` and ``2 <= k <= n-1``."""
    return [make_family_spec(family="tkn", n=n, k=k) for n in n_values for k in range(2, n)]


def symmetric_sweep(t_values: Iterable[int], n_values: Iterable[int], parent_size: int = 1) -> List[FamilySpec]:
    """Symmetric-disjoint members for every fitting ``(t, n)`` pair, polarity seed 0."""
    n_values = list(n_values)
    return [
        make_family_spec(family="symmetric-disjoint", n=n, t=t, seed=0, parent_size=parent_size)
        for t in t_values
        for n in n_values
        if 3 <= t and t * parent_size <= n - 1
    ]


def copy_parent_sweep(n_values: Iterable[int]) -> List[FamilySpec]:
    return [make_family_spec(family="copy-parent", n=n) for n in n_values]


def random_sweep(count: int, n: int, t: int, max_parents: int, first_seed: int = 0) -> List[FamilySpec]:
    """``count`` random instances with consecutive seeds."""
    if count < 1:
        raise ParameterError(f"count must be at least 1, got {count}")
    return [
        make_family_spec(family="random", n=n, t=t, max_parents=max_parents, seed=seed)
        for seed in range(first_seed, first_seed + count)
    ]


async def run_sweep(
    specs: List[FamilySpec],
    api: Optional[AsyncAggregationAPI] = None,
    progress_callback: Optional[Callable[[int, int], None]] = None,
) -> List[ExperimentRow]:
    """Generate and compare every family member concurrently.

    Args:
        specs: Family members, in output order
        api: Async API to run on (a default one is created if omitted)
        progress_callback: Optional callback(completed, total)

    Returns:
        One ExperimentRow per spec, in the order of ``specs``
    """
    api = api or AsyncAggregationAPI()
    instances = [generate_family(spec) for spec in specs]
    comparisons = await api.compare_batch(instances, progress_callback)
    rows = [make_row(spec, instance.t, comparison) for spec, instance, comparison in zip(specs, instances, comparisons)]
    mismatched = [row for row in rows if not row.formulas_match()]
    if mismatched:
        logger.warning(f"{len(mismatched)} rows differ from their closed forms")
    return rows
