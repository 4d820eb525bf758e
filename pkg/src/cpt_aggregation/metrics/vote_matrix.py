"""Explicit vote matrix M(T) with frequency counts and voting-configuration histograms.

Row ``mu`` is the swap whose non-target attributes read ``format(mu, "0{n-1}b")``
(attribute 0 is the leading bit). Column ``nu`` holds the votes of input ``nu``:
1 for ``1>0`` and 0 for ``0>1``.

Materializing the matrix costs ``t * 2^(n-1)`` cells, so it is guarded by
``MAX_MATRIX_N`` and used only for display and as a test oracle.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Mapping, NamedTuple, Optional, Sequence, Union

import numpy as np

from cpt_aggregation import config
from cpt_aggregation.errors import ResourceLimitError, SelectionError
from cpt_aggregation.model.cpt import Context, project
from cpt_aggregation.model.instance import Instance

logger = logging.getLogger(__name__)


class FreqCount(NamedTuple):
    """Vote counts over a selection of the matrix."""

    zeros: int
    ones: int

    @property
    def total(self) -> int:
        return self.zeros + self.ones


@dataclass(frozen=True)
class VoteMatrix:
    """The ``2^(n-1) x t`` boolean matrix of input votes."""

    n: int
    t: int
    votes: np.ndarray

    @property
    def width(self) -> int:
        return self.n - 1

    @property
    def row_count(self) -> int:
        return 1 << (self.n - 1)

    def row_label(self, row: int) -> str:
        """Instantiation of the non-target attributes for swap ``row``."""
        return format(row, f"0{self.width}b") if self.width else ""

    def row_ones(self) -> np.ndarray:
        """Number of ``1>0`` votes per row."""
        return self.votes.sum(axis=1, dtype=np.int64)

    def column(self, index: int) -> np.ndarray:
        return self.votes[:, index]


@dataclass(frozen=True)
class ConfigHistogram:
    """Number of swaps per voting configuration (row vector written as a bit string)."""

    counts: Dict[str, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def is_uniform(self) -> bool:
        return len(set(self.counts.values())) <= 1

    def to_dict(self) -> Dict[str, int]:
        return dict(self.counts)


def build_matrix(instance: Instance, max_n: Optional[int] = None) -> VoteMatrix:
    """Materialize M(T).

    Args:
        instance: Problem instance
        max_n: Largest attribute count allowed (defaults to ``config.MAX_MATRIX_N``)

    Returns:
        VoteMatrix with one row per swap and one column per input CPT

    Raises:
        ResourceLimitError: If ``instance.n`` exceeds the guard
    """
    limit = config.MAX_MATRIX_N if max_n is None else max_n
    if instance.n > limit:
        raise ResourceLimitError("max_matrix_n", instance.n, limit)

    universe = instance.universe
    columns = [cpt.votes[project(universe, cpt.parents)] for cpt in instance]
    votes = np.column_stack(columns).astype(np.uint8)
    votes.setflags(write=False)
    logger.debug(f"Built vote matrix {votes.shape[0]}x{votes.shape[1]} for n={instance.n}")
    return VoteMatrix(instance.n, instance.t, votes)


def _row_filter(matrix: VoteMatrix, context: Union[Context, Mapping[int, int]]) -> np.ndarray:
    if isinstance(context, Context):
        context = dict(zip(context.parents.indices, context.assignment))
    rows = np.arange(matrix.row_count, dtype=np.int64)
    keep = np.ones(matrix.row_count, dtype=bool)
    for attribute, value in context.items():
        if not 0 <= attribute < matrix.width:
            raise SelectionError(f"Attribute {attribute} out of range for {matrix.width} potential parents")
        if value not in (0, 1):
            raise SelectionError(f"Attribute {attribute} must be fixed to 0 or 1, got {value}")
        keep &= ((rows >> (matrix.width - 1 - attribute)) & 1) == value
    return keep


def freq(
    matrix: VoteMatrix,
    context: Optional[Union[Context, Mapping[int, int]]] = None,
    columns: Optional[Sequence[int]] = None,
) -> FreqCount:
    """Count ``0>1`` and ``1>0`` votes in a sub-matrix.

    Args:
        matrix: Vote matrix
        context: Optional partial instantiation restricting the rows
        columns: Optional sub-tuple of input indices restricting the columns

    Returns:
        FreqCount over the selection

    Raises:
        SelectionError: If an attribute or column is out of range, or ``columns`` is empty
    """
    selected = matrix.votes
    if context:
        selected = selected[_row_filter(matrix, context)]
    if columns is not None:
        columns = list(columns)
        if not columns:
            raise SelectionError("Column selection must not be empty")
        for index in columns:
            if not 0 <= index < matrix.t:
                raise SelectionError(f"Column {index} out of range for t={matrix.t}")
        selected = selected[:, columns]
    ones = int(selected.sum(dtype=np.int64))
    return FreqCount(int(selected.size) - ones, ones)


def config_histogram(matrix: VoteMatrix) -> ConfigHistogram:
    """Histogram of voting configurations, keys in ascending bit-string order."""
    configurations, counts = np.unique(matrix.votes, axis=0, return_counts=True)
    return ConfigHistogram(
        {"".join(str(int(bit)) for bit in row): int(count) for row, count in zip(configurations, counts)}
    )


def majority_lower_bound(matrix: VoteMatrix) -> int:
    """Sum over swaps of the minority vote count; the optimum objective value."""
    ones = matrix.row_ones()
    return int(np.minimum(ones, matrix.t - ones).sum())
