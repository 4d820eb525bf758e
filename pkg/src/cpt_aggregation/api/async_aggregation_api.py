"""Async API for running many comparisons concurrently."""

import asyncio
import logging
from typing import Callable, List, Optional

from cpt_aggregation import config
from cpt_aggregation.api.aggregation_api import AggregationAPI, ComparisonResult
from cpt_aggregation.model.instance import Instance

logger = logging.getLogger(__name__)


class AsyncAggregationAPI(AggregationAPI):
    """AggregationAPI with non-blocking and batch methods.

    Solves run in the default thread pool; a semaphore bounds how many run at once.
    """

    def __init__(
        self,
        max_workers: Optional[int] = None,
        max_parent_bits: Optional[int] = None,
        max_matrix_n: Optional[int] = None,
    ):
        """Initialize async aggregation API.

        Args:
            max_workers: Maximum concurrent comparisons (defaults to ``config.REPORT_WORKERS``)
            max_parent_bits: Override for the fixed-parent-set guard
            max_matrix_n: Override for the vote-matrix guard
        """
        super().__init__(max_parent_bits=max_parent_bits, max_matrix_n=max_matrix_n)
        self.max_workers = config.REPORT_WORKERS if max_workers is None else max_workers
        if self.max_workers < 1:
            raise ValueError(f"max_workers must be at least 1, got {self.max_workers}")

    async def compare_async(self, instance: Instance) -> ComparisonResult:
        loop = asyncio.get_running_loop()
        return await loop.run_in_executor(None, self.compare, instance)

    async def compare_batch(
        self,
        instances: List[Instance],
        progress_callback: Optional[Callable[[int, int], None]] = None,
    ) -> List[ComparisonResult]:
        """Compare algorithms on many instances concurrently.

        Args:
            instances: Instances to compare
            progress_callback: Optional callback(completed, total)

        Returns:
            Results in the same order as ``instances``

        Raises:
            ResourceLimitError: If any instance exceeds a guard
        """
        if not instances:
            return []

        total = len(instances)
        completed = 0
        results: List[Optional[ComparisonResult]] = [None] * total
        semaphore = asyncio.Semaphore(self.max_workers)

        async def compare_with_semaphore(index: int, instance: Instance) -> None:
            nonlocal completed
            async with semaphore:
                results[index] = await self.compare_async(instance)
                completed += 1
                if progress_callback:
                    progress_callback(completed, total)

        tasks = [asyncio.create_task(compare_with_semaphore(i, instance)) for i, instance in enumerate(instances)]
        try:
            await asyncio.gather(*tasks)
        except Exception:
            for task in tasks:
                task.cancel()
            raise

        logger.debug(f"Compared {total} instances with {self.max_workers} workers")
        return [result for result in results if result is not None]

    async def __aenter__(self):
        return self

    async def __aexit__(self, exc_type, exc_val, exc_tb):
        return False
