"""Progress of a report sweep."""

import logging
import time
from dataclasses import dataclass
from typing import Callable, List, Optional

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepSnapshot:
    """State of a sweep at one point in time."""

    family: str
    stage: str
    completed: int
    total: int
    elapsed: float
    output: Optional[str] = None

    @property
    def percent(self) -> int:
        if self.total == 0:
            return 100 if self.stage == "done" else 0
        return self.completed * 100 // self.total

    def describe(self) -> str:
        if self.stage == "done":
            return f"{self.family}: {self.completed} rows written to {self.output} in {self.elapsed:.2f}s"
        return f"{self.family}: {self.stage} {self.completed}/{self.total} instances ({self.percent}%)"


SweepListener = Callable[[SweepSnapshot], None]


class SweepProgress:
    """Counts solved instances of one sweep and notifies listeners on every change.

    ``advance`` has the ``(completed, total)`` signature of ``compare_batch``'s
    progress callback and can be passed to it directly.
    """

    def __init__(self, family: str):
        self.family = family
        self.stage = "pending"
        self.completed = 0
        self.total = 0
        self.output: Optional[str] = None
        self._started = time.perf_counter()
        self._listeners: List[SweepListener] = []

    def add_listener(self, callback: SweepListener) -> None:
        self._listeners.append(callback)

    def start(self, total: int) -> None:
        self.stage = "solving"
        self.total = total
        self.completed = 0
        self._started = time.perf_counter()
        self._notify()

    def advance(self, completed: int, total: int) -> None:
        self.stage = "solving"
        self.completed = min(completed, total)
        self.total = total
        self._notify()

    def finish(self, rows_written: int, output: str) -> None:
        self.stage = "done"
        self.completed = rows_written
        self.total = max(self.total, rows_written)
        self.output = output
        self._notify()

    def snapshot(self) -> SweepSnapshot:
        return SweepSnapshot(
            family=self.family,
            stage=self.stage,
            completed=self.completed,
            total=self.total,
            elapsed=time.perf_counter() - self._started,
            output=self.output,
        )

    def _notify(self) -> None:
        snapshot = self.snapshot()
        for listener in self._listeners:
            try:
                listener(snapshot)
            except Exception as e:
                logger.warning(f"Sweep listener failed for {self.family}: {e}")
