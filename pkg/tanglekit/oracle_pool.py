"""Thread pool shared by the invariant oracle.

Jobs submitted here are independent; results always come back in input
order so aggregated answers do not depend on scheduling.
"""

from __future__ import annotations

import concurrent.futures
import logging
import threading
from collections.abc import Callable, Iterable
from typing import Any, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class OraclePool:
    """Lazily created ThreadPoolExecutor guarded by a lock."""

    def __init__(self, max_workers: int = 4) -> None:
        self._executor: concurrent.futures.ThreadPoolExecutor | None = None
        self._lock = threading.Lock()
        self.max_workers = max_workers

    @property
    def running(self) -> bool:
        return self._executor is not None

    def _ensure_executor(self) -> concurrent.futures.ThreadPoolExecutor:
        with self._lock:
            if self._executor is None:
                self._executor = concurrent.futures.ThreadPoolExecutor(
                    max_workers=self.max_workers, thread_name_prefix="oracle_worker"
                )
                logger.debug("started oracle pool with %d workers", self.max_workers)
            return self._executor

    def configure(self, max_workers: int) -> None:
        """Change the worker count; a running pool is restarted on next use."""
        if max_workers < 1:
            raise ValueError(f"max_workers must be positive, got {max_workers}")
        with self._lock:
            if max_workers == self.max_workers:
                return
            self.max_workers = max_workers
            if self._executor:
                self._executor.shutdown(wait=True)
                self._executor = None

    def execute(self, func: Callable[..., R], *args: Any, **kwargs: Any) -> R:
        """Run one job in the pool and wait for it."""
        return self._ensure_executor().submit(func, *args, **kwargs).result()

    def map_ordered(self, func: Callable[[T], R], items: Iterable[T]) -> list[R]:
        """Apply ``func`` to every item in parallel, results in input order."""
        items = list(items)
        # nested calls from a worker run inline; waiting on the same pool can deadlock
        nested = threading.current_thread().name.startswith("oracle_worker")
        if nested or len(items) <= 1 or self.max_workers == 1:
            return [func(item) for item in items]
        return list(self._ensure_executor().map(func, items))

    def shutdown(self) -> None:
        with self._lock:
            if self._executor:
                self._executor.shutdown(wait=True)
                self._executor = None


# Global instance
oracle_pool = OraclePool()
