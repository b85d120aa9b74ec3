"""
Base toolkit service.

Holds the numerics configuration and runs pure library calls on worker threads.
"""

import asyncio
from collections.abc import Callable
from typing import Any, TypeVar

import numpy as np

from ..config import NumericsConfig
from ..observability import PerformanceMonitor, StructuredLogger

T = TypeVar("T")

# Rows per chunk of a grid sweep; fixed so that output does not depend on the thread count
ROW_CHUNK = 8


class BaseService:
    """Configuration, logging and bounded worker pool shared by all services"""

    def __init__(self, config: NumericsConfig):
        self.config = config
        self.tolerances = config.tolerances()
        self.logger = StructuredLogger(type(self).__module__)
        self.monitor = PerformanceMonitor(type(self).__module__)
        self._semaphore = asyncio.Semaphore(config.threads)

    async def _run(self, fn: Callable[..., T], *args: Any, **kwargs: Any) -> T:
        """Run a blocking library call on a worker thread"""
        async with self._semaphore:
            return await asyncio.to_thread(fn, *args, **kwargs)

    async def _gather(self, calls: list[Callable[[], T]]) -> list[T]:
        """Run independent calls concurrently; results keep the order of ``calls``"""
        return list(await asyncio.gather(*(self._run(call) for call in calls)))

    async def _sweep_rows(self, fn: Callable[[np.ndarray], T], ts1: np.ndarray, columns: int = 1) -> list[T]:
        """Evaluate ``fn`` on consecutive row chunks of ``ts1``"""
        chunks = [ts1[i : i + ROW_CHUNK] for i in range(0, len(ts1), ROW_CHUNK)]
        with self.monitor.sweep(len(ts1), columns, len(chunks)):
            return await self._gather([lambda c=chunk: fn(c) for chunk in chunks])
