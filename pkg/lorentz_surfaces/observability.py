"""
Observability utilities for the surface toolkit.

Log lines have the form ``message | key=value ...``. Floats are written with
``repr`` so logged tolerances and errors can be pasted back into a config file;
numpy arrays are summarized by shape.
"""

import logging
import time
from contextlib import asynccontextmanager, contextmanager
from functools import wraps
from typing import Any

import numpy as np


def _render(value: Any) -> str:
    if isinstance(value, np.ndarray):
        return f"array{value.shape}"
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (tuple, list)) and len(value) <= 4:
        return "x".join(_render(v) for v in value)
    return str(value)


class StructuredLogger:
    """Key=value logger for services, strategies and the command line"""

    def __init__(self, name: str):
        self.logger = logging.getLogger(name)

    def _emit(self, level: int, message: str, fields: dict[str, Any]) -> None:
        if not self.logger.isEnabledFor(level):
            return
        if fields:
            message = f"{message} | " + " ".join(f"{key}={_render(value)}" for key, value in fields.items())
        self.logger.log(level, message)

    def debug(self, message: str, **fields):
        self._emit(logging.DEBUG, message, fields)

    def info(self, message: str, **fields):
        self._emit(logging.INFO, message, fields)

    def warning(self, message: str, **fields):
        self._emit(logging.WARNING, message, fields)

    def error(self, message: str, error: Exception | None = None, **fields):
        if error is not None:
            fields = {"error_type": type(error).__name__, "error_message": str(error), **fields}
            witness = getattr(error, "witness", None)
            if witness is not None:
                fields["witness"] = witness
        self._emit(logging.ERROR, message, fields)


class PerformanceMonitor:
    """Wall-clock timing of toolkit operations and grid sweeps"""

    def __init__(self, name: str = __name__):
        self.logger = StructuredLogger(name)

    @staticmethod
    def elapsed_ms(start: float) -> float:
        return round((time.perf_counter() - start) * 1000, 2)

    @asynccontextmanager
    async def operation(self, operation: str, **context):
        start = time.perf_counter()
        self.logger.debug(f"Starting {operation}", **context)
        try:
            yield
        except Exception as e:
            self.logger.error(f"{operation} failed", error=e, duration_ms=self.elapsed_ms(start), **context)
            raise
        self.logger.info(f"{operation} done", duration_ms=self.elapsed_ms(start), **context)

    @contextmanager
    def sweep(self, rows: int, columns: int, chunks: int):
        """Times one chunked grid evaluation"""
        start = time.perf_counter()
        yield
        self.logger.debug("Grid sweep", grid=(rows, columns), chunks=chunks, duration_ms=self.elapsed_ms(start))


def performance_monitor(operation_name: str):
    """Decorator timing an async service method"""

    def decorator(func):
        @wraps(func)
        async def wrapper(self, *args, **kwargs):
            monitor = getattr(self, "monitor", None) or PerformanceMonitor(func.__module__)
            async with monitor.operation(operation_name, method=func.__qualname__):
                return await func(self, *args, **kwargs)

        return wrapper

    return decorator
