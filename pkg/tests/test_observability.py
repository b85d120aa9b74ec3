"""Tests for structured logging and timing."""

import asyncio
import logging

import numpy as np
import pytest

from lorentz_surfaces.errors import PreconditionError
from lorentz_surfaces.observability import PerformanceMonitor, StructuredLogger, performance_monitor


class TestStructuredLogger:
    def test_key_value_fields(self, caplog):
        caplog.set_level(logging.INFO, logger="test.structured")
        StructuredLogger("test.structured").info("Sampled", grid=(20, 10), tol=0.1, points=np.zeros((4, 2)))
        assert caplog.messages == ["Sampled | grid=20x10 tol=0.1 points=array(4, 2)"]

    def test_plain_message(self, caplog):
        caplog.set_level(logging.INFO, logger="test.structured")
        StructuredLogger("test.structured").info("Done")
        assert caplog.messages == ["Done"]

    def test_error_carries_witness(self, caplog):
        caplog.set_level(logging.ERROR, logger="test.structured")
        StructuredLogger("test.structured").error("Failed", error=PreconditionError("F vanishes", (1.0, -1.0)))
        message = caplog.messages[0]
        assert "error_type=PreconditionError" in message
        assert "witness=1.0x-1.0" in message

    def test_debug_is_skipped_below_level(self, caplog):
        caplog.set_level(logging.INFO, logger="test.structured")
        StructuredLogger("test.structured").debug("hidden", value=1)
        assert caplog.messages == []


class TestPerformanceMonitor:
    def test_decorated_method_logs_duration(self, caplog):
        class Service:
            monitor = PerformanceMonitor("test.monitor")

            @performance_monitor("sampling")
            async def run(self, value):
                return value * 2

        caplog.set_level(logging.INFO, logger="test.monitor")
        assert asyncio.run(Service().run(21)) == 42
        assert caplog.messages[-1].startswith("sampling done | duration_ms=")

    def test_failure_is_logged_and_raised(self, caplog):
        class Service:
            monitor = PerformanceMonitor("test.monitor")

            @performance_monitor("merge")
            async def run(self):
                raise PreconditionError("coinciding generators", 0.5)

        caplog.set_level(logging.INFO, logger="test.monitor")
        with pytest.raises(PreconditionError):
            asyncio.run(Service().run())
        assert caplog.messages[-1].startswith("merge failed | error_type=PreconditionError")

    def test_sweep(self, caplog):
        caplog.set_level(logging.DEBUG, logger="test.monitor")
        with PerformanceMonitor("test.monitor").sweep(20, 10, 3):
            pass
        assert caplog.messages[-1].startswith("Grid sweep | grid=20x10 chunks=3 duration_ms=")
