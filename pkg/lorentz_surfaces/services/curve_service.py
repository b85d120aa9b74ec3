"""
Curve service.

Samples a single null curve of a scene: points, tangent, acceleration norm and
natural parameter.
"""

from dataclasses import dataclass

import numpy as np

from ..core.null_curves import CurveSamples, NullCurve, is_nondegenerate, natural_param
from ..observability import performance_monitor
from ..scenes import SceneFile, scene_curve
from .base_service import BaseService


@dataclass(frozen=True, eq=False)
class CurveTable:
    scene: SceneFile
    curve: NullCurve
    samples: CurveSamples


class CurveService(BaseService):
    """Null curve sampling"""

    def _sample_curve(self, scene: SceneFile, resolution: int, index: int) -> CurveTable:
        curve = scene_curve(scene, index, self.tolerances)
        ts = np.linspace(*curve.interval, resolution)
        report = is_nondegenerate(curve)
        if report:
            samples = curve.sample(ts, natural_param(curve))
        else:
            self.logger.warning("Curve is degenerate, natural parameter left empty", scene=scene.name, witness=report.witness)
            samples = curve.sample(ts)
        return CurveTable(scene, curve, samples)

    @performance_monitor("curve sampling")
    async def curve_table(self, scene: SceneFile, resolution: int | None = None, index: int = 0) -> CurveTable:
        resolution = scene.grid[0] if resolution is None else resolution
        self.logger.info("Sampling curve", scene=scene.name, space=scene.space, curve=index + 1, points=resolution)
        return await self._run(self._sample_curve, scene, resolution, index)
