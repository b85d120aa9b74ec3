"""
Surface service.

Builds the minimal surface of a scene and samples points, F, K and kappa on a
product grid, sweeping row chunks on worker threads.
"""

import numpy as np

from ..core.minimal_surfaces import (
    CanonicalSurfaceDataR42,
    MinimalSurface,
    SurfaceSamples,
    SurfaceType,
    classify_type,
    surface_curvatures,
    surface_from_data,
)
from ..observability import performance_monitor
from ..scenes import SceneFile, scene_surface_data
from .base_service import BaseService


class SurfaceService(BaseService):
    """Minimal surface construction and sampling"""

    def build_surface(self, scene: SceneFile) -> MinimalSurface:
        data = scene_surface_data(scene)
        options = {}
        if scene.anchor is not None:
            options["anchor"] = scene.anchor
        if scene.base_point is not None:
            options["base_point"] = scene.base_point
        return surface_from_data(data, self.tolerances, **options)

    @staticmethod
    def _sample_rows(s: MinimalSurface, ts1: np.ndarray, ts2: np.ndarray) -> tuple[np.ndarray, ...]:
        t1, t2 = ts1[:, np.newaxis], ts2[np.newaxis, :]
        shape = (ts1.size, ts2.size)
        pair = surface_curvatures(s, t1, t2)
        return (
            s.grid_points(ts1, ts2),
            np.broadcast_to(s.first_form_F(t1, t2), shape),
            np.broadcast_to(pair.K, shape),
            np.broadcast_to(pair.kappa, shape),
        )

    @performance_monitor("surface sampling")
    async def surface_samples(self, scene: SceneFile, grid: tuple[int, int] | None = None) -> SurfaceSamples:
        n, m = scene.grid if grid is None else grid
        self.logger.info("Sampling surface", scene=scene.name, space=scene.space, grid=f"{n}x{m}")
        s = await self._run(self.build_surface, scene)
        surface_type: SurfaceType | None = None
        if isinstance(s.data, CanonicalSurfaceDataR42):
            surface_type = await self._run(classify_type, s.data, self.tolerances)

        ts1, ts2 = np.linspace(*s.domain[0], n), np.linspace(*s.domain[1], m)
        rows = await self._sweep_rows(lambda chunk: self._sample_rows(s, chunk, ts2), ts1, columns=m)
        points, F, K, kappa = (np.concatenate(parts, axis=-2) for parts in zip(*rows, strict=True))
        return SurfaceSamples(ts1, ts2, points, F, K, kappa, surface_type)
