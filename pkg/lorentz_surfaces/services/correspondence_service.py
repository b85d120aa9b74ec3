"""
Correspondence service.

Splits canonical R42 surface scenes into pairs of R31 surface scenes and merges
such pairs back.
"""

from dataclasses import dataclass, field
from typing import Any

from ..core.correspondence import area_relation, merge_surfaces, relation_from_surface, split_surface
from ..core.minimal_surfaces import CanonicalSurfaceDataR42, classify_type, interior_grid
from ..core.verification import RELATION_SAMPLES
from ..errors import LorentzError
from ..observability import performance_monitor
from ..scenes import (
    SceneFile,
    merged_scene_name,
    pair_from_scenes,
    scene_surface_data,
    split_scene_names,
    surface_data_to_scene,
)
from ..validators import ValidationError
from .base_service import BaseService


@dataclass(frozen=True)
class CorrespondenceResult:
    scenes: tuple[SceneFile, ...]
    report: dict[str, Any] = field(default_factory=dict)


class CorrespondenceService(BaseService):
    """Split and merge of surface scenes"""

    def _pair_report(self, data: CanonicalSurfaceDataR42) -> dict[str, Any]:
        """Type and relation summary of a canonical surface and its pair"""
        t1, t2 = interior_grid(data.domain, RELATION_SAMPLES)
        sample = relation_from_surface(data, t1, t2, self.tolerances)
        F, F_pair = area_relation(data, t1, t2)
        return {
            "type": sample.surface_type.value,
            "K_g_range": [float(sample.K_g.min()), float(sample.K_g.max())],
            "K_h_range": [float(sample.K_h.min()), float(sample.K_h.max())],
            "max_area_relation_error": float(abs(F - F_pair).max()),
        }

    def _split(self, scene: SceneFile) -> CorrespondenceResult:
        data = scene_surface_data(scene)
        if not isinstance(data, CanonicalSurfaceDataR42):
            raise ValidationError("Splitting needs a canonical R42 surface scene", "/kind")
        classify_type(data, self.tolerances)
        pair = split_surface(data)
        g_name, h_name = split_scene_names(scene.name)
        options = {"grid": list(scene.grid)}
        scenes = (
            surface_data_to_scene(pair.m_g, g_name, **options),
            surface_data_to_scene(pair.m_h, h_name, **options),
        )
        return CorrespondenceResult(scenes, {"source": scene.name, **self._pair_report(data)})

    def _merge(self, first: SceneFile, second: SceneFile, omega1: int, omega2: int) -> CorrespondenceResult:
        pair = pair_from_scenes(first, second)
        data = merge_surfaces(pair, omega1, omega2, self.tolerances)
        name = merged_scene_name(first.name, second.name)
        merged = surface_data_to_scene(data, name, grid=list(first.grid))
        report = {"sources": [first.name, second.name], "omega": [omega1, omega2]}
        try:
            report.update(self._pair_report(data))
        except LorentzError as e:
            self.logger.warning("Merged surface is not of general type", scene=name, error=str(e))
        return CorrespondenceResult((merged,), report)

    @performance_monitor("surface split")
    async def split(self, scene: SceneFile) -> CorrespondenceResult:
        self.logger.info("Splitting surface", scene=scene.name)
        return await self._run(self._split, scene)

    @performance_monitor("surface merge")
    async def merge(self, first: SceneFile, second: SceneFile, omega1: int = 1, omega2: int = 1) -> CorrespondenceResult:
        self.logger.info("Merging surfaces", first=first.name, second=second.name)
        return await self._run(self._merge, first, second, omega1, omega2)
