"""
Verification service.

Runs the check suites over a list of scenes on worker threads and assembles a
report in scene order.
"""

from ..core.pseudo_euclidean import Motion
from ..core.verification import (
    CheckContext,
    CheckResult,
    VerificationReport,
    failed_check,
    verify_curve,
    verify_motion,
    verify_spinor_map,
    verify_surface,
)
from ..errors import LorentzError
from ..observability import performance_monitor
from ..scenes import SceneFile, scene_curve, scene_surface_data
from .base_service import BaseService


class VerificationService(BaseService):
    """Invariant checks over scenes and corpora"""

    def _context(self, tolerance: float | None) -> CheckContext:
        override = self.config.tolerance if tolerance is None else tolerance
        return CheckContext(seed=self.config.seed, tolerances=self.tolerances, override=override)

    @staticmethod
    def _verify_scene(scene: SceneFile, ctx: CheckContext, motion: Motion | None) -> list[CheckResult]:
        try:
            if not scene.is_surface:
                return verify_curve(scene.name, scene_curve(scene, 0, ctx.tolerances), ctx)
            data = scene_surface_data(scene)
        except LorentzError as e:
            return [failed_check("scene-construction", scene.name, ctx, e)]
        results = verify_surface(scene.name, data, ctx)
        if motion is not None and motion.space is scene.ambient:
            results += verify_motion(scene.name, data, motion, ctx)
        return results

    @performance_monitor("verification")
    async def verify(
        self,
        scenes: list[SceneFile],
        corpus: str,
        tolerance: float | None = None,
        motion: Motion | None = None,
    ) -> VerificationReport:
        ctx = self._context(tolerance)
        report = VerificationReport(corpus=corpus, seed=ctx.seed, tolerance_override=ctx.override)
        if not scenes:
            self.logger.info("Empty corpus, nothing to verify", corpus=corpus)
            return report

        self.logger.info("Verifying corpus", corpus=corpus, scenes=len(scenes), seed=ctx.seed)
        calls = [lambda s=scene: self._verify_scene(s, ctx, motion) for scene in scenes]
        calls.append(lambda: verify_spinor_map(ctx))
        for results in await self._gather(calls):
            report.checks.extend(results)
        summary = report.summary
        self.logger.info("Verification finished", corpus=corpus, **summary)
        return report
