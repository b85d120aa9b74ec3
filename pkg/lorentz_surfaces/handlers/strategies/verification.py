"""Verification command handler using Strategy pattern"""

import argparse

from ...scenes import corpus_scenes, load_motion, load_scene
from ...utils.exporters import to_json
from ...validators import InputValidator
from .base import EXIT_VERIFICATION_FAILED, CommandResult, CommandStrategy

DEFAULT_CORPUS = "catenoid-example"


class VerifyHandler(CommandStrategy):
    """Handler for invariant verification over scenes or a corpus"""

    async def handle(self, args: argparse.Namespace) -> CommandResult:
        if args.scene:
            scenes = [load_scene(source) for source in args.scene]
            corpus = "scenes"
        else:
            corpus = args.corpus or DEFAULT_CORPUS
            scenes = corpus_scenes(corpus)
        motion = None if args.motion is None else load_motion(args.motion).to_motion()
        tolerance = None if args.tolerance is None else InputValidator.validate_tolerance(args.tolerance)

        report = await self.toolkit.verify(scenes, corpus, tolerance=tolerance, motion=motion)
        result = self._emit(args, [(f"verify-{corpus}.json", report.to_json())])
        if args.out is not None:
            result.output = to_json({"corpus": corpus, "summary": report.summary})
        if not report.ok:
            failed = [f"{check.subject}:{check.name}" for check in report.failures()]
            self.logger.warning("Verification failed", corpus=corpus, failed=len(failed))
            result.exit_code = EXIT_VERIFICATION_FAILED
            result.message = "Verification failed: " + ", ".join(failed)
        return result
