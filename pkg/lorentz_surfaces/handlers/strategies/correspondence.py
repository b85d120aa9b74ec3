"""Split and merge command handlers using Strategy pattern"""

import argparse

from ...scenes import load_scene
from ...services import CorrespondenceResult
from ...utils.exporters import to_json
from ...validators import InputValidator, ValidationError
from .base import CommandResult, CommandStrategy


class CorrespondenceHandler(CommandStrategy):
    """Shared output of split and merge: scene files plus a JSON report"""

    def _result_response(self, args: argparse.Namespace, result: CorrespondenceResult) -> CommandResult:
        if args.out is None:
            document = {"report": result.report, "scenes": [s.model_dump(mode="json", exclude_none=True) for s in result.scenes]}
            return self._create_success_response(to_json(document))
        emitted = self._emit(args, [(f"{scene.name}.json", scene.to_json()) for scene in result.scenes])
        report = {**result.report, "files": [path.name for path in emitted.files]}
        emitted.output = to_json(report)
        return emitted


class SplitHandler(CorrespondenceHandler):
    """Handler for splitting an R42 surface into its R31 pair"""

    async def handle(self, args: argparse.Namespace) -> CommandResult:
        scene = self._single_scene(args)
        result = await self.toolkit.split(scene)
        return self._result_response(args, result)


class MergeHandler(CorrespondenceHandler):
    """Handler for merging an R31 surface pair into an R42 surface"""

    async def handle(self, args: argparse.Namespace) -> CommandResult:
        sources = args.scene or []
        if len(sources) != 2:
            raise ValidationError(f"Merge needs exactly two --scene options, got {len(sources)}")
        first, second = (load_scene(source) for source in sources)
        omega1 = InputValidator.validate_omega(args.omega1)
        omega2 = InputValidator.validate_omega(args.omega2)
        result = await self.toolkit.merge(first, second, omega1, omega2)
        return self._result_response(args, result)
