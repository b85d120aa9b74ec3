"""Base strategy interface for command handlers"""

import argparse
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path

from ...config import NumericsConfig
from ...observability import StructuredLogger
from ...scenes import SceneFile, load_scene
from ...services import LorentzToolkit
from ...utils.exporters import write_output
from ...validators import InputValidator, ValidationError

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


@dataclass
class CommandResult:
    """Outcome of a command: exit code, stdout payload, stderr message and written files"""

    exit_code: int = EXIT_OK
    output: str = ""
    message: str = ""
    files: list[Path] = field(default_factory=list)


class CommandStrategy(ABC):
    """Abstract base class for command handlers"""

    def __init__(self, toolkit: LorentzToolkit, config: NumericsConfig):
        self.toolkit = toolkit
        self.config = config
        self.logger = StructuredLogger(type(self).__module__)

    @abstractmethod
    async def handle(self, args: argparse.Namespace) -> CommandResult:
        """Handle the command execution"""
        pass

    @staticmethod
    def _create_error_response(message: str, exit_code: int = EXIT_USAGE) -> CommandResult:
        """Create standardized error response"""
        return CommandResult(exit_code=exit_code, message=f"Error: {message}")

    @staticmethod
    def _create_success_response(output: str = "", files: list[Path] | None = None) -> CommandResult:
        """Create standardized success response"""
        return CommandResult(output=output, files=files or [])

    @staticmethod
    def _single_scene(args: argparse.Namespace) -> SceneFile:
        scenes = getattr(args, "scene", None) or []
        if len(scenes) != 1:
            raise ValidationError(f"Expected exactly one --scene, got {len(scenes)}")
        return load_scene(scenes[0])

    @staticmethod
    def _grid(args: argparse.Namespace) -> tuple[int, int] | None:
        grid = getattr(args, "grid", None)
        return None if grid is None else InputValidator.validate_grid(grid)

    def _projection(self, args: argparse.Namespace, scene: SceneFile) -> str:
        """Command line flag, then the scene's own choice, then the configuration"""
        if getattr(args, "projection", None):
            return InputValidator.validate_projection(args.projection)
        if "projection" in scene.model_fields_set:
            return scene.projection
        return self.config.projection

    @staticmethod
    def _emit(args: argparse.Namespace, outputs: list[tuple[str, str]]) -> CommandResult:
        """Write (filename, content) pairs under --out, or concatenate them for stdout"""
        out = getattr(args, "out", None)
        if out is None:
            return CommandStrategy._create_success_response("".join(content for _, content in outputs))
        directory = InputValidator.validate_output_dir(out)
        files = [write_output(directory, filename, content) for filename, content in outputs]
        return CommandStrategy._create_success_response(files=files)
