"""
Command handlers for the lorentz-surfaces command line.

Routes each subcommand to its strategy and maps failures to exit codes.
"""

import argparse
import logging

from ..config import NumericsConfig
from ..errors import LorentzError
from ..services import LorentzToolkit
from ..utils.error_handling import format_command_error
from .strategies.base import EXIT_USAGE, CommandResult, CommandStrategy
from .strategies.correspondence import MergeHandler, SplitHandler
from .strategies.sampling import CurveHandler, SurfaceHandler
from .strategies.verification import VerifyHandler

logger = logging.getLogger(__name__)


class CommandHandlers:
    """Handles subcommands using Strategy pattern"""

    def __init__(self, toolkit: LorentzToolkit, config: NumericsConfig):
        self.toolkit = toolkit
        self.config = config

        self._strategies: dict[str, CommandStrategy] = {
            # Sampling
            "curve": CurveHandler(toolkit, config),
            "surface": SurfaceHandler(toolkit, config),
            # Correspondence
            "split": SplitHandler(toolkit, config),
            "merge": MergeHandler(toolkit, config),
            # Verification
            "verify": VerifyHandler(toolkit, config),
        }

    @property
    def commands(self) -> list[str]:
        return list(self._strategies)

    async def handle_command(self, name: str, args: argparse.Namespace) -> CommandResult:
        """Route a subcommand to its strategy handler"""
        if name not in self._strategies:
            return CommandStrategy._create_error_response(f"Unknown command: {name}")
        try:
            return await self._strategies[name].handle(args)
        except LorentzError as e:
            logger.error(f"Error running command {name}: {e}")
            return CommandResult(exit_code=EXIT_USAGE, message=format_command_error(name, e))
        except OSError as e:
            logger.error(f"I/O error running command {name}: {e}")
            return CommandResult(exit_code=EXIT_USAGE, message=f"{name}: {type(e).__name__}: {e}")
