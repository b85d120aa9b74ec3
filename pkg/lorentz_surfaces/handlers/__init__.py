"""Command handlers for the lorentz-surfaces command line."""

from .command_handlers import CommandHandlers
from .strategies.base import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED, CommandResult

__all__ = ["CommandHandlers", "CommandResult", "EXIT_OK", "EXIT_USAGE", "EXIT_VERIFICATION_FAILED"]
