"""
Lorentz surfaces command line

Samples null curves and minimal Lorentz surfaces in R31 and R42 from scene files,
splits and merges surfaces through the R42 <-> R31 pair correspondence, and runs
invariant verification suites.
"""

import argparse
import asyncio
import logging
import sys

from dotenv import load_dotenv

from .config import NumericsConfig
from .errors import LorentzError
from .handlers import EXIT_USAGE, CommandHandlers
from .handlers.command_definitions import add_commands
from .services import LorentzToolkit

logger = logging.getLogger("lorentz-surfaces")


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse command line arguments"""
    parser = argparse.ArgumentParser(
        prog="lorentz-surfaces",
        description="Minimal Lorentz surfaces in R31 and R42",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Configuration Priority (highest to lowest):
1. Command line arguments
2. Configuration file (--config)
3. Environment variables

Environment Variables:
  LW_THREADS      Worker threads for grid sweeps and verification (default: 4)
  LW_GRID_POINTS  Validation grid size for precondition checks (default: 512)
  LW_SEED         Seed for randomized checks (default: 0)

Exit Codes:
  0  success
  1  verification failure
  2  usage or scene error

Example Usage:
  # Table of the first generating curve of the catenoid
  lorentz-surfaces curve --scene catenoid-gamma1 --grid 5

  # Mesh and table of the merged catenoid
  lorentz-surfaces surface --scene catenoid-merged --grid 20x20 --out build/

  # Split and merge back
  lorentz-surfaces split --scene catenoid-merged --out build/
  lorentz-surfaces merge --scene build/catenoid-merged-g.json --scene build/catenoid-merged-h.json

  # Verification report of the catenoid corpus
  lorentz-surfaces verify --corpus catenoid-example
        """,
    )
    parser.add_argument("--config", help="Path to JSON configuration file")
    parser.add_argument("--verbose", action="store_true", help="Enable verbose logging")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    add_commands(subparsers)
    return parser.parse_args(argv)


def load_config(args: argparse.Namespace) -> NumericsConfig:
    """Load configuration from various sources"""
    # Environment variables as base
    config = NumericsConfig.from_env()

    if args.config:
        config = config.merge_with(NumericsConfig.from_file(args.config))
        logger.info(f"Loaded configuration from file: {args.config}")

    # Command line arguments (highest priority)
    config = config.merge_with(NumericsConfig.from_args(args))
    logger.debug(f"Configuration loaded: {config!r}")
    return config


async def main(argv: list[str] | None = None) -> int:
    """Main entry point; returns the process exit code"""
    args = parse_args(argv)
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        config = load_config(args)
    except LorentzError as e:
        logger.error(f"Configuration error: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    handlers = CommandHandlers(LorentzToolkit(config), config)
    result = await handlers.handle_command(args.command, args)
    if result.output:
        sys.stdout.write(result.output)
        sys.stdout.flush()
    if result.message:
        print(result.message, file=sys.stderr)
    return result.exit_code


def run(argv: list[str] | None = None) -> int:
    """Console script entry point"""
    load_dotenv()
    logging.basicConfig(level=logging.INFO, stream=sys.stderr)
    try:
        return asyncio.run(main(argv))
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return 130


if __name__ == "__main__":
    sys.exit(run())
