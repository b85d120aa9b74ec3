"""
Command definitions for the lorentz-surfaces command line.

Centralized definition of all subcommands and their arguments.
"""

import argparse
from dataclasses import dataclass, field
from typing import Any

from ..validators import PROJECTIONS


@dataclass(frozen=True)
class Argument:
    flags: tuple[str, ...]
    options: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Command:
    name: str
    description: str
    arguments: tuple[Argument, ...]


def get_scene_arguments(repeatable: bool = False) -> list[Argument]:
    """Scene selection; merge and verify accept several scenes"""
    help_text = "Built-in scene name or path to a JSON scene file"
    if repeatable:
        help_text += " (repeatable)"
    return [Argument(("--scene",), {"action": "append", "metavar": "SCENE", "help": help_text})]


def get_output_arguments(formats: tuple[str, ...]) -> list[Argument]:
    """Output directory and format"""
    return [
        Argument(("--out",), {"metavar": "DIR", "help": "Write files to this directory instead of stdout"}),
        Argument(("--format",), {"choices": formats, "help": f"Output format ({', '.join(formats)})"}),
    ]


def get_grid_arguments() -> list[Argument]:
    return [Argument(("--grid",), {"metavar": "N[xM]", "help": "Sampling resolution (default: the scene's grid)"})]


def get_check_arguments() -> list[Argument]:
    """Options that feed the verification checks"""
    return [
        Argument(("--seed",), {"type": int, "help": "Seed for randomized checks (default: 0)"}),
        Argument(("--tolerance",), {"type": float, "help": "Override every verification tolerance"}),
    ]


def get_sampling_commands() -> list[Command]:
    """Curve and surface sampling commands"""
    return [
        Command(
            name="curve",
            description="Sample a null curve: t, position, tangent, acceleration norm and natural parameter",
            arguments=(
                *get_scene_arguments(),
                Argument(("--curve",), {"type": int, "choices": (1, 2), "default": 1, "help": "Curve of a surface scene (default: 1)"}),
                *get_output_arguments(("csv", "json")),
                *get_grid_arguments(),
            ),
        ),
        Command(
            name="surface",
            description="Sample a minimal surface on a grid: OBJ mesh and CSV table of x, F, K, kappa and type",
            arguments=(
                *get_scene_arguments(),
                Argument(("--projection",), {"choices": PROJECTIONS, "help": "Coordinate dropped from R42 meshes (default: drop3)"}),
                *get_output_arguments(("obj", "csv", "json")),
                *get_grid_arguments(),
            ),
        ),
    ]


def get_correspondence_commands() -> list[Command]:
    """Split and merge commands"""
    return [
        Command(
            name="split",
            description="Split a canonical R42 surface scene into its pair of R31 surface scenes",
            arguments=(*get_scene_arguments(), *get_output_arguments(("json",))),
        ),
        Command(
            name="merge",
            description="Merge a pair of canonical R31 surface scenes into an R42 surface scene",
            arguments=(
                *get_scene_arguments(repeatable=True),
                Argument(("--omega1",), {"type": int, "choices": (1, -1), "default": 1, "help": "Sign of the first curve (default: 1)"}),
                Argument(("--omega2",), {"type": int, "choices": (1, -1), "default": 1, "help": "Sign of the second curve (default: 1)"}),
                *get_output_arguments(("json",)),
            ),
        ),
    ]


def get_verification_commands() -> list[Command]:
    """Verification command"""
    return [
        Command(
            name="verify",
            description="Run the invariant checks over scenes or a built-in corpus and write a JSON report",
            arguments=(
                *get_scene_arguments(repeatable=True),
                Argument(("--corpus",), {"help": "Built-in corpus: catenoid-example (alias paper-example), typed, curves, all, none"}),
                Argument(("--motion",), {"metavar": "PATH", "help": "JSON motion applied in the motion-invariance checks"}),
                *get_output_arguments(("json",)),
                *get_check_arguments(),
            ),
        ),
    ]


def get_all_commands() -> list[Command]:
    """Get all available commands"""
    return get_sampling_commands() + get_correspondence_commands() + get_verification_commands()


def add_commands(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    for command in get_all_commands():
        sub = subparsers.add_parser(command.name, help=command.description, description=command.description)
        for argument in command.arguments:
            sub.add_argument(*argument.flags, **argument.options)
