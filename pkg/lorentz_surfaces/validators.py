"""
Input validation for the command line, scene files and configuration.
"""

import re
from pathlib import Path

from .errors import LorentzError

GRID_PATTERN = re.compile(r"^\s*(\d+)\s*(?:[xX]\s*(\d+))?\s*$")
PROJECTIONS = ("drop1", "drop2", "drop3", "drop4")


class ValidationError(LorentzError):
    """Invalid user input; ``pointer`` is a JSON pointer into the offending document"""

    def __init__(self, message: str, pointer: str | None = None):
        super().__init__(message if pointer is None else f"{pointer}: {message}")
        self.pointer = pointer


class InputValidator:
    """Validates and normalizes user inputs"""

    @classmethod
    def validate_grid(cls, grid: str) -> tuple[int, int]:
        """Parse N or NxM into a pair of resolutions, each at least 2"""
        if not grid:
            raise ValidationError("Grid cannot be empty")
        match = GRID_PATTERN.match(grid)
        if not match:
            raise ValidationError(f"Grid must look like N or NxM, got '{grid}'")
        n = int(match.group(1))
        m = int(match.group(2)) if match.group(2) else n
        if n < 2 or m < 2:
            raise ValidationError("Grid resolution must be at least 2 in each direction")
        return n, m

    @classmethod
    def validate_projection(cls, projection: str) -> str:
        if projection not in PROJECTIONS:
            raise ValidationError(f"Projection must be one of {', '.join(PROJECTIONS)}")
        return projection

    @classmethod
    def validate_tolerance(cls, tolerance: float) -> float:
        if not tolerance > 0:
            raise ValidationError("Tolerance must be positive")
        return tolerance

    @classmethod
    def validate_omega(cls, omega: int) -> int:
        if omega not in (1, -1):
            raise ValidationError(f"Omega must be +1 or -1, got {omega}")
        return omega

    @classmethod
    def validate_output_dir(cls, path: str) -> Path:
        directory = Path(path)
        if directory.exists() and not directory.is_dir():
            raise ValidationError(f"Output path '{path}' exists and is not a directory")
        return directory
