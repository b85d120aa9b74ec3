"""
Configuration for the numerical layer.

Values are loaded from environment variables, a JSON file and command line
arguments, in increasing order of priority.
"""

import argparse
import json
import logging
import os
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field
from pydantic import ValidationError as PydanticValidationError

from ..core.numerics import NumericTolerances
from ..utils.error_handling import format_pydantic_errors
from ..validators import ValidationError

logger = logging.getLogger(__name__)

ENV_VARIABLES = {
    "threads": "LW_THREADS",
    "grid_points": "LW_GRID_POINTS",
    "seed": "LW_SEED",
}


class NumericsConfig(BaseModel):
    """Validated numerics configuration"""

    model_config = ConfigDict(extra="forbid", validate_assignment=True, frozen=True)

    threads: int = Field(default=4, ge=1, le=256, description="Worker threads for grid sweeps")
    grid_points: int = Field(default=512, ge=16, le=8192, description="Validation grid size per interval")
    tol_degenerate: float = Field(default=1e-9, gt=0, description="Threshold for vanishing factors")
    quad_abs_tol: float = Field(default=1e-10, gt=0, description="Quadrature absolute tolerance")
    quad_rel_tol: float = Field(default=1e-12, gt=0, description="Quadrature relative tolerance")
    quad_limit: int = Field(default=100_000, ge=10, description="Quadrature subdivision cap")
    root_tol: float = Field(default=1e-12, gt=0, description="Root finding tolerance")
    fd_step: float = Field(default=1e-4, gt=0, lt=1, description="Finite-difference step of the curvature oracle")
    seed: int = Field(default=0, ge=0, description="Seed for randomized checks")
    tolerance: float | None = Field(default=None, gt=0, description="Override for every verification tolerance")
    projection: Literal["drop1", "drop2", "drop3", "drop4"] = "drop3"

    @classmethod
    def _build(cls, values: dict[str, Any], source: str) -> "NumericsConfig":
        try:
            return cls(**values)
        except PydanticValidationError as e:
            raise ValidationError(f"Invalid configuration from {source}: {format_pydantic_errors(e)}") from e

    @classmethod
    def from_env(cls) -> "NumericsConfig":
        """Load configuration from environment variables"""
        values = {field: os.environ[name] for field, name in ENV_VARIABLES.items() if os.environ.get(name)}
        return cls._build(values, "environment")

    @classmethod
    def from_file(cls, config_path: str) -> "NumericsConfig":
        """Load configuration from a JSON file"""
        path = Path(config_path)
        if not path.exists():
            raise ValidationError(f"Configuration file not found: {config_path}")
        try:
            with open(path) as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ValidationError(f"Invalid JSON in config file: {e}") from e
        if not isinstance(data, dict):
            raise ValidationError("Configuration file must contain a JSON object")
        return cls._build(data, config_path)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "NumericsConfig":
        """Load the options given on the command line"""
        values = {
            "seed": getattr(args, "seed", None),
            "tolerance": getattr(args, "tolerance", None),
            "projection": getattr(args, "projection", None),
        }
        return cls._build({k: v for k, v in values.items() if v is not None}, "command line")

    def merge_with(self, other: "NumericsConfig") -> "NumericsConfig":
        """Merge with another config; explicitly set values of ``other`` win"""
        overrides = other.model_dump(exclude_unset=True)
        merged = {**self.model_dump(exclude_unset=True), **overrides}
        return NumericsConfig(**merged)

    def tolerances(self) -> NumericTolerances:
        return NumericTolerances(
            grid_points=self.grid_points,
            tol_degenerate=self.tol_degenerate,
            quad_abs_tol=self.quad_abs_tol,
            quad_rel_tol=self.quad_rel_tol,
            quad_limit=self.quad_limit,
            root_tol=self.root_tol,
            fd_step=self.fd_step,
        )

    def __repr__(self) -> str:
        return f"NumericsConfig(threads={self.threads}, grid_points={self.grid_points}, seed={self.seed})"
