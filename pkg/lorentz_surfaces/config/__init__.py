"""Configuration management for the surface toolkit."""

from .numerics_config import ENV_VARIABLES, NumericsConfig

__all__ = ["NumericsConfig", "ENV_VARIABLES"]
