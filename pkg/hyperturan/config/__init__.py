"""Configuration module for hyperturan."""

from hyperturan.config.loader import get_config_path, load_config
from hyperturan.config.schema import (
    Config,
    DensityConfig,
    EnumerationConfig,
    ReportConfig,
    SolverConfig,
)

__all__ = [
    "Config",
    "DensityConfig",
    "EnumerationConfig",
    "ReportConfig",
    "SolverConfig",
    "get_config_path",
    "load_config",
]
