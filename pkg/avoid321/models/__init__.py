"""Data models for avoid321."""

from avoid321.models.config import Avoid321Settings, LimitsConfig, OutputConfig, VerifyConfig
from avoid321.models.results import CheckReport

__all__ = [
    "Avoid321Settings",
    "LimitsConfig",
    "VerifyConfig",
    "OutputConfig",
    "CheckReport",
]
