"""Verification checks for avoid321."""

from avoid321.components.checks.base import (
    CHECK_REGISTRY,
    CheckOutcome,
    CheckSpec,
    get_check,
    register_check,
    run_check,
)
from avoid321.components.checks.pipeline import VerificationPipeline

__all__ = [
    "CHECK_REGISTRY",
    "CheckOutcome",
    "CheckSpec",
    "get_check",
    "register_check",
    "run_check",
    "VerificationPipeline",
]
