"""Check registry for the verification suite.

Each check is a plain function ``(max_n, enumeration_limit) -> CheckOutcome``
registered under a stable id; ``run_check`` times it and wraps the outcome in
a :class:`CheckReport`.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any, Literal

from avoid321.errors import InvalidArgumentError
from avoid321.models.results import CheckReport

logger = logging.getLogger(__name__)

#: Which VerifyConfig field supplies a check's default range.
RangeSetting = Literal["fast_max_n", "sign_balance_max_index", "forgetfulness_max_n"]


@dataclass
class CheckOutcome:
    """What a check function found.

    ``passed`` defaults to "no witness found"; checks that succeed by finding
    a witness set it explicitly.
    """

    first_n: int
    last_n: int
    witness: dict[str, Any] | None = None
    passed: bool | None = None

    @property
    def ok(self) -> bool:
        return self.witness is None if self.passed is None else self.passed


CheckFn = Callable[[int, int], CheckOutcome]


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    fn: CheckFn
    description: str
    range_setting: RangeSetting


# ---------------------------------------------------------------------------
# Registry helpers
# ---------------------------------------------------------------------------

#: Maps check ids -> specs, in registration order.
CHECK_REGISTRY: dict[str, CheckSpec] = {}


def register_check(
    check_id: str, description: str, range_setting: RangeSetting = "fast_max_n"
) -> Callable[[CheckFn], CheckFn]:
    """Function decorator that registers a check under *check_id*."""

    def _decorator(fn: CheckFn) -> CheckFn:
        CHECK_REGISTRY[check_id] = CheckSpec(check_id, fn, description, range_setting)
        return fn

    return _decorator


def load_builtin_checks() -> dict[str, CheckSpec]:
    """Import the built-in checks so they register, then return the registry."""
    from avoid321.components.checks import identities  # noqa: F401

    return CHECK_REGISTRY


def get_check(check_id: str) -> CheckSpec:
    """Look up a registered check.

    Raises:
        InvalidArgumentError: If the id is unknown
    """
    registry = load_builtin_checks()
    spec = registry.get(check_id)
    if spec is None:
        known = ", ".join(registry)
        raise InvalidArgumentError(f"Unknown check '{check_id}' (known: {known})")
    return spec


def run_check(check_id: str, max_n: int, enumeration_limit: int) -> CheckReport:
    """Run one check and time it.

    Module-level so process pools can pickle it by name.
    """
    spec = get_check(check_id)
    logger.info(f"Running check '{check_id}' up to {max_n}")
    start = time.perf_counter()
    outcome = spec.fn(max_n, enumeration_limit)
    elapsed_ms = (time.perf_counter() - start) * 1000

    witness = outcome.witness
    if not outcome.ok and witness is None:
        witness = {"searched": [outcome.first_n, outcome.last_n]}
    report = CheckReport(
        check_id=check_id,
        n_range=(outcome.first_n, outcome.last_n),
        status="pass" if outcome.ok else "fail",
        witness=witness,
        elapsed_ms=elapsed_ms,
    )
    log = logger.info if report.passed else logger.warning
    log(
        f"Check '{check_id}' {report.status} on n={outcome.first_n}..{outcome.last_n} "
        f"({elapsed_ms:.1f} ms)"
    )
    return report
