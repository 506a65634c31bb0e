"""Settings management for avoid321."""

import logging
from functools import lru_cache

from pydantic import ValidationError

from avoid321.models.config import Avoid321Settings

logger = logging.getLogger(__name__)


def load_settings(**overrides: object) -> Avoid321Settings:
    """Load and validate settings from the environment.

    Args:
        **overrides: Section values that take precedence over the environment

    Returns:
        Validated Avoid321Settings object

    Raises:
        ValidationError: If a field is out of range
        ValueError: If cross-field validation fails
    """
    try:
        settings = Avoid321Settings(**overrides)  # type: ignore[arg-type]
    except ValidationError as e:
        logger.error("Settings validation failed:")
        for err in e.errors():
            loc = " -> ".join(str(x) for x in err["loc"])
            logger.error(f"  {loc}: {err['msg']}")
        raise

    is_valid, errors = settings.validate_settings()
    if not is_valid:
        logger.error("Settings validation failed:")
        for error in errors:
            logger.error(f"  {error}")
        error_msg = "Settings validation failed:\n" + "\n".join(f"  {e}" for e in errors)
        raise ValueError(error_msg)

    logger.debug(f"Settings loaded: max_n={settings.limits.max_n}")
    return settings


@lru_cache(maxsize=1)
def get_settings() -> Avoid321Settings:
    """Return the process-wide settings, loading them on first use."""
    return load_settings()


def max_n() -> int:
    """Current enumeration bound."""
    return get_settings().limits.max_n
