"""Configuration models for avoid321."""

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# ============================================================================
# Section Models
# ============================================================================


class LimitsConfig(BaseModel):
    """Resource bounds for exhaustive enumeration.

    Catalan(16) = 35,357,670 permutations is the default ceiling; raising it is
    allowed but has to be asked for explicitly.
    """

    max_n: int = Field(
        default=16, ge=1, le=20, description="Largest n any enumeration may be asked for"
    )


class VerifyConfig(BaseModel):
    """Default ranges for the verification checks."""

    fast_max_n: int = Field(default=9, ge=1, le=20, description="Range of the fast suite")
    slow_max_n: int = Field(default=12, ge=1, le=20, description="Range of the slow suite")
    sign_balance_max_index: int = Field(
        default=14, ge=1, le=30, description="Largest index for the signed enumerators"
    )
    forgetfulness_max_n: int = Field(
        default=6, ge=1, le=12, description="Search bound for the forgetfulness witness"
    )
    enumeration_limit: int = Field(
        default=12,
        ge=1,
        le=20,
        description="Largest size enumerated exhaustively; larger sizes use recursions only",
    )


class OutputConfig(BaseModel):
    """Output defaults for the CLI."""

    include_timing: bool = Field(default=True, description="Emit the ms field in reports")
    report_file: str | None = Field(
        default=None, description="Append verification reports to this JSONL file"
    )


# ============================================================================
# Main Settings
# ============================================================================


class Avoid321Settings(BaseSettings):
    """Settings for the avoid321 library and CLI.

    Read from the environment only: ``AVOID321_LIMITS__MAX_N=18`` raises the
    enumeration bound.
    """

    model_config = SettingsConfigDict(
        env_prefix="AVOID321_", env_nested_delimiter="__", extra="ignore"
    )

    limits: LimitsConfig = Field(default_factory=LimitsConfig, description="Resource bounds")
    verify: VerifyConfig = Field(default_factory=VerifyConfig, description="Verification ranges")
    output: OutputConfig = Field(default_factory=OutputConfig, description="Output defaults")

    def validate_settings(self) -> tuple[bool, list[str]]:
        """Validate cross-field constraints and return (is_valid, errors)."""
        errors = []

        if self.verify.fast_max_n > self.verify.slow_max_n:
            errors.append(
                f"verify.fast_max_n ({self.verify.fast_max_n}) exceeds "
                f"verify.slow_max_n ({self.verify.slow_max_n})"
            )

        if self.verify.forgetfulness_max_n > self.verify.enumeration_limit:
            errors.append(
                f"verify.forgetfulness_max_n ({self.verify.forgetfulness_max_n}) exceeds "
                f"verify.enumeration_limit ({self.verify.enumeration_limit})"
            )

        return (len(errors) == 0, errors)
