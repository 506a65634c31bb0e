from dataclasses import dataclass
from typing import Any, Literal

CheckStatus = Literal["pass", "fail"]


@dataclass
class CheckReport:
    """Outcome of one verification check over a range of sizes."""

    check_id: str
    n_range: tuple[int, int]
    status: CheckStatus
    witness: dict[str, Any] | None = None
    elapsed_ms: float = 0.0

    def __post_init__(self) -> None:
        if self.status == "fail" and self.witness is None:
            raise ValueError(f"Failed check '{self.check_id}' must carry a witness")

    def __bool__(self) -> bool:
        return self.passed

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self, include_timing: bool = True) -> dict[str, Any]:
        """Stable JSON record; ``ms`` is omitted when timing is suppressed."""
        record: dict[str, Any] = {
            "check": self.check_id,
            "n": list(self.n_range),
            "status": self.status,
            "witness": self.witness,
        }
        if include_timing:
            record["ms"] = round(self.elapsed_ms, 3)
        return record
