"""Dyck paths of semilength n and their peak statistics."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass

from avoid321.components.permutation import DescentSet, check_size, validate_class_set
from avoid321.errors import InvalidPathError, MathAssertionError

logger = logging.getLogger(__name__)

_STEP_CHARS = {"+": 1, "-": -1, "−": -1}


@dataclass(frozen=True)
class DyckPath:
    """A sequence of +1/-1 steps with nonnegative prefix sums and total zero."""

    steps: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))
        if not self.steps or len(self.steps) % 2:
            raise InvalidPathError(f"Dyck path needs a positive even length, got {len(self.steps)}")
        height = 0
        for i, s in enumerate(self.steps, start=1):
            if s not in (1, -1):
                raise InvalidPathError(f"Step {i} is {s}, expected +1 or -1")
            height += s
            if height < 0:
                raise InvalidPathError(f"Prefix sum drops below zero at step {i}")
        if height:
            raise InvalidPathError(f"Path ends at height {height}, expected 0")

    @classmethod
    def parse(cls, text: str) -> DyckPath:
        """Parse ``"++--+-"``; quotes and whitespace are ignored.

        Raises:
            InvalidPathError: If a character is not a step or the path is invalid
        """
        cleaned = "".join(text.split()).strip("\"'")
        try:
            return cls(tuple(_STEP_CHARS[ch] for ch in cleaned))
        except KeyError as e:
            raise InvalidPathError(f"Unexpected character {e.args[0]!r} in path {text!r}") from e

    @classmethod
    def unimodal(cls, n: int) -> DyckPath:
        return cls((1,) * n + (-1,) * n)

    @property
    def n(self) -> int:
        """Semilength."""
        return len(self.steps) // 2

    def __str__(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.steps)

    def to_json(self) -> list[int]:
        return list(self.steps)


# ============================================================================
# Statistics
# ============================================================================


def peaks(p: DyckPath) -> tuple[int, ...]:
    """Indices i in [1, 2n-1] with step i = +1 and step i+1 = -1, ascending."""
    steps = p.steps
    return tuple(i for i in range(1, len(steps)) if steps[i - 1] > 0 and steps[i] < 0)


def path_descents(p: DyckPath) -> DescentSet:
    """Peaks in [1, n-1]."""
    return DescentSet.from_indices((i for i in peaks(p) if i <= p.n - 1), p.n)


def inverse_path(p: DyckPath) -> DyckPath:
    """Steps reversed and negated."""
    return DyckPath(tuple(-s for s in reversed(p.steps)))


def path_descents_inverse(p: DyckPath) -> DescentSet:
    """{i in [n-1] : 2n - i is a peak}, which equals path_descents(inverse_path(p))."""
    n = p.n
    peak_set = set(peaks(p))
    return DescentSet.from_indices((i for i in range(1, n) if 2 * n - i in peak_set), n)


def path_ldes(p: DyckPath) -> int:
    """max Des(p), 0 when there is no peak below n."""
    return path_descents(p).max(default=0)


def path_lind(p: DyckPath) -> int:
    """Last peak at or before n.

    Raises:
        MathAssertionError: If no peak lies at or before n (impossible for a valid path)
    """
    candidates = [i for i in peaks(p) if i <= p.n]
    if not candidates:
        raise MathAssertionError(f"Dyck path {p} has no peak at or before {p.n}")
    return candidates[-1]


def tail(p: DyckPath) -> int:
    """Number of trailing down steps, 2n minus the last peak."""
    return len(p.steps) - peaks(p)[-1]


# ============================================================================
# Enumeration
# ============================================================================


def _paths(n: int) -> Iterator[tuple[int, ...]]:
    steps: list[int] = []

    def extend(ups: int, height: int) -> Iterator[tuple[int, ...]]:
        if len(steps) == 2 * n:
            yield tuple(steps)
            return
        if ups < n:
            steps.append(1)
            yield from extend(ups + 1, height + 1)
            steps.pop()
        if height > 0:
            steps.append(-1)
            yield from extend(ups, height - 1)
            steps.pop()

    yield from extend(0, 0)


def enumerate_P(n: int, bound: int | None = None) -> Iterator[DyckPath]:
    """Every Dyck path of semilength n, lexicographic with '+' before '-'.

    Raises:
        ResourceLimitError: If n exceeds the configured bound
    """
    check_size(n, bound)
    logger.debug(f"Enumerating P_{n}")
    return (DyckPath(steps) for steps in _paths(n))


def enumerate_P_class(n: int, b: DescentSet, bound: int | None = None) -> Iterator[DyckPath]:
    """Paths with Des(p^-1) & [n-2] = B."""
    validate_class_set(n, b)
    return (
        p
        for p in enumerate_P(n, bound)
        if path_descents_inverse(p).restrict(n - 2).mask == b.mask
    )
