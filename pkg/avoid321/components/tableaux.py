"""Two-row standard Young tableaux and the chain

    321-avoiding permutation -> (P, Q) -> rectangular tableau -> Dyck path

built from row insertion, gluing, and reading the first row as up steps.
Every stage has an explicit inverse.
"""

from __future__ import annotations

import bisect
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from avoid321.components.dyck import DyckPath
from avoid321.components.permutation import (
    DescentSet,
    Permutation,
    inverse,
    is_321_avoiding,
)
from avoid321.errors import InvalidArgumentError, PatternViolationError

logger = logging.getLogger(__name__)


# ============================================================================
# Tableau types
# ============================================================================


@dataclass(frozen=True)
class TwoRowTableau:
    """Standard Young tableau with at most two rows; row2 may be empty."""

    row1: tuple[int, ...]
    row2: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "row1", tuple(self.row1))
        object.__setattr__(self, "row2", tuple(self.row2))
        if len(self.row1) < len(self.row2):
            raise InvalidArgumentError(
                f"Row 1 shorter than row 2: {len(self.row1)} < {len(self.row2)}"
            )
        if sorted(self.row1 + self.row2) != list(range(1, self.n + 1)):
            raise InvalidArgumentError(f"Entries of {self} are not exactly 1..{self.n}")
        for row in (self.row1, self.row2):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise InvalidArgumentError(f"Row {list(row)} is not increasing")
        for top, bottom in zip(self.row1, self.row2):
            if bottom <= top:
                raise InvalidArgumentError(f"Column ({top}, {bottom}) is not increasing")

    @property
    def n(self) -> int:
        return len(self.row1) + len(self.row2)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row1), len(self.row2))

    def to_json(self) -> dict[str, list[int]]:
        return {"row1": list(self.row1), "row2": list(self.row2)}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> TwoRowTableau:
        return cls(tuple(data["row1"]), tuple(data.get("row2", ())))

    def rows_text(self) -> list[str]:
        """Rows with entries right-aligned in shared column widths."""
        width = len(str(self.n))
        return [
            " ".join(f"{v:>{width}}" for v in row) for row in (self.row1, self.row2) if row
        ]

    def __str__(self) -> str:
        return f"({' '.join(map(str, self.row1))} / {' '.join(map(str, self.row2))})"


@dataclass(frozen=True)
class RectTableau(TwoRowTableau):
    """Standard Young tableau of rectangular shape (n, n)."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if len(self.row1) != len(self.row2):
            raise InvalidArgumentError(f"Tableau shape {self.shape} is not rectangular")

    @property
    def semilength(self) -> int:
        return len(self.row1)


@dataclass(frozen=True)
class SYTPair:
    """Insertion tableau P and recording tableau Q of equal shape."""

    P: TwoRowTableau
    Q: TwoRowTableau

    def __post_init__(self) -> None:
        if self.P.shape != self.Q.shape:
            raise InvalidArgumentError(f"Shapes differ: P {self.P.shape}, Q {self.Q.shape}")

    @property
    def n(self) -> int:
        return self.P.n

    def swapped(self) -> SYTPair:
        return SYTPair(self.Q, self.P)

    def to_json(self) -> dict[str, Any]:
        return {"P": self.P.to_json(), "Q": self.Q.to_json()}


# ============================================================================
# Row insertion
# ============================================================================


def rsk_general(values: Sequence[int]) -> tuple[list[list[int]], list[list[int]]]:
    """Row insertion of any word of distinct values; rows of P and Q of any shape."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(values, start=1):
        row = 0
        while True:
            if row == len(P):
                P.append([x])
                Q.append([step])
                break
            current = P[row]
            j = bisect.bisect_right(current, x)
            if j == len(current):
                current.append(x)
                Q[row].append(step)
                break
            x, current[j] = current[j], x
            row += 1
    return P, Q


def rsk(p: Permutation) -> SYTPair:
    """Robinson-Schensted image of a 321-avoiding permutation.

    Raises:
        PatternViolationError: If insertion creates a third row
    """
    P, Q = rsk_general(p.values)
    if len(P) > 2:
        raise PatternViolationError(f"{p} contains 321: insertion created {len(P)} rows")
    row2_p = tuple(P[1]) if len(P) > 1 else ()
    row2_q = tuple(Q[1]) if len(Q) > 1 else ()
    return SYTPair(TwoRowTableau(tuple(P[0]), row2_p), TwoRowTableau(tuple(Q[0]), row2_q))


def rsk_inverse(pair: SYTPair) -> Permutation:
    """Reverse bumping: undo the insertion steps from the last to the first."""
    P = [list(pair.P.row1), list(pair.P.row2)]
    Q = [list(pair.Q.row1), list(pair.Q.row2)]
    values = [0] * pair.n
    for step in range(pair.n, 0, -1):
        row = 0 if Q[0] and Q[0][-1] == step else 1
        if not Q[row] or Q[row][-1] != step:
            raise InvalidArgumentError(f"Entry {step} of Q is not at the end of a row")
        Q[row].pop()
        x = P[row].pop()
        for upper in range(row - 1, -1, -1):
            j = bisect.bisect_left(P[upper], x) - 1
            x, P[upper][j] = P[upper][j], x
        values[step - 1] = x
    return Permutation(tuple(values))


# ============================================================================
# Gluing and paths
# ============================================================================


def glue(pair: SYTPair) -> RectTableau:
    """Q followed by P rotated half a turn with entries j -> 2n+1-j."""
    top = 2 * pair.n + 1
    row1 = pair.Q.row1 + tuple(top - j for j in reversed(pair.P.row2))
    row2 = pair.Q.row2 + tuple(top - j for j in reversed(pair.P.row1))
    return RectTableau(row1, row2)


def unglue(t: RectTableau) -> SYTPair:
    """Split a rectangular tableau at entries <= n and > n.

    Raises:
        InvalidArgumentError: If either half is not a tableau or the shapes differ
    """
    n = t.semilength
    top = 2 * n + 1
    q_row1 = tuple(j for j in t.row1 if j <= n)
    q_row2 = tuple(j for j in t.row2 if j <= n)
    p_row1 = tuple(top - j for j in reversed(t.row2) if j > n)
    p_row2 = tuple(top - j for j in reversed(t.row1) if j > n)
    return SYTPair(TwoRowTableau(p_row1, p_row2), TwoRowTableau(q_row1, q_row2))


def tableau_to_path(t: RectTableau) -> DyckPath:
    """Step i is +1 exactly when i sits in row 1."""
    first = set(t.row1)
    return DyckPath(tuple(1 if i in first else -1 for i in range(1, 2 * t.semilength + 1)))


def path_to_tableau(p: DyckPath) -> RectTableau:
    row1 = tuple(i for i, s in enumerate(p.steps, start=1) if s > 0)
    row2 = tuple(i for i, s in enumerate(p.steps, start=1) if s < 0)
    return RectTableau(row1, row2)


def phi(p: Permutation) -> DyckPath:
    """Composite bijection from 321-avoiding permutations to Dyck paths.

    Raises:
        PatternViolationError: If p contains the pattern 321
    """
    if not is_321_avoiding(p):
        raise PatternViolationError(f"{p} is not 321-avoiding")
    return tableau_to_path(glue(rsk(p)))


def phi_inverse(path: DyckPath) -> Permutation:
    return rsk_inverse(unglue(path_to_tableau(path)))


def tableau_rotate(t: RectTableau) -> RectTableau:
    """Half-turn rotation with entries j -> 2n+1-j; reads as inverse_path on paths."""
    top = 2 * t.semilength + 1
    return RectTableau(
        tuple(top - j for j in reversed(t.row2)),
        tuple(top - j for j in reversed(t.row1)),
    )


def psi(p: Permutation) -> Permutation:
    """Conjugate of the inverse by the longest element: i -> n+1 - p^-1(n+1-i)."""
    n = p.n
    q = inverse(p)
    return Permutation(tuple(n + 1 - q(n + 1 - i) for i in range(1, n + 1)))


def tableau_descents(t: TwoRowTableau, first_half: bool = False) -> DescentSet:
    """{i : i in row 1 and i+1 in row 2}.

    Args:
        t: Tableau
        first_half: For a rectangular tableau of semilength n, keep only
            descents in [n-1]

    Raises:
        InvalidArgumentError: If first_half is requested on a non-rectangular tableau
    """
    first = set(t.row1)
    second = set(t.row2)
    members = [i for i in range(1, t.n) if i in first and i + 1 in second]
    if not first_half:
        return DescentSet.from_indices(members, t.n)
    if not isinstance(t, RectTableau):
        raise InvalidArgumentError("first_half applies to rectangular tableaux only")
    n = t.semilength
    return DescentSet.from_indices((i for i in members if i <= n - 1), n)
