"""Permutations, their statistics, and enumeration of 321-avoiding permutations.

Values are 1-indexed in every public surface (one-line notation). Indexing is
zero-based internally only.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from avoid321.config import max_n as configured_max_n
from avoid321.errors import InvalidArgumentError, ResourceLimitError

logger = logging.getLogger(__name__)


# ============================================================================
# Value types
# ============================================================================


@dataclass(frozen=True)
class DescentSet:
    """A subset of {1, ..., n-1} stored as a bitmask (bit i-1 <-> member i)."""

    mask: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidArgumentError(f"DescentSet ambient size must be >= 1, got {self.n}")
        if self.mask < 0 or self.mask >> max(self.n - 1, 0):
            raise InvalidArgumentError(
                f"DescentSet mask {self.mask:#b} has members outside [1, {self.n - 1}]"
            )

    @classmethod
    def from_indices(cls, indices: Iterable[int], n: int) -> DescentSet:
        """Build from 1-indexed members.

        Raises:
            InvalidArgumentError: If a member is outside [1, n-1]
        """
        mask = 0
        for i in indices:
            if not 1 <= i <= n - 1:
                raise InvalidArgumentError(f"Descent index {i} outside [1, {n - 1}]")
            mask |= 1 << (i - 1)
        return cls(mask, n)

    @property
    def indices(self) -> tuple[int, ...]:
        """Members in ascending order."""
        return tuple(i + 1 for i in range(self.n - 1) if self.mask >> i & 1)

    def restrict(self, upper: int) -> DescentSet:
        """Intersection with [upper]."""
        upper = max(0, min(upper, self.n - 1))
        return DescentSet(self.mask & ((1 << upper) - 1), self.n)

    def max(self, default: int = 0) -> int:
        return self.mask.bit_length() if self.mask else default

    def min(self, default: int) -> int:
        return (self.mask & -self.mask).bit_length() if self.mask else default

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and 1 <= i <= self.n - 1 and bool(self.mask >> (i - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.indices) + "}"


@dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation: values[i-1] = pi(i)."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        n = len(self.values)
        if n < 1:
            raise InvalidArgumentError("Permutation must have at least one value")
        if sorted(self.values) != list(range(1, n + 1)):
            raise InvalidArgumentError(f"Not a permutation of 1..{n}: {list(self.values)}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return format_permutation(self)

    def to_json(self) -> list[int]:
        return list(self.values)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))


def parse_permutation(text: str) -> Permutation:
    """Parse ``"25134"`` (n <= 9) or ``"2,5,1,3,4"`` / ``"[2,5,1,3,4]"``.

    Raises:
        InvalidArgumentError: If the text is not a permutation
    """
    cleaned = text.strip().strip("[]").replace(" ", "")
    if not cleaned:
        raise InvalidArgumentError("Empty permutation text")
    try:
        if "," in cleaned:
            values = tuple(int(part) for part in cleaned.split(","))
        else:
            values = tuple(int(ch) for ch in cleaned)
    except ValueError as e:
        raise InvalidArgumentError(f"Cannot parse permutation {text!r}: {e}") from e
    return Permutation(values)


def format_permutation(p: Permutation) -> str:
    """Compact digit string for n <= 9, comma-separated otherwise."""
    if p.n <= 9:
        return "".join(str(v) for v in p.values)
    return ",".join(str(v) for v in p.values)


# ============================================================================
# Statistics
# ============================================================================


def inverse(p: Permutation) -> Permutation:
    """The inverse permutation q with q(p(i)) = i."""
    result = [0] * p.n
    for i, v in enumerate(p.values, start=1):
        result[v - 1] = i
    return Permutation(tuple(result))


def inv(p: Permutation) -> int:
    """Inversion number: pairs i < j with p(i) > p(j)."""
    values = p.values
    count = 0
    for i, a in enumerate(values):
        for b in values[i + 1 :]:
            if a > b:
                count += 1
    return count


def _ldes_of(values: tuple[int, ...]) -> int:
    for i in range(len(values) - 1, 0, -1):
        if values[i - 1] > values[i]:
            return i
    return 0


def ldes(p: Permutation) -> int:
    """Last descent; 0 for the identity."""
    return _ldes_of(p.values)


def lind(p: Permutation) -> int:
    """Position of the largest value n."""
    return p.values.index(p.n) + 1


def descent_set(p: Permutation) -> DescentSet:
    """{i in [n-1] : p(i) > p(i+1)}."""
    mask = 0
    values = p.values
    for i in range(len(values) - 1):
        if values[i] > values[i + 1]:
            mask |= 1 << i
    return DescentSet(mask, p.n)


def inverse_descent_set(p: Permutation) -> DescentSet:
    """Des(p^-1): i is a descent of p^-1 iff i+1 appears left of i in p."""
    position = [0] * (p.n + 1)
    for i, v in enumerate(p.values):
        position[v] = i
    mask = 0
    for i in range(1, p.n):
        if position[i] > position[i + 1]:
            mask |= 1 << (i - 1)
    return DescentSet(mask, p.n)


def sign(p: Permutation) -> int:
    """(-1)^inv(p)."""
    return -1 if inv(p) % 2 else 1


def is_321_avoiding(p: Permutation) -> bool:
    """Linear test: p contains 321 iff some p(j) has a larger value before it
    and a smaller value after it."""
    values = p.values
    n = len(values)
    suffix_min = [0] * n
    running = n + 1
    for j in range(n - 1, -1, -1):
        suffix_min[j] = running
        running = min(running, values[j])
    prefix_max = 0
    for j, v in enumerate(values):
        if prefix_max > v > suffix_min[j]:
            return False
        prefix_max = max(prefix_max, v)
    return True


# ============================================================================
# Enumeration
# ============================================================================


def check_size(n: int, bound: int | None = None) -> None:
    """Enforce the configured enumeration bound.

    Raises:
        InvalidArgumentError: If n < 1
        ResourceLimitError: If n exceeds the bound
    """
    limit = configured_max_n() if bound is None else bound
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    if n > limit:
        raise ResourceLimitError(
            f"n={n} exceeds the enumeration bound {limit} (set AVOID321_LIMITS__MAX_N to raise it)"
        )


def _insertion_words(n: int) -> Iterator[tuple[int, ...]]:
    # Insert n at every admissible place k with ldes(parent) <= k <= n-1.
    if n == 1:
        yield (1,)
        return
    for parent in _insertion_words(n - 1):
        for k in range(_ldes_of(parent), n):
            yield parent[:k] + (n,) + parent[k:]


def enumerate_T(n: int, bound: int | None = None) -> Iterator[Permutation]:
    """Yield every 321-avoiding permutation of size n exactly once.

    Order is depth-first over the insertion recursion: parents in their own
    order, then insertion position ascending. Arguments are checked before
    the iterator is returned.

    Raises:
        ResourceLimitError: If n exceeds the configured bound
    """
    check_size(n, bound)
    logger.debug(f"Enumerating T_{n}")
    return (Permutation(word) for word in _insertion_words(n))


def _shard_depth(n: int, shards: int) -> int:
    depth = 1
    count = 1
    while depth < n and count < shards:
        depth += 1
        count = catalan(depth)
    return depth


def shard_T(n: int, shard: int, shards: int, bound: int | None = None) -> Iterator[Permutation]:
    """Yield one deterministic shard of T_n.

    Parents at a fixed insertion depth are dealt round-robin; the shards
    0..shards-1 partition T_n and each keeps the enumeration order.
    """
    check_size(n, bound)
    if shards < 1 or not 0 <= shard < shards:
        raise InvalidArgumentError(f"Invalid shard {shard} of {shards}")
    depth = _shard_depth(n, shards)

    def descend(word: tuple[int, ...], m: int) -> Iterator[tuple[int, ...]]:
        if m == n:
            yield word
            return
        for k in range(_ldes_of(word), m + 1):
            yield from descend(word[:k] + (m + 1,) + word[k:], m + 1)

    def walk() -> Iterator[Permutation]:
        for index, parent in enumerate(_insertion_words(depth)):
            if index % shards == shard:
                for word in descend(parent, depth):
                    yield Permutation(word)

    return walk()


def validate_class_set(n: int, b: DescentSet) -> None:
    """Require B to be a subset of [n-2] over ambient size n.

    Raises:
        InvalidArgumentError: If B has a member >= n-1 or the wrong ambient size
    """
    if b.n != n:
        raise InvalidArgumentError(f"Descent set ambient size {b.n} does not match n={n}")
    if b.mask >> max(n - 2, 0):
        raise InvalidArgumentError(f"B={b} is not a subset of [{n - 2}]")


def class_key(p: Permutation) -> DescentSet:
    """Des(p^-1) intersected with [n-2]."""
    return inverse_descent_set(p).restrict(p.n - 2)


def enumerate_T_class(n: int, b: DescentSet, bound: int | None = None) -> Iterator[Permutation]:
    """Yield the members of T_n(B) = {p in T_n : Des(p^-1) & [n-2] = B}."""
    validate_class_set(n, b)
    return (p for p in enumerate_T(n, bound) if class_key(p).mask == b.mask)


def catalan(n: int) -> int:
    """Catalan number C(2n, n) / (n + 1), exact."""
    if n < 0:
        raise InvalidArgumentError(f"Catalan index must be >= 0, got {n}")
    value = 1
    for k in range(n):
        value = value * 2 * (2 * k + 1) // (k + 2)
    return value
