"""Exception hierarchy for avoid321.

Every error carries the exit code the CLI reports for it.
"""


class Avoid321Error(Exception):
    """Base class for all avoid321 errors."""

    exit_code: int = 1


class InvalidArgumentError(Avoid321Error, ValueError):
    """Malformed input: bad descent set, bad spec string, bad permutation text."""

    exit_code = 2


class ResourceLimitError(Avoid321Error, RuntimeError):
    """Requested size exceeds the configured enumeration bound."""

    exit_code = 3


class MathAssertionError(Avoid321Error, ArithmeticError):
    """An identity that must hold by construction did not hold."""

    exit_code = 4


class DivisibilityError(MathAssertionError):
    """Exact division left a nonzero remainder."""


class SubstitutionDomainError(MathAssertionError):
    """Zero substituted into a negative power."""


class DomainViolationError(Avoid321Error, ValueError):
    """Input lies outside the domain of a bijection."""

    exit_code = 5


class PatternViolationError(DomainViolationError):
    """Permutation contains the pattern 321."""


class InvalidPathError(DomainViolationError):
    """Step sequence is not a Dyck path."""
