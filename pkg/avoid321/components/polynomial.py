"""Exact sparse multivariate Laurent polynomials with integer coefficients.

The alphabet is {t1, t2, ...} together with x, y, z. Coefficients are Python
integers, so arithmetic never overflows. Exponents may be negative.
"""

from __future__ import annotations

import heapq
import itertools
import logging
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from types import MappingProxyType
from typing import Any, NamedTuple

from avoid321.errors import DivisibilityError, InvalidArgumentError, SubstitutionDomainError

logger = logging.getLogger(__name__)

_LETTERS = {1: "x", 2: "y", 3: "z"}
_RANKS = {"x": 1, "y": 2, "z": 3}


# ============================================================================
# Variables and monomials
# ============================================================================


class Variable(NamedTuple):
    """A variable: t_i (rank 0, subscript i >= 1) or x, y, z (ranks 1..3).

    Tuple order is the rendering order t1 < t2 < ... < x < y < z.
    """

    rank: int
    subscript: int = 0

    @property
    def name(self) -> str:
        return f"t{self.subscript}" if self.rank == 0 else _LETTERS[self.rank]

    @property
    def is_t(self) -> bool:
        return self.rank == 0

    @classmethod
    def t(cls, i: int) -> Variable:
        if i < 1:
            raise InvalidArgumentError(f"t-variable index must be >= 1, got {i}")
        return cls(0, i)

    @classmethod
    def parse(cls, name: str) -> Variable:
        name = name.strip()
        if name in _RANKS:
            return cls(_RANKS[name])
        if name.startswith("t") and name[1:].isdigit():
            return cls.t(int(name[1:]))
        raise InvalidArgumentError(f"Unknown variable {name!r}")

    def __str__(self) -> str:
        return self.name


X = Variable(1)
Y = Variable(2)
Z = Variable(3)


@dataclass(frozen=True, slots=True)
class Monomial:
    """Product of variable powers; ``exponents`` is sorted and holds no zeros.

    Build through :meth:`of` unless the tuple is already canonical.
    """

    exponents: tuple[tuple[Variable, int], ...] = ()

    @classmethod
    def of(cls, powers: Mapping[Variable, int] | Iterable[tuple[Variable, int]]) -> Monomial:
        merged: dict[Variable, int] = {}
        items = powers.items() if isinstance(powers, Mapping) else powers
        for v, e in items:
            merged[v] = merged.get(v, 0) + e
        return cls(tuple(sorted((v, e) for v, e in merged.items() if e)))

    @classmethod
    def var(cls, v: Variable, e: int = 1) -> Monomial:
        return cls(((v, e),)) if e else cls()

    def exponent(self, v: Variable) -> int:
        for w, e in self.exponents:
            if w == v:
                return e
        return 0

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    @property
    def variables(self) -> tuple[Variable, ...]:
        return tuple(v for v, _ in self.exponents)

    @property
    def is_one(self) -> bool:
        return not self.exponents

    @property
    def is_polynomial(self) -> bool:
        return all(e > 0 for _, e in self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        if not other.exponents:
            return self
        if not self.exponents:
            return other
        merged = dict(self.exponents)
        for v, e in other.exponents:
            merged[v] = merged.get(v, 0) + e
        return Monomial(tuple(sorted((v, e) for v, e in merged.items() if e)))

    def __pow__(self, k: int) -> Monomial:
        if k == 0:
            return Monomial()
        return Monomial(tuple((v, e * k) for v, e in self.exponents))

    def inverse(self) -> Monomial:
        return self**-1

    def without(self, v: Variable) -> Monomial:
        return Monomial(tuple((w, e) for w, e in self.exponents if w != v))

    def divides(self, other: Monomial) -> bool:
        """Polynomial-ring divisibility (both operands with nonnegative exponents)."""
        return all(other.exponent(v) >= e for v, e in self.exponents)

    def to_dict(self) -> dict[str, int]:
        return {v.name: e for v, e in self.exponents}

    def render(self) -> str:
        return "*".join(v.name if e == 1 else f"{v.name}^{e}" for v, e in self.exponents)

    def __str__(self) -> str:
        return self.render() or "1"


# ============================================================================
# Laurent polynomials
# ============================================================================


class LaurentPoly:
    """Immutable sparse map Monomial -> nonzero integer coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms: dict[Monomial, int] = (
            {m: c for m, c in terms.items() if c} if terms else {}
        )
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, terms: dict[Monomial, int]) -> LaurentPoly:
        # Caller guarantees no zero coefficients.
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({Monomial(): c})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls.constant(1)

    @classmethod
    def monomial(cls, m: Monomial, c: int = 1) -> LaurentPoly:
        return cls({m: c})

    @classmethod
    def var(cls, v: Variable, e: int = 1) -> LaurentPoly:
        return cls({Monomial.var(v, e): 1})

    @classmethod
    def from_exponent_counts(
        cls, counts: Mapping[tuple[tuple[Variable, int], ...], int]
    ) -> LaurentPoly:
        """Build from raw (variable, exponent) tuples, as produced by enumeration tallies."""
        terms: dict[Monomial, int] = {}
        for powers, c in counts.items():
            m = Monomial.of(powers)
            terms[m] = terms.get(m, 0) + c
        return cls(terms)

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def variables(self) -> tuple[Variable, ...]:
        seen = {v for m in self._terms for v in m.variables}
        return tuple(sorted(seen))

    @property
    def is_polynomial(self) -> bool:
        """No negative exponent anywhere."""
        return all(e > 0 for m in self._terms for _, e in m.exponents)

    def min_exponents(self) -> dict[Variable, int]:
        """Per-variable minimum exponent over all terms (absent counts as 0)."""
        variables = self.variables
        return {v: min(m.exponent(v) for m in self._terms) for v in variables}

    def as_monomial(self) -> tuple[Monomial, int] | None:
        """(monomial, coefficient) when the polynomial has one term, zero -> None."""
        if len(self._terms) != 1:
            return None
        return next(iter(self._terms.items()))

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        terms = dict(big)
        for m, c in small.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return LaurentPoly._wrap(terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return _coerce(other) + (-self)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        terms: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return LaurentPoly._wrap(terms)

    __rmul__ = __mul__

    def scale(self, m: Monomial, c: int = 1) -> LaurentPoly:
        """Multiply by the single term c*m."""
        if not c:
            return LaurentPoly()
        return LaurentPoly._wrap({k * m: v * c for k, v in self._terms.items()})

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            single = self.as_monomial()
            if single is None or single[1] not in (1, -1):
                raise InvalidArgumentError("Only unit monomials have negative powers")
            m, c = single
            return LaurentPoly.monomial(m**k, c ** (-k))
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution ---------------------------------------------------

    def substitute(self, v: Variable, value: LaurentPoly | int) -> LaurentPoly:
        """Replace every v^e by value^e; value must be a single term or a constant.

        Raises:
            InvalidArgumentError: If value has more than one term
            SubstitutionDomainError: If 0 meets a negative power, or a non-unit
                coefficient meets a negative power
        """
        value = _coerce(value)
        if value.is_zero:
            sub_m, sub_c = Monomial(), 0
        else:
            single = value.as_monomial()
            if single is None:
                raise InvalidArgumentError(
                    f"Substitution value must be a single term, got {len(value)} terms"
                )
            sub_m, sub_c = single

        terms: dict[Monomial, int] = {}
        for m, c in self._terms.items():
            e = m.exponent(v)
            if e == 0:
                new_m, new_c = m, c
            elif sub_c == 0:
                if e < 0:
                    raise SubstitutionDomainError(f"Cannot substitute 0 into {v.name}^{e}")
                continue
            elif e > 0:
                new_m, new_c = m.without(v) * sub_m**e, c * sub_c**e
            else:
                if sub_c not in (1, -1):
                    raise SubstitutionDomainError(
                        f"Coefficient {sub_c} has no integer inverse for {v.name}^{e}"
                    )
                new_m, new_c = m.without(v) * sub_m**e, c * sub_c ** (-e)
            s = terms.get(new_m, 0) + new_c
            if s:
                terms[new_m] = s
            else:
                terms.pop(new_m, None)
        return LaurentPoly._wrap(terms)

    def substitute_all_t(self, value: LaurentPoly | int) -> LaurentPoly:
        """Replace every t_i by the same value."""
        result = self
        for v in self.variables:
            if v.is_t:
                result = result.substitute(v, value)
        return result

    def evaluate(self, assignment: Mapping[Variable, int | LaurentPoly]) -> LaurentPoly:
        """Apply several substitutions, one variable at a time."""
        result = self
        for v, value in assignment.items():
            result = result.substitute(v, value)
        return result

    def total(self) -> int:
        """Sum of coefficients (every variable set to 1)."""
        return sum(self._terms.values())

    # -- rendering ------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms by total degree ascending, then exponent vector ascending."""
        variables = self.variables

        def key(item: tuple[Monomial, int]) -> tuple[int, tuple[int, ...]]:
            m = item[0]
            return (m.degree, tuple(m.exponent(v) for v in variables))

        return sorted(self._terms.items(), key=key)

    def __str__(self) -> str:
        return canonical_string(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({canonical_string(self)!r})"

    def to_json(self) -> dict[str, Any]:
        return {
            "terms": [{"coeff": c, "exp": m.to_dict()} for m, c in self.sorted_terms()]
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> LaurentPoly:
        terms: dict[Monomial, int] = {}
        for term in data.get("terms", []):
            m = Monomial.of({Variable.parse(k): int(e) for k, e in term["exp"].items()})
            terms[m] = terms.get(m, 0) + int(term["coeff"])
        return cls(terms)


def _coerce(value: LaurentPoly | int) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    raise TypeError(f"Cannot use {type(value).__name__} as a polynomial")


# ============================================================================
# Operations
# ============================================================================


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def substitute(p: LaurentPoly, v: Variable, m: LaurentPoly | int) -> LaurentPoly:
    return p.substitute(v, m)


def substitute_all_t(p: LaurentPoly, value: int) -> LaurentPoly:
    return p.substitute_all_t(value)


def canonical_string(p: LaurentPoly) -> str:
    """Deterministic text form, e.g. ``z^2 + t1*x*y*z`` or ``1 - y``."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for m, c in p.sorted_terms():
        body = m.render()
        magnitude = abs(c)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        if not parts:
            parts.append(f"-{text}" if c < 0 else text)
        else:
            parts.append(f" - {text}" if c < 0 else f" + {text}")
    return "".join(parts)


def _split_terms(text: str) -> list[str]:
    chunks: list[str] = []
    buf = ""
    previous = ""
    for ch in text:
        if ch in "+-" and previous != "^" and buf.strip():
            chunks.append(buf)
            buf = ""
        buf += ch
        if not ch.isspace():
            previous = ch
    if buf.strip():
        chunks.append(buf)
    return chunks


def parse_poly(text: str) -> LaurentPoly:
    """Parse the canonical text form (any term order is accepted).

    Raises:
        InvalidArgumentError: If the text is malformed
    """
    text = text.strip()
    if not text:
        raise InvalidArgumentError("Empty polynomial text")
    if text == "0":
        return LaurentPoly()

    terms: dict[Monomial, int] = {}
    for chunk in _split_terms(text):
        chunk = chunk.replace(" ", "")
        negative = chunk.startswith("-")
        chunk = chunk.lstrip("+-")
        if not chunk:
            raise InvalidArgumentError(f"Dangling sign in {text!r}")
        coeff = 1
        powers: list[tuple[Variable, int]] = []
        try:
            for factor in chunk.split("*"):
                if factor.isdigit():
                    coeff *= int(factor)
                elif "^" in factor:
                    name, exp = factor.split("^", 1)
                    powers.append((Variable.parse(name), int(exp)))
                else:
                    powers.append((Variable.parse(factor), 1))
        except ValueError as e:
            raise InvalidArgumentError(f"Cannot parse term {chunk!r}: {e}") from e
        m = Monomial.of(powers)
        terms[m] = terms.get(m, 0) + (-coeff if negative else coeff)
    return LaurentPoly(terms)


def univariate_coefficients(p: LaurentPoly, v: Variable) -> list[int]:
    """Coefficient list [c_0, c_1, ...] of a polynomial in the single variable v.

    Raises:
        InvalidArgumentError: If p involves another variable or a negative power
    """
    if p.is_zero:
        return []
    coeffs: dict[int, int] = {}
    for m, c in p:
        e = m.exponent(v)
        if e < 0 or m.without(v).exponents:
            raise InvalidArgumentError(f"{canonical_string(p)} is not a polynomial in {v.name}")
        coeffs[e] = c
    return [coeffs.get(k, 0) for k in range(max(coeffs) + 1)]


def from_coefficients(coeffs: Iterable[int], v: Variable) -> LaurentPoly:
    """Inverse of :func:`univariate_coefficients`."""
    return LaurentPoly({Monomial.var(v, k): c for k, c in enumerate(coeffs) if c})


# ============================================================================
# Exact division
# ============================================================================


def _lex_key(m: Monomial, t_count: int) -> tuple[int, ...]:
    key = [0] * (3 + t_count)
    for v, e in m.exponents:
        key[v.rank - 1 if v.rank else 2 + v.subscript] = e
    return tuple(key)


def _content(p: LaurentPoly) -> Monomial:
    # Largest monomial dividing every term in the Laurent sense.
    return Monomial.of(p.min_exponents())


def divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient q with q * den == num, in the Laurent ring.

    The monomial content of den is divided out first (monomials are units),
    both operands are shifted to nonnegative exponents, and the remaining
    polynomial division runs under the lexicographic order
    x > y > z > t1 > t2 > ...

    Raises:
        DivisibilityError: If den is zero or the division leaves a remainder
    """
    if den.is_zero:
        raise DivisibilityError("Division by the zero polynomial")
    if num.is_zero:
        return LaurentPoly()

    content = _content(den)
    den_p = den.scale(content.inverse())
    num_p = num.scale(content.inverse())
    shift = Monomial.of({v: -e for v, e in num_p.min_exponents().items() if e < 0})
    num_p = num_p.scale(shift)

    t_count = max([v.subscript for v in num_p.variables + den_p.variables if v.is_t] + [0])
    den_terms = list(den_p.terms.items())
    lead_m, lead_c = max(den_terms, key=lambda item: _lex_key(item[0], t_count))

    remainder = dict(num_p.terms)
    order = itertools.count()
    heap = [(tuple(-e for e in _lex_key(m, t_count)), next(order), m) for m in remainder]
    heapq.heapify(heap)
    quotient: dict[Monomial, int] = {}

    while heap:
        _, _, m = heapq.heappop(heap)
        c = remainder.get(m)
        if c is None:
            continue
        if not lead_m.divides(m) or c % lead_c:
            raise DivisibilityError(
                f"Nonzero remainder dividing {canonical_string(num)} by {canonical_string(den)} "
                f"(stuck at term {c}*{m})"
            )
        q_m = m * lead_m.inverse()
        q_c = c // lead_c
        quotient[q_m] = quotient.get(q_m, 0) + q_c
        for d_m, d_c in den_terms:
            key = q_m * d_m
            value = remainder.get(key, 0) - q_c * d_c
            if value:
                if key not in remainder:
                    heapq.heappush(
                        heap, (tuple(-e for e in _lex_key(key, t_count)), next(order), key)
                    )
                remainder[key] = value
            else:
                remainder.pop(key, None)

    return LaurentPoly(quotient).scale(shift.inverse())
