"""Generating functions over 321-avoiding permutations.

f_n(t, x, y, z) is the sum over T_n of t_{Des(pi^-1)} x^inv y^ldes z^lind.
It is built two ways: by enumeration, and by the recursion

    (x - yz) f_n = t_{n-1} x^n yz f_{n-1}(t, x, yz/x, 1)
                 + (1 - t_{n-1}) x^n yz f_{n-1}(t, x, 1, yz/x)
                 + (x - yz) z^n f_{n-1}(t, x, y, 1)
                 - x y^n z^n f_{n-1}(t, x, 1, 1)

with f_1 = z. Univariate enumerators use the variable y.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from enum import Enum

from avoid321.components.permutation import (
    check_size,
    enumerate_T,
    inv,
    inverse_descent_set,
    ldes,
    lind,
    shard_T,
    sign,
)
from avoid321.components.polynomial import (
    X,
    Y,
    Z,
    LaurentPoly,
    Monomial,
    Variable,
    divide_exact,
    from_coefficients,
    parse_poly,
)
from avoid321.errors import InvalidArgumentError, MathAssertionError

logger = logging.getLogger(__name__)


class GenFunMethod(str, Enum):
    """How a generating function is computed."""

    BRUTE_FORCE = "brute"
    RECURSIVE = "recursive"


_YZ_OVER_X = LaurentPoly.monomial(Monomial.of({X: -1, Y: 1, Z: 1}))
_X_MINUS_YZ = LaurentPoly({Monomial.var(X): 1, Monomial.of({Y: 1, Z: 1}): -1})


# ============================================================================
# Brute force
# ============================================================================


StatKey = tuple[int, int, int, int]


def _tally(perms) -> Counter[StatKey]:
    counts: Counter[StatKey] = Counter()
    for p in perms:
        counts[(inverse_descent_set(p).mask, inv(p), ldes(p), lind(p))] += 1
    return counts


def _tally_shard(n: int, shard: int, shards: int, bound: int | None) -> Counter[StatKey]:
    return _tally(shard_T(n, shard, shards, bound))


def _poly_from_tally(counts: Counter[StatKey]) -> LaurentPoly:
    raw: dict[tuple[tuple[Variable, int], ...], int] = {}
    for (mask, inversions, last_descent, last_index), c in counts.items():
        powers = [(Variable.t(i + 1), 1) for i in range(mask.bit_length()) if mask >> i & 1]
        powers += [(X, inversions), (Y, last_descent), (Z, last_index)]
        raw[tuple(powers)] = raw.get(tuple(powers), 0) + c
    return LaurentPoly.from_exponent_counts(raw)


def f_bruteforce(n: int, workers: int = 1, bound: int | None = None) -> LaurentPoly:
    """f_n summed over an enumeration of T_n.

    Args:
        n: Size
        workers: Process count; shards of T_n are tallied in parallel and merged
        bound: Enumeration bound override (defaults to the configured one)

    Raises:
        ResourceLimitError: If n exceeds the bound
    """
    check_size(n, bound)
    if workers <= 1:
        counts = _tally(enumerate_T(n, bound))
    else:
        counts = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_tally_shard, n, shard, workers, bound) for shard in range(workers)
            ]
            for future in futures:
                counts.update(future.result())
    logger.debug(f"f_bruteforce({n}): {len(counts)} distinct statistic tuples")
    return _poly_from_tally(counts)


# ============================================================================
# Recursion
# ============================================================================


def _recursion_step(prev: LaurentPoly, n: int, collapse_t: bool) -> LaurentPoly:
    """f_n from f_{n-1}; with collapse_t every t_i is already 1."""
    x_n_yz = Monomial.of({X: n, Y: 1, Z: 1})
    at_yzx_1 = prev.substitute(Z, 1).substitute(Y, _YZ_OVER_X)
    at_y_1 = prev.substitute(Z, 1)
    at_1_1 = at_y_1.substitute(Y, 1)

    rhs = _X_MINUS_YZ * at_y_1.scale(Monomial.var(Z, n))
    rhs = rhs - at_1_1.scale(Monomial.of({X: 1, Y: n, Z: n}))
    if collapse_t:
        rhs = rhs + at_yzx_1.scale(x_n_yz)
    else:
        t = LaurentPoly.var(Variable.t(n - 1))
        at_1_yzx = prev.substitute(Y, 1).substitute(Z, _YZ_OVER_X)
        rhs = rhs + t * at_yzx_1.scale(x_n_yz) + (1 - t) * at_1_yzx.scale(x_n_yz)

    result = divide_exact(rhs, _X_MINUS_YZ)
    if not result.is_polynomial:
        raise MathAssertionError(f"Recursion produced negative exponents at n={n}")
    return result


# f_1, f_2, ... per collapse flag, grown on demand.
_TABLES: dict[bool, list[LaurentPoly]] = {False: [LaurentPoly.var(Z)], True: [LaurentPoly.var(Z)]}


def _recursive_table(n: int, collapse_t: bool) -> list[LaurentPoly]:
    table = _TABLES[collapse_t]
    while len(table) < n:
        m = len(table) + 1
        table.append(_recursion_step(table[-1], m, collapse_t))
        logger.debug(f"recursion n={m}: {len(table[-1])} terms")
    return table


def f_recursive(n: int, bound: int | None = None) -> LaurentPoly:
    """f_n by the recursion, keeping the full t-refinement.

    Raises:
        DivisibilityError: If a step is not exactly divisible (an implementation bug)
        MathAssertionError: If the result has a negative exponent
    """
    check_size(n, bound)
    return _recursive_table(n, False)[n - 1]


def f_recursive_collapsed(n: int, bound: int | None = None) -> LaurentPoly:
    """f_n(1, x, y, z) by the recursion run with every t_i = 1 from the start."""
    check_size(n, bound)
    return _recursive_table(n, True)[n - 1]


def generating_function(
    n: int, method: GenFunMethod = GenFunMethod.BRUTE_FORCE, workers: int = 1
) -> LaurentPoly:
    if method is GenFunMethod.RECURSIVE:
        return f_recursive(n)
    return f_bruteforce(n, workers=workers)


# ============================================================================
# Specialisations
# ============================================================================


def specialize_hat(f: LaurentPoly, n: int) -> LaurentPoly:
    """f with t_{n-1} = 1 (nothing to do for n = 1)."""
    if n < 2:
        return f
    return f.substitute(Variable.t(n - 1), 1)


def _collapsed(n: int, method: GenFunMethod) -> LaurentPoly:
    if method is GenFunMethod.RECURSIVE:
        return f_recursive_collapsed(n)
    return f_bruteforce(n).substitute_all_t(1)


def g_signed(n: int, method: GenFunMethod = GenFunMethod.RECURSIVE) -> LaurentPoly:
    """g_n(-1, y) = sum over T_n of (-1)^inv y^ldes."""
    if method is GenFunMethod.BRUTE_FORCE:
        check_size(n)
        counts: Counter[int] = Counter()
        for p in enumerate_T(n):
            counts[ldes(p)] += sign(p)
        return from_coefficients((counts[k] for k in range(n)), Y)
    return _collapsed(n, method).evaluate({X: -1, Z: 1})


def g_ldes(n: int, method: GenFunMethod = GenFunMethod.RECURSIVE) -> LaurentPoly:
    """g_n(1, y) = sum over T_n of y^ldes, with g_0 = 1."""
    if n == 0:
        return LaurentPoly.one()
    if method is GenFunMethod.BRUTE_FORCE:
        check_size(n)
        counts: Counter[int] = Counter(ldes(p) for p in enumerate_T(n))
        return from_coefficients((counts[k] for k in range(n)), Y)
    return _collapsed(n, method).evaluate({X: 1, Z: 1})


def h_poly(n: int, method: GenFunMethod = GenFunMethod.RECURSIVE) -> LaurentPoly:
    """h_n(y) = (g_n(1, y) - y^(n+1) g_n(1, 1)) / (1 - y)."""
    g = g_ldes(n, method)
    numerator = g - LaurentPoly.monomial(Monomial.var(Y, n + 1), g.total())
    return divide_exact(numerator, 1 - LaurentPoly.var(Y))


def _pascal_row(m: int) -> list[int]:
    row = [1]
    for _ in range(m):
        row = [1] + [a + b for a, b in zip(row, row[1:])] + [1]
    return row


def binomial(m: int, k: int) -> int:
    if not 0 <= k <= m:
        return 0
    return _pascal_row(m)[k]


def hilbert_closed_form(n: int) -> LaurentPoly:
    """Sum over k < n of (n-k)/(n+k) * C(n+k, k) * y^k (ballot numbers)."""
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    coeffs: list[int] = []
    for k in range(n):
        numerator = binomial(n + k, k) * (n - k)
        if numerator % (n + k):
            raise MathAssertionError(f"Ballot number not integral at n={n}, k={k}")
        coeffs.append(numerator // (n + k))
    return from_coefficients(coeffs, Y)


# ============================================================================
# Substitution specs
# ============================================================================


def parse_spec(spec: str) -> list[tuple[str, LaurentPoly]]:
    """Parse ``"t=1,x=-1,z=1"`` into (target, value) pairs.

    Targets are ``t`` (every t_i), ``t<i>``, ``x``, ``y`` or ``z``; values are
    single terms in the canonical text form (``-1``, ``y^2``, ``-y``).

    Raises:
        InvalidArgumentError: If an assignment is malformed
    """
    pairs: list[tuple[str, LaurentPoly]] = []
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise InvalidArgumentError(f"Expected name=value in spec, got {item!r}")
        name, value = (part.strip() for part in item.split("=", 1))
        if name != "t":
            Variable.parse(name)
        pairs.append((name, parse_poly(value)))
    return pairs


def apply_spec(poly: LaurentPoly, spec: str) -> LaurentPoly:
    """Apply the assignments of a spec string left to right."""
    for name, value in parse_spec(spec):
        if name == "t":
            poly = poly.substitute_all_t(value)
        else:
            poly = poly.substitute(Variable.parse(name), value)
    return poly
