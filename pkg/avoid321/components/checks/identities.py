"""Built-in verification checks.

Polynomials are compared by exact equality; a check stops at the first
counterexample and returns it as the witness.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict

from avoid321.components.checks.base import CheckOutcome, register_check
from avoid321.components.dyck import (
    enumerate_P,
    inverse_path,
    path_descents,
    path_descents_inverse,
    path_ldes,
    path_lind,
    peaks,
    tail,
)
from avoid321.components.genfun import (
    GenFunMethod,
    f_bruteforce,
    f_recursive,
    f_recursive_collapsed,
    g_ldes,
    g_signed,
    h_poly,
    hilbert_closed_form,
    specialize_hat,
)
from avoid321.components.permutation import (
    DescentSet,
    Permutation,
    class_key,
    catalan,
    descent_set,
    enumerate_T,
    inv,
    inverse,
    inverse_descent_set,
    is_321_avoiding,
    ldes,
    lind,
    sign,
)
from avoid321.components.polynomial import (
    X,
    Y,
    Z,
    LaurentPoly,
    Monomial,
    univariate_coefficients,
)
from avoid321.components.tableaux import (
    glue,
    phi,
    phi_inverse,
    psi,
    rsk,
    tableau_descents,
    tableau_rotate,
    tableau_to_path,
)

logger = logging.getLogger(__name__)

_Q = LaurentPoly.var(Y)


def _ypoly(counts: Counter[int]) -> LaurentPoly:
    return LaurentPoly({Monomial.var(Y, k): c for k, c in counts.items()})


def _y_power(k: int) -> LaurentPoly:
    return LaurentPoly.var(Y, k)


def _squared(p: LaurentPoly) -> LaurentPoly:
    """p(y^2)."""
    return p.substitute(Y, _y_power(2))


def _mismatch(n: int, **polys: LaurentPoly | Counter[int]) -> dict[str, object]:
    witness: dict[str, object] = {"n": n}
    for name, value in polys.items():
        witness[name] = str(_ypoly(value) if isinstance(value, Counter) else value)
    return witness


# ============================================================================
# Equidistribution and forgetfulness
# ============================================================================


@register_check("equidistribution", "ldes and lind-1 agree on every class T_n(B)")
def check_equidistribution(max_n: int, enumeration_limit: int) -> CheckOutcome:
    top = min(max_n, enumeration_limit)
    for n in range(1, top + 1):
        by_ldes: defaultdict[int, Counter[int]] = defaultdict(Counter)
        by_lind: defaultdict[int, Counter[int]] = defaultdict(Counter)
        for p in enumerate_T(n):
            key = class_key(p).mask
            by_ldes[key][ldes(p)] += 1
            by_lind[key][lind(p) - 1] += 1
        for mask in sorted(by_ldes):
            if by_ldes[mask] != by_lind[mask]:
                witness = _mismatch(n, ldes=by_ldes[mask], lind_minus_one=by_lind[mask])
                witness["B"] = list(DescentSet(mask, n).indices)
                return CheckOutcome(1, n, witness)
    return CheckOutcome(1, top)


@register_check(
    "forgetfulness",
    "conditioning on the full Des(pi^-1) breaks the equidistribution",
    range_setting="forgetfulness_max_n",
)
def check_forgetfulness(max_n: int, enumeration_limit: int) -> CheckOutcome:
    """Search n ascending, then full descent sets in mask order, for the first
    class where ldes and lind-1 differ. Finding one is a pass."""
    top = min(max_n, enumeration_limit)
    for n in range(1, top + 1):
        by_ldes: defaultdict[int, Counter[int]] = defaultdict(Counter)
        by_lind: defaultdict[int, Counter[int]] = defaultdict(Counter)
        for p in enumerate_T(n):
            key = inverse_descent_set(p).mask
            by_ldes[key][ldes(p)] += 1
            by_lind[key][lind(p) - 1] += 1
        for mask in sorted(by_ldes):
            if by_ldes[mask] != by_lind[mask]:
                witness = _mismatch(n, ldes=by_ldes[mask], lind_minus_one=by_lind[mask])
                witness["B"] = list(DescentSet(mask, n).indices)
                logger.info(f"Forgetfulness witness at n={n}, B={witness['B']}")
                return CheckOutcome(1, n, witness, passed=True)
    return CheckOutcome(1, top, passed=False)


# ============================================================================
# Generating function
# ============================================================================


@register_check("recursion", "the recursion reproduces the enumerated f_n")
def check_recursion(max_n: int, enumeration_limit: int) -> CheckOutcome:
    top = min(max_n, enumeration_limit)
    for n in range(1, top + 1):
        recursive = f_recursive(n)
        brute = f_bruteforce(n)
        if recursive != brute:
            return CheckOutcome(1, n, _mismatch(n, recursive=recursive, brute=brute))
        collapsed = f_recursive_collapsed(n)
        if collapsed != recursive.substitute_all_t(1):
            return CheckOutcome(1, n, _mismatch(n, collapsed=collapsed, recursive=recursive))
    return CheckOutcome(1, top)


@register_check("genfun_identity", "q f^_n(t,1,q,1) = f^_n(t,1,1,q) and its two halves")
def check_genfun_identity(max_n: int, enumeration_limit: int) -> CheckOutcome:
    one_minus_q = 1 - _Q
    for n in range(2, max_n + 1):
        hat = specialize_hat(f_recursive(n), n)
        at_ldes = hat.evaluate({X: 1, Z: 1})
        at_lind = hat.evaluate({X: 1, Y: 1}).substitute(Z, _Q)
        if _Q * at_ldes != at_lind:
            return CheckOutcome(2, n, _mismatch(n, q_times_ldes=_Q * at_ldes, lind=at_lind))

        prev = f_recursive(n - 1)
        prev_q = prev.evaluate({X: 1, Z: 1})
        prev_1 = prev.evaluate({X: 1, Y: 1, Z: 1})
        expected_ldes = prev_q - _y_power(n) * prev_1
        if one_minus_q * at_ldes != expected_ldes:
            return CheckOutcome(
                2, n, _mismatch(n, lhs=one_minus_q * at_ldes, rhs=expected_ldes)
            )
        expected_lind = _Q * prev_q - _y_power(n + 1) * prev_1
        if one_minus_q * at_lind != expected_lind:
            return CheckOutcome(
                2, n, _mismatch(n, lhs=one_minus_q * at_lind, rhs=expected_lind)
            )
    return CheckOutcome(2, max_n) if max_n >= 2 else CheckOutcome(1, max_n)


# ============================================================================
# Signed enumeration
# ============================================================================


@register_check(
    "sign_balance",
    "g_{2k+1}(-1,y) = g_k(1,y^2) and g_{2k}(-1,y) = (1-y) g_k(1,y^2)",
    range_setting="sign_balance_max_index",
)
def check_sign_balance(max_n: int, enumeration_limit: int) -> CheckOutcome:
    for m in range(1, max_n + 1):
        signed = g_signed(m)
        base = _squared(g_ldes(m // 2))
        expected = base if m % 2 else (1 - _Q) * base
        if signed != expected:
            return CheckOutcome(1, m, _mismatch(m, signed=signed, expected=expected))
        if m <= enumeration_limit:
            brute = g_signed(m, GenFunMethod.BRUTE_FORCE)
            if brute != signed:
                return CheckOutcome(1, m, _mismatch(m, recursive=signed, brute=brute))
    return CheckOutcome(1, max_n)


@register_check(
    "catalan_balance",
    "g_{2k+1}(-1,1) = Catalan(k) and g_{2k}(-1,1) = 0",
    range_setting="sign_balance_max_index",
)
def check_catalan_balance(max_n: int, enumeration_limit: int) -> CheckOutcome:
    for m in range(1, max_n + 1):
        value = g_signed(m).total()
        expected = catalan(m // 2) if m % 2 else 0
        if m <= enumeration_limit:
            enumerated = sum(sign(p) for p in enumerate_T(m))
            if enumerated != value:
                return CheckOutcome(1, m, {"n": m, "recursive": value, "brute": enumerated})
        if value != expected:
            return CheckOutcome(1, m, {"n": m, "value": value, "expected": expected})
    return CheckOutcome(1, max_n)


@register_check(
    "signed_recursion",
    "(-1-y) g_n(-1,y) = (-1)^n y g_{n-1}(-1,-y) + (-1-y) g_{n-1}(-1,y) + y^n g_{n-1}(-1,1)",
    range_setting="sign_balance_max_index",
)
def check_signed_recursion(max_n: int, enumeration_limit: int) -> CheckOutcome:
    minus_one_minus_q = -1 - _Q
    for n in range(2, max_n + 1):
        prev = g_signed(n - 1)
        lhs = minus_one_minus_q * g_signed(n)
        rhs = (
            (-1) ** n * _Q * prev.substitute(Y, -_Q)
            + minus_one_minus_q * prev
            + _y_power(n) * prev.total()
        )
        if lhs != rhs:
            return CheckOutcome(2, n, _mismatch(n, lhs=lhs, rhs=rhs))
    return CheckOutcome(2, max_n) if max_n >= 2 else CheckOutcome(1, max_n)


# ============================================================================
# Last descent and last index
# ============================================================================


@register_check("ldes_recurrence", "(1-q) g_{n+1}(1,q) = g_n(1,q) - q^(n+1) g_n(1,1)")
def check_ldes_recurrence(max_n: int, enumeration_limit: int) -> CheckOutcome:
    for n in range(0, max_n):
        g = g_ldes(n)
        following = g_ldes(n + 1)
        lhs = (1 - _Q) * following
        rhs = g - _y_power(n + 1) * g.total()
        if lhs != rhs:
            return CheckOutcome(1, n + 1, _mismatch(n + 1, lhs=lhs, rhs=rhs))
        h = h_poly(n)
        if h != following:
            return CheckOutcome(1, n + 1, _mismatch(n + 1, h=h, g=following))
        if n + 1 <= enumeration_limit:
            brute = g_ldes(n + 1, GenFunMethod.BRUTE_FORCE)
            if brute != following:
                return CheckOutcome(1, n + 1, _mismatch(n + 1, recursive=following, brute=brute))
    return CheckOutcome(1, max_n)


def _insertion_violation(parent: Permutation, k: int) -> str | None:
    """Compare the statistics of parent with n inserted after position k against
    the predicted update rules."""
    m = parent.n
    n = m + 1
    child = Permutation(parent.values[:k] + (n,) + parent.values[k:])
    if inv(child) != inv(parent) + (n - 1 - k):
        return "inv"
    if ldes(child) != (k + 1 if k < n - 1 else ldes(parent)):
        return "ldes"
    if lind(child) != k + 1:
        return "lind"
    expected = inverse_descent_set(parent).indices
    if k < inverse(parent)(m):
        expected = expected + (n - 1,)
    if inverse_descent_set(child).indices != expected:
        return "Des(pi^-1)"
    return None


@register_check("last_index", "lind = ldes off the fixed-point case; insertion update rules")
def check_last_index(max_n: int, enumeration_limit: int) -> CheckOutcome:
    top = min(max_n, enumeration_limit)
    for n in range(1, top + 1):
        ldes_counts: Counter[int] = Counter()
        lind_counts: Counter[int] = Counter()
        for p in enumerate_T(n):
            last, position_of_max = ldes(p), inverse(p)(n)
            ldes_counts[last] += 1
            lind_counts[lind(p)] += 1
            if p(n) != n and lind(p) != last:
                return CheckOutcome(1, n, {"n": n, "perm": str(p), "property": "lind = ldes"})
            first_case = last == position_of_max < n
            second_case = last < position_of_max == n
            if first_case == second_case:
                return CheckOutcome(1, n, {"n": n, "perm": str(p), "property": "case split"})
            if n < top:
                for k in range(last, n + 1):
                    failed = _insertion_violation(p, k)
                    if failed:
                        return CheckOutcome(
                            1, n + 1, {"n": n + 1, "perm": str(p), "k": k, "property": failed}
                        )
        if n >= 2 and ldes_counts == lind_counts:
            return CheckOutcome(
                1, n, _mismatch(n, ldes=ldes_counts, lind=lind_counts) | {"property": "distinct"}
            )
    return CheckOutcome(1, top)


# ============================================================================
# Dyck paths and the bijection
# ============================================================================


@register_check("dyck", "ldes over T_n and ldes, lind-1 over P_n agree, also per class")
def check_dyck(max_n: int, enumeration_limit: int) -> CheckOutcome:
    top = min(max_n, enumeration_limit)
    for n in range(1, top + 1):
        perm_ldes: defaultdict[int, Counter[int]] = defaultdict(Counter)
        for p in enumerate_T(n):
            perm_ldes[class_key(p).mask][ldes(p)] += 1

        path_ldes_counts: defaultdict[int, Counter[int]] = defaultdict(Counter)
        path_lind_counts: defaultdict[int, Counter[int]] = defaultdict(Counter)
        count = 0
        for path in enumerate_P(n):
            key = path_descents_inverse(path).restrict(n - 2).mask
            path_ldes_counts[key][path_ldes(path)] += 1
            path_lind_counts[key][path_lind(path) - 1] += 1
            count += 1
        if count != catalan(n):
            return CheckOutcome(1, n, {"n": n, "paths": count, "catalan": catalan(n)})

        total_perm = sum(perm_ldes.values(), Counter())
        total_ldes = sum(path_ldes_counts.values(), Counter())
        total_lind = sum(path_lind_counts.values(), Counter())
        if not total_perm == total_ldes == total_lind:
            return CheckOutcome(
                1, n, _mismatch(n, T_ldes=total_perm, P_ldes=total_ldes, P_lind=total_lind)
            )
        for mask in sorted(set(perm_ldes) | set(path_ldes_counts)):
            a, b, c = perm_ldes[mask], path_ldes_counts[mask], path_lind_counts[mask]
            if not a == b == c:
                witness = _mismatch(n, T_ldes=a, P_ldes=b, P_lind=c)
                witness["B"] = list(DescentSet(mask, n).indices)
                return CheckOutcome(1, n, witness)
    return CheckOutcome(1, top)


def _bijection_violation(p: Permutation) -> str | None:
    n = p.n
    pair = rsk(p)
    rect = glue(pair)
    path = tableau_to_path(rect)
    if path != phi(p) or phi_inverse(path) != p:
        return "round trip"
    if rsk(inverse(p)) != pair.swapped():
        return "rsk of inverse swaps P and Q"
    if tableau_to_path(tableau_rotate(rect)) != inverse_path(path):
        return "rotation reads as inverse path"
    des = descent_set(p)
    if tableau_descents(pair.Q) != des or tableau_descents(rect, first_half=True) != des:
        return "Des(Q) = Des1(T) = Des(pi)"
    if path_descents(path) != des:
        return "Des(p) = Des(pi)"
    if path_descents_inverse(path) != inverse_descent_set(p):
        return "Des(p^-1) = Des(pi^-1)"
    conditions = (
        p(n) == n,
        n in pair.P.row1 and n in pair.Q.row1,
        n in rect.row1 and n + 1 in rect.row2,
        n in peaks(path),
    )
    if len(set(conditions)) != 1:
        return "fixed last value equivalences"
    if path_ldes(path) != ldes(p) or path_lind(path) != lind(p):
        return "ldes and lind transport"
    mirrored = psi(p)
    if psi(mirrored) != p or not is_321_avoiding(mirrored):
        return "psi involution"
    if tail(phi(mirrored)) != n - ldes(p):
        return "tail(phi(psi(pi))) = n - ldes(pi)"
    return None


@register_check("bijection", "the tableau chain is a bijection carrying every statistic")
def check_bijection(max_n: int, enumeration_limit: int) -> CheckOutcome:
    top = min(max_n, enumeration_limit)
    for n in range(1, top + 1):
        seen = set()
        for p in enumerate_T(n):
            failed = _bijection_violation(p)
            if failed:
                return CheckOutcome(1, n, {"n": n, "perm": str(p), "property": failed})
            seen.add(phi(p))
        if len(seen) != catalan(n):
            return CheckOutcome(1, n, {"n": n, "image": len(seen), "catalan": catalan(n)})
    return CheckOutcome(1, top)


@register_check("hilbert", "sum over P_n of q^(n-tail) = ballot polynomial = g_n(1,q)")
def check_hilbert(max_n: int, enumeration_limit: int) -> CheckOutcome:
    for n in range(1, max_n + 1):
        closed = hilbert_closed_form(n)
        g = g_ldes(n)
        if closed != g:
            return CheckOutcome(1, n, _mismatch(n, ballot=closed, g=g))
        if n > enumeration_limit:
            continue
        tails: Counter[int] = Counter()
        for path in enumerate_P(n):
            t = tail(path)
            if t != path_descents_inverse(path).min(default=n):
                return CheckOutcome(1, n, {"n": n, "path": str(path), "property": "tail"})
            tails[n - t] += 1
        if [tails[k] for k in range(n)] != univariate_coefficients(closed, Y):
            return CheckOutcome(1, n, _mismatch(n, tails=tails, ballot=closed))
    return CheckOutcome(1, max_n)
