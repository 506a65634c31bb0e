"""Tests for the generating functions f_n and their specialisations.

Tests:
- Closed-form values of f_1..f_4 from both constructions
- Recursion against enumeration
- Signed and last-descent enumerators, ballot numbers
- Substitution spec strings
"""

import pytest

from avoid321.components.genfun import (
    GenFunMethod,
    apply_spec,
    binomial,
    f_bruteforce,
    f_recursive,
    f_recursive_collapsed,
    g_ldes,
    g_signed,
    generating_function,
    h_poly,
    hilbert_closed_form,
    parse_spec,
    specialize_hat,
)
from avoid321.components.polynomial import Variable, parse_poly
from avoid321.errors import InvalidArgumentError, ResourceLimitError

# ============================================================================
# f_n
# ============================================================================


class TestClosedFormValues:
    """Test the printed values of f_1..f_4."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_bruteforce_matches(self, n, closed_form_values):
        assert f_bruteforce(n) == closed_form_values[n]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_recursive_matches(self, n, closed_form_values):
        assert f_recursive(n) == closed_form_values[n]

    def test_f2_canonical_text(self):
        assert str(f_bruteforce(2)) == "z^2 + t1*x*y*z"

    def test_f1_is_z(self):
        assert str(f_recursive(1)) == "z"


class TestRecursion:
    """Test the recursion against enumeration."""

    @pytest.mark.parametrize("n", range(1, 10))
    def test_recursive_equals_bruteforce(self, n):
        assert f_recursive(n) == f_bruteforce(n)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [10, 11, 12])
    def test_recursive_equals_bruteforce_slow(self, n):
        assert f_recursive(n) == f_bruteforce(n)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_collapsed_recursion(self, n):
        assert f_recursive_collapsed(n) == f_recursive(n).substitute_all_t(1)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_coefficients_count_t_n(self, n):
        from tests.conftest import CATALAN

        assert f_recursive(n).total() == CATALAN[n]

    def test_results_are_polynomials(self):
        assert all(f_recursive(n).is_polynomial for n in range(1, 9))

    def test_bound_is_enforced(self):
        with pytest.raises(ResourceLimitError):
            f_recursive(6, bound=5)
        with pytest.raises(ResourceLimitError):
            f_bruteforce(6, bound=5)

    def test_parallel_bruteforce_matches(self):
        assert f_bruteforce(7, workers=3) == f_bruteforce(7)

    def test_dispatch(self):
        assert generating_function(5, GenFunMethod.RECURSIVE) == generating_function(5)


# ============================================================================
# Specialisations
# ============================================================================


class TestSpecialisations:
    """Test signed and last-descent enumerators."""

    def test_hat_sets_last_t(self, closed_form_values):
        hat = specialize_hat(closed_form_values[3], 3)
        assert Variable.t(2) not in hat.variables
        assert Variable.t(1) in hat.variables
        assert specialize_hat(closed_form_values[1], 1) == closed_form_values[1]

    @pytest.mark.parametrize(
        "n,expected",
        [(1, "1"), (2, "1 - y"), (3, "1"), (4, "1 - y + y^2 - y^3")],
    )
    def test_g_signed_values(self, n, expected):
        assert g_signed(n) == parse_poly(expected)
        assert g_signed(n, GenFunMethod.BRUTE_FORCE) == parse_poly(expected)

    @pytest.mark.parametrize(
        "n,expected",
        [
            (0, "1"),
            (1, "1"),
            (2, "1 + y"),
            (3, "1 + 2*y + 2*y^2"),
            (4, "1 + 3*y + 5*y^2 + 5*y^3"),
        ],
    )
    def test_g_ldes_values(self, n, expected):
        assert g_ldes(n) == parse_poly(expected)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_g_ldes_methods_agree(self, n):
        assert g_ldes(n) == g_ldes(n, GenFunMethod.BRUTE_FORCE)

    @pytest.mark.parametrize("n", range(0, 8))
    def test_h_is_next_g(self, n):
        assert h_poly(n) == g_ldes(n + 1)

    @pytest.mark.parametrize("n", range(1, 12))
    def test_ballot_polynomial_is_g_ldes(self, n):
        assert hilbert_closed_form(n) == g_ldes(n)

    def test_ballot_rejects_zero(self):
        with pytest.raises(InvalidArgumentError):
            hilbert_closed_form(0)

    def test_binomial(self):
        assert [binomial(5, k) for k in range(6)] == [1, 5, 10, 10, 5, 1]
        assert binomial(3, 4) == 0


class TestSpecStrings:
    """Test substitution spec strings."""

    def test_signed_spec_on_f2(self):
        assert str(apply_spec(f_bruteforce(2), "t=1,x=-1,z=1")) == "1 - y"

    def test_individual_t(self, closed_form_values):
        result = apply_spec(closed_form_values[3], "t2=0, x=1, y=1, z=1")
        assert result == parse_poly("1 + 2*t1")

    def test_monomial_values(self):
        assert apply_spec(parse_poly("y"), "y=-y^2") == parse_poly("-y^2")

    def test_parse_spec_pairs(self):
        names = [name for name, _ in parse_spec("t=1,x=-1,z=1")]
        assert names == ["t", "x", "z"]

    @pytest.mark.parametrize("spec", ["x", "w=1", "x=1+y"])
    def test_malformed_spec(self, spec):
        with pytest.raises(InvalidArgumentError):
            apply_spec(parse_poly("x"), spec)
