"""Unit and property tests for sparse Laurent polynomials.

Tests:
- Ring axioms on random polynomials (hypothesis)
- Exact division round trips and remainder detection
- Substitution domain rules
- Canonical text form and parsing
"""

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from avoid321.components.polynomial import (
    X,
    Y,
    Z,
    LaurentPoly,
    Monomial,
    Variable,
    canonical_string,
    divide_exact,
    from_coefficients,
    parse_poly,
    univariate_coefficients,
)
from avoid321.errors import DivisibilityError, InvalidArgumentError, SubstitutionDomainError

VARIABLES = [Variable.t(1), Variable.t(2), X, Y, Z]

monomials = st.builds(
    Monomial.of,
    st.lists(st.tuples(st.sampled_from(VARIABLES), st.integers(-2, 3)), max_size=4),
)
polys = st.builds(
    LaurentPoly, st.dictionaries(monomials, st.integers(-5, 5), max_size=5)
)
unit_terms = st.builds(LaurentPoly.monomial, monomials, st.sampled_from([1, -1]))

RING = settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])
PROPERTY = settings(max_examples=200, deadline=None)


# ============================================================================
# Ring axioms
# ============================================================================


class TestRingAxioms:
    """Test the commutative ring laws over Z[t, x, y, z] with inverses of variables."""

    @RING
    @given(polys, polys)
    def test_addition_commutes(self, a, b):
        assert a + b == b + a

    @RING
    @given(polys, polys)
    def test_multiplication_commutes(self, a, b):
        assert a * b == b * a

    @RING
    @given(polys, polys, polys)
    def test_associativity(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)

    @RING
    @given(polys, polys, polys)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @RING
    @given(polys)
    def test_identities_and_inverse(self, a):
        assert a + LaurentPoly.zero() == a
        assert a * LaurentPoly.one() == a
        assert (a - a).is_zero
        assert a * 0 == 0

    @PROPERTY
    @given(polys, monomials)
    def test_scale_matches_multiplication(self, a, m):
        assert a.scale(m, 3) == a * LaurentPoly.monomial(m, 3)


# ============================================================================
# Exact division
# ============================================================================


class TestDivideExact:
    """Test exact division in the Laurent ring."""

    @PROPERTY
    @given(polys, polys)
    def test_round_trip(self, a, b):
        assume(not b.is_zero)
        assert divide_exact(a * b, b) == a

    def test_by_monomial_always_divides(self):
        assert divide_exact(parse_poly("x + 1"), parse_poly("y")) == parse_poly("x*y^-1 + y^-1")

    def test_remainder_is_an_error(self):
        with pytest.raises(DivisibilityError):
            divide_exact(parse_poly("x + 1"), parse_poly("x - y"))

    def test_coefficient_must_divide(self):
        with pytest.raises(DivisibilityError):
            divide_exact(parse_poly("x"), parse_poly("2*x"))

    def test_by_zero(self):
        with pytest.raises(DivisibilityError):
            divide_exact(parse_poly("x"), LaurentPoly.zero())

    def test_zero_numerator(self):
        assert divide_exact(LaurentPoly.zero(), parse_poly("x - y*z")).is_zero

    def test_geometric_series(self):
        assert divide_exact(parse_poly("1 - y^4"), parse_poly("1 - y")) == parse_poly(
            "1 + y + y^2 + y^3"
        )


# ============================================================================
# Substitution
# ============================================================================


class TestSubstitution:
    """Test substitution of single terms."""

    def test_monomial_into_variable(self):
        p = parse_poly("z^2 + t1*x*y*z")
        yz_over_x = parse_poly("x^-1*y*z")
        assert p.substitute(Z, 1).substitute(Y, yz_over_x) == parse_poly("1 + t1*y*z")

    def test_all_t(self):
        p = parse_poly("z^3 + t1*x*y*z^3 + t2*x^2*y*z")
        assert p.substitute_all_t(1) == parse_poly("z^3 + x*y*z^3 + x^2*y*z")

    def test_zero_into_positive_power(self):
        assert parse_poly("1 + y").substitute(Y, 0) == 1

    def test_zero_into_negative_power(self):
        with pytest.raises(SubstitutionDomainError):
            parse_poly("y^-1").substitute(Y, 0)

    def test_non_unit_into_negative_power(self):
        with pytest.raises(SubstitutionDomainError):
            parse_poly("y^-1").substitute(Y, 2)

    def test_minus_one_into_negative_power(self):
        assert parse_poly("y^-3").substitute(Y, -1) == -1

    def test_multi_term_value_rejected(self):
        with pytest.raises(InvalidArgumentError):
            parse_poly("y").substitute(Y, parse_poly("x + 1"))

    def test_evaluate_and_total(self):
        p = parse_poly("z^2 + t1*x*y*z")
        assert p.evaluate({X: -1, Z: 1}).substitute_all_t(1) == parse_poly("1 - y")
        assert p.total() == 2

    @PROPERTY
    @given(polys, polys, st.sampled_from(VARIABLES), unit_terms)
    def test_substitution_is_a_ring_homomorphism(self, a, b, v, value):
        assert (a + b).substitute(v, value) == a.substitute(v, value) + b.substitute(v, value)
        assert (a * b).substitute(v, value) == a.substitute(v, value) * b.substitute(v, value)


# ============================================================================
# Text form
# ============================================================================


class TestCanonicalText:
    """Test rendering and parsing."""

    @pytest.mark.parametrize(
        "text", ["0", "1", "z^2 + t1*x*y*z", "1 - y", "2*y^2", "-y + y^3", "x^-1*y*z"]
    )
    def test_canonical_texts_are_stable(self, text):
        assert canonical_string(parse_poly(text)) == text

    def test_order_is_degree_then_exponents(self):
        assert str(parse_poly("-y^3 - y + 1 + y^2")) == "1 - y + y^2 - y^3"

    def test_parse_accepts_any_term_order(self):
        assert parse_poly("t1*x*y*z + z^2") == parse_poly("z^2 + t1*x*y*z")

    def test_parse_merges_like_terms(self):
        assert parse_poly("y + y - 2*y").is_zero

    @PROPERTY
    @given(polys)
    def test_text_round_trip(self, a):
        assert parse_poly(canonical_string(a)) == a

    @pytest.mark.parametrize("text", ["", "x +", "w^2", "x^a"])
    def test_parse_rejects_malformed(self, text):
        with pytest.raises(InvalidArgumentError):
            parse_poly(text)

    def test_json_round_trip(self):
        p = parse_poly("z^2 + t1*x*y*z - 3*x^-1")
        assert LaurentPoly.from_json(p.to_json()) == p

    def test_univariate_coefficients(self):
        assert univariate_coefficients(parse_poly("1 + 3*y + 5*y^3"), Y) == [1, 3, 0, 5]
        assert from_coefficients([1, 3, 0, 5], Y) == parse_poly("1 + 3*y + 5*y^3")
        with pytest.raises(InvalidArgumentError):
            univariate_coefficients(parse_poly("x*y"), Y)
