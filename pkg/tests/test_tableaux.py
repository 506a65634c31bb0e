"""Tests for two-row tableaux and the permutation -> path chain."""

import pytest

from avoid321.components.dyck import enumerate_P, inverse_path, path_descents_inverse, tail
from avoid321.components.permutation import (
    Permutation,
    descent_set,
    enumerate_T,
    inverse,
    inverse_descent_set,
    parse_permutation,
)
from avoid321.components.tableaux import (
    RectTableau,
    SYTPair,
    TwoRowTableau,
    glue,
    path_to_tableau,
    phi,
    phi_inverse,
    psi,
    rsk,
    rsk_general,
    rsk_inverse,
    tableau_descents,
    tableau_rotate,
    tableau_to_path,
    unglue,
)
from avoid321.errors import InvalidArgumentError, PatternViolationError


class TestTableauTypes:
    """Test tableau validation."""

    def test_valid(self):
        t = TwoRowTableau((1, 3, 4), (2, 5))
        assert t.shape == (3, 2)
        assert str(t) == "(1 3 4 / 2 5)"
        assert TwoRowTableau.from_json(t.to_json()) == t

    @pytest.mark.parametrize(
        "row1,row2",
        [((2,), (1,)), ((1, 3, 2), ()), ((1,), (2, 3)), ((1, 2), (4,))],
    )
    def test_invalid(self, row1, row2):
        with pytest.raises(InvalidArgumentError):
            TwoRowTableau(row1, row2)

    def test_rect_requires_equal_rows(self):
        with pytest.raises(InvalidArgumentError):
            RectTableau((1, 2), (3,))
        assert RectTableau((1, 2), (3, 4)).semilength == 2

    def test_pair_requires_equal_shapes(self):
        with pytest.raises(InvalidArgumentError):
            SYTPair(TwoRowTableau((1, 2)), TwoRowTableau((1,), (2,)))


class TestInsertion:
    """Test row insertion on the running example."""

    def test_running_example(self, worked_example):
        pair = rsk(worked_example)
        assert pair.P == TwoRowTableau((1, 3, 4), (2, 5))
        assert pair.Q == TwoRowTableau((1, 2, 5), (3, 4))

    def test_213(self):
        pair = rsk(parse_permutation("213"))
        assert pair.P == pair.Q == TwoRowTableau((1, 3), (2,))

    def test_321_is_rejected(self):
        with pytest.raises(PatternViolationError):
            rsk(parse_permutation("321"))
        with pytest.raises(PatternViolationError):
            phi(parse_permutation("4231"))

    def test_general_insertion_has_three_rows_for_321(self):
        P, Q = rsk_general([3, 2, 1])
        assert P == [[1], [2], [3]]
        assert Q == [[1], [2], [3]]

    def test_swapping_the_pair_inverts(self, worked_example):
        swapped = rsk_inverse(rsk(worked_example).swapped())
        assert str(swapped) == "31452"
        assert swapped == inverse(worked_example)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_inverse_round_trip(self, n):
        for p in enumerate_T(n):
            assert rsk_inverse(rsk(p)) == p


class TestChain:
    """Test gluing, paths and the composite bijection."""

    def test_glue_running_example(self, worked_example):
        t = glue(rsk(worked_example))
        assert t == RectTableau((1, 2, 5, 6, 9), (3, 4, 7, 8, 10))
        assert str(tableau_to_path(t)) == "++--++--+-"
        assert unglue(t) == rsk(worked_example)

    def test_descents_through_the_chain(self, worked_example):
        pair = rsk(worked_example)
        assert tableau_descents(pair.Q).indices == (2,)
        assert tableau_descents(pair.P).indices == (1, 4)
        assert tableau_descents(glue(pair), first_half=True).indices == (2,)

    def test_first_half_needs_rectangle(self):
        with pytest.raises(InvalidArgumentError):
            tableau_descents(TwoRowTableau((1, 3), (2,)), first_half=True)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_phi_is_a_bijection(self, n):
        images = {phi(p) for p in enumerate_T(n)}
        assert images == set(enumerate_P(n))
        for path in enumerate_P(n):
            assert phi(phi_inverse(path)) == path

    @pytest.mark.parametrize("n", range(1, 7))
    def test_descents_are_transported(self, n):
        for p in enumerate_T(n):
            path = phi(p)
            assert path_descents_inverse(path) == inverse_descent_set(p)
            assert tableau_descents(rsk(p).Q) == descent_set(p)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_rotation(self, n):
        for path in enumerate_P(n):
            t = path_to_tableau(path)
            assert tableau_rotate(tableau_rotate(t)) == t
            assert tableau_to_path(tableau_rotate(t)) == inverse_path(path)

    def test_psi(self, worked_example):
        image = psi(worked_example)
        assert str(image) == "41253"
        assert tail(phi(image)) == 3
        assert tail(phi(worked_example)) == 1
        assert psi(image) == worked_example

    @pytest.mark.parametrize("n", range(1, 8))
    def test_psi_is_longest_element_conjugate_of_inverse(self, n):
        w0 = Permutation(tuple(range(n, 0, -1)))

        def compose(a: Permutation, b: Permutation) -> Permutation:
            return Permutation(tuple(a(b(i)) for i in range(1, n + 1)))

        for p in enumerate_T(n):
            assert psi(p) == compose(w0, compose(inverse(p), w0))
