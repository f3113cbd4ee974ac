import pytest

from tanglekit.diagram_oracle import (
    LaurentPoly,
    expr_to_diagram,
    jones_polynomial,
    kauffman_bracket,
    mirror,
)
from tanglekit.tangle_core import INFINITY, ZERO, TangleFraction, genus_one_fraction, pretzel_expr

# exponents in units of t^(1/2)
RIGHT_TREFOIL = LaurentPoly({2: 1, 6: 1, 8: -1}, "t", 2)
FIGURE_EIGHT = LaurentPoly({-4: 1, -2: -1, 0: 1, 2: -1, 4: 1}, "t", 2)


def jones(e):
    return jones_polynomial(expr_to_diagram(e))


def test_unknot():
    assert jones(TangleFraction(1, 1)) == LaurentPoly.one("t", 2)
    assert jones(INFINITY) == LaurentPoly.one("t", 2)


def test_unlink():
    assert jones(ZERO) == LaurentPoly({-1: -1, 1: -1}, "t", 2)


def test_trefoils_are_chiral():
    right, left = jones(TangleFraction(3, 1)), jones(TangleFraction(-3, 1))
    assert {right, left} == {RIGHT_TREFOIL, RIGHT_TREFOIL.invert()}


def test_hopf_link():
    assert jones(TangleFraction(2, 1)) in (
        LaurentPoly({1: -1, 5: -1}, "t", 2),
        LaurentPoly({-1: -1, -5: -1}, "t", 2),
    )


def test_figure_eight():
    assert jones(TangleFraction(5, 2)) == FIGURE_EIGHT


def test_mirror_inverts_jones():
    d = expr_to_diagram(TangleFraction(15, 4))
    assert jones_polynomial(mirror(d)) == jones_polynomial(d).invert()


@pytest.mark.parametrize("split_depth", [1, 2, 4])
def test_split_state_sum_matches_sequential(split_depth):
    d = expr_to_diagram(TangleFraction(23, 4))
    assert kauffman_bracket(d, split_depth) == kauffman_bracket(d, 0)


def test_empty_diagram_rejected():
    from tanglekit.diagram_oracle import Diagram

    with pytest.raises(ValueError):
        kauffman_bracket(Diagram(()))


def _pretzel_grid(limit):
    return [(m, n) for m in range(-limit, limit + 1) for n in range(-limit, limit + 1) if m * n > 0]


def _check_pretzel_identity(m, n):
    knot = jones(genus_one_fraction(m, n))
    assert knot == jones(pretzel_expr(2 * m - 1, 2 * n - 1, 1))
    assert knot == jones(pretzel_expr(2 * m + 1, 2 * n + 1, -1))


@pytest.mark.parametrize("m, n", [(1, 1), (1, 2), (2, 2), (-1, -2)])
def test_genus_one_knot_is_pretzel(m, n):
    _check_pretzel_identity(m, n)


@pytest.mark.slow
@pytest.mark.parametrize("m, n", _pretzel_grid(3))
def test_genus_one_knot_is_pretzel_full_grid(m, n):
    _check_pretzel_identity(m, n)
