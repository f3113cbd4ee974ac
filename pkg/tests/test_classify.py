import pytest

from tanglekit.diagram_oracle import (
    Unrecognized,
    classify_closure,
    classify_diagram,
    closure_diagram,
    expr_to_diagram,
    mirror,
)
from tanglekit.errors import CrossingCapExceeded
from tanglekit.tangle_core import (
    INFINITY,
    ZERO,
    TangleFraction,
    TwoBridgeLink,
    closure_of_rational,
    genus_one_fraction,
    leaf,
    pretzel_expr,
    tangle_sum,
    torus_link,
)


@pytest.mark.parametrize(
    "fraction",
    [
        TangleFraction(11, 2),
        TangleFraction(-11, 2),
        TangleFraction(15, 4),
        TangleFraction(5, 2),
        TangleFraction(6, 1),
        TangleFraction(-6, 1),
        TangleFraction(23, 6),
    ],
)
def test_rational_closures_are_recognized(fraction):
    assert classify_closure(fraction) == closure_of_rational(fraction)


def test_trivial_links():
    assert classify_closure(INFINITY) == TwoBridgeLink(1, 0)
    assert classify_closure(ZERO) == TwoBridgeLink(0, 1)


def test_mirror_diagram_classifies_as_mirror():
    d = expr_to_diagram(TangleFraction(31, 4))
    assert classify_diagram(mirror(d)) == TwoBridgeLink(31, 4).mirror()


def test_pretzel_presentation():
    assert classify_closure(pretzel_expr(3, 3, 1)) == closure_of_rational(genus_one_fraction(2, 2))


def test_xer_solution_closures():
    u = tangle_sum(leaf(-1, 3), leaf(-1, 3))
    assert classify_diagram(closure_diagram(u, ZERO)) == torus_link(6)
    assert classify_diagram(closure_diagram(u, TangleFraction(-1, 1))) == closure_of_rational(TangleFraction(15, 4))


def test_non_two_bridge_knot():
    # P(3,3,3) is a Montesinos knot with three rational tangles
    result = classify_closure(pretzel_expr(3, 3, 3))
    assert isinstance(result, Unrecognized)


def test_cap_applies():
    with pytest.raises(CrossingCapExceeded):
        classify_closure(TangleFraction(40, 1), cap=24)
