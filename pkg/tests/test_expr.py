import pytest
from hypothesis import given
from hypothesis import strategies as st

from tanglekit.errors import TangleParseError
from tanglekit.tangle_core import (
    CircleProduct,
    Sum,
    TangleFraction,
    crossing_count,
    format_expr,
    is_rational,
    leaf,
    parse_expr,
    pretzel_expr,
    rational_value,
    tangle_sum,
)

leaves = st.builds(
    lambda n, d: leaf(n, d),
    st.integers(-30, 30),
    st.integers(1, 30),
)
words = st.lists(st.integers(-5, 5), min_size=1, max_size=4).map(tuple)


def _extend(children):
    sums = st.lists(children, min_size=2, max_size=3).map(lambda ts: Sum(tuple(ts)))
    products = st.builds(CircleProduct, children, words)
    return sums | products


expressions = st.recursive(leaves, _extend, max_leaves=6)


def test_parse_circle_product():
    e = parse_expr("(6/1) o (1,0)")
    assert e == CircleProduct(leaf(6), (1, 0))
    assert rational_value(e) == TangleFraction(6, 7)


def test_format_examples():
    assert format_expr(parse_expr("(6/1) o (1,0)")) == "6/1 o (1,0)"
    assert format_expr(tangle_sum(TangleFraction(-1, 3), TangleFraction(-1, 5))) == "(-1/3 + -1/5)"
    assert format_expr(parse_expr("(-1/3 + -1/3) o (-1, 2, 0)")) == "(-1/3 + -1/3) o (-1,2,0)"


def test_parenthesised_single_term_is_grouping():
    assert parse_expr("((3/13))") == leaf(3, 13)


@pytest.mark.parametrize("text", ["3/1 ", "  3/1", "\t3/1\n", "( 3 / 1 ) "])
def test_surrounding_whitespace_is_ignored(text):
    assert parse_expr(text) == leaf(3)


@given(expressions)
def test_parse_format_round_trip(e):
    assert parse_expr(format_expr(e)) == e


@pytest.mark.parametrize(
    "text, position",
    [
        ("1/2 x", 4),
        ("(1 +", 4),
        ("", 0),
    ],
)
def test_parse_errors_carry_position(text, position):
    with pytest.raises(TangleParseError) as info:
        parse_expr(text)
    assert info.value.position == position


def test_bad_fraction_in_expression():
    with pytest.raises(TangleParseError):
        parse_expr("(2/0 + 1)")


def test_rational_sums_with_integers():
    e = tangle_sum(leaf(2), leaf(1, 3))
    assert is_rational(e)
    assert rational_value(e) == TangleFraction(7, 3)
    assert rational_value(tangle_sum(leaf(-1), leaf(-1, 5))) == TangleFraction(-6, 5)


def test_sum_of_two_proper_fractions_is_not_rational():
    e = tangle_sum(leaf(-1, 3), leaf(-1, 3))
    assert not is_rational(e)
    assert rational_value(e) is None


def test_crossing_count():
    assert crossing_count(leaf(6, 7)) == 7
    assert crossing_count(tangle_sum(leaf(-1, 3), leaf(-1, 3))) == 6
    assert crossing_count(CircleProduct(leaf(3), (-1, 2, 0))) == 6


def test_pretzel_columns():
    assert pretzel_expr(3, 5, 1) == tangle_sum(
        TangleFraction(-1, 3), TangleFraction(-1, 5), TangleFraction(-1, 1)
    )
    with pytest.raises(ValueError):
        pretzel_expr(3, 0)
    with pytest.raises(ValueError):
        pretzel_expr()
