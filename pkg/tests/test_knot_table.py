import pytest

from tanglekit.errors import TangleParseError
from tanglekit.tangle_core import (
    KNOT_TABLE,
    TangleFraction,
    TwoBridgeLink,
    closure_of_rational,
    describe_link,
    lookup_name,
    name_link,
    parse_link_spec,
    torus_link,
)


def test_table_entries_are_distinct_links():
    links = [closure_of_rational(f) for f in KNOT_TABLE.values()]
    assert len(set(links)) == len(links)


def test_name_link_finds_table_entry_from_either_residue():
    name = name_link(TwoBridgeLink(11, 6))
    assert name.label == "7_2"
    assert not name.mirror


def test_name_link_mirror():
    name = name_link(TwoBridgeLink(15, 4).mirror())
    assert str(name) == "7_4 (mirror)"


def test_torus_family_names():
    assert str(name_link(torus_link(6))) == "T(2,6)"
    assert str(name_link(torus_link(-6))) == "T(2,-6)"
    assert str(name_link(torus_link(3))) == "3_1"
    assert str(name_link(torus_link(2))) == "Hopf"


def test_unnamed_link():
    assert name_link(TwoBridgeLink(13, 5)) is None
    assert describe_link(TwoBridgeLink(13, 5)) == "b(13,5)"
    assert describe_link(TwoBridgeLink(15, 4)) == "b(15,4) 7_4"


def test_lookup_name_aliases_and_mirrors():
    assert lookup_name("trefoil") == torus_link(3)
    assert lookup_name("-7_4") == lookup_name("7_4").mirror()
    assert lookup_name("!9_5") == closure_of_rational(TangleFraction(-23, 4))
    with pytest.raises(TangleParseError):
        lookup_name("8_19")


@pytest.mark.parametrize(
    "text, fraction",
    [
        ("b(15,4)", TangleFraction(15, 4)),
        ("N(11/2)", TangleFraction(11, 2)),
        ("23/4", TangleFraction(23, 4)),
        ("9_5", TangleFraction(23, 4)),
        ("T(2,5)", TangleFraction(5, 1)),
    ],
)
def test_parse_link_spec(text, fraction):
    spec = parse_link_spec(text)
    assert spec.link == closure_of_rational(fraction)
    assert spec.lk is None


def test_parse_torus_link_with_linking_number():
    spec = parse_link_spec("T(2,6,lk=-3)")
    assert spec.link == torus_link(6)
    assert spec.lk == -3
    assert str(spec) == "b(6,1) T(2,6) lk=-3"


@pytest.mark.parametrize("text", ["T(2,6,lk=2)", "T(2,5,lk=2)", "b(6,2)", "knot"])
def test_parse_link_spec_rejects(text):
    with pytest.raises(TangleParseError):
        parse_link_spec(text)
