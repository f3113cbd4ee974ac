"""Exact arithmetic of rational tangles and 2-bridge links."""

from tanglekit.tangle_core.expr import (
    CircleProduct,
    RationalLeaf,
    Sum,
    TangleExpr,
    as_expr,
    crossing_count,
    format_expr,
    is_rational,
    leaf,
    parse_expr,
    pretzel_expr,
    rational_value,
    tangle_sum,
)
from tanglekit.tangle_core.fractions import (
    INFINITY,
    ZERO,
    Axis,
    TangleFraction,
    apply_twist,
    cf_to_fraction,
    circle_product_fraction,
    fraction_to_cf,
    parse_fraction,
)
from tanglekit.tangle_core.knot_table import (
    KNOT_TABLE,
    KnotName,
    LinkSpec,
    describe_link,
    lookup_name,
    name_link,
    parse_link_spec,
    torus_link,
)
from tanglekit.tangle_core.twobridge import (
    LinkKind,
    TwoBridgeLink,
    bezout_pair,
    closure_of_rational,
    crossing_number_genus1,
    genus_one_fraction,
    mirror_link,
    sum_closure,
    two_bridge_equal,
)

__all__ = [
    "INFINITY",
    "KNOT_TABLE",
    "ZERO",
    "Axis",
    "CircleProduct",
    "KnotName",
    "LinkKind",
    "LinkSpec",
    "RationalLeaf",
    "Sum",
    "TangleExpr",
    "TangleFraction",
    "TwoBridgeLink",
    "apply_twist",
    "bezout_pair",
    "as_expr",
    "cf_to_fraction",
    "circle_product_fraction",
    "closure_of_rational",
    "crossing_count",
    "crossing_number_genus1",
    "describe_link",
    "format_expr",
    "fraction_to_cf",
    "genus_one_fraction",
    "is_rational",
    "leaf",
    "lookup_name",
    "mirror_link",
    "name_link",
    "parse_expr",
    "parse_fraction",
    "pretzel_expr",
    "rational_value",
    "sum_closure",
    "tangle_sum",
    "torus_link",
    "two_bridge_equal",
]
