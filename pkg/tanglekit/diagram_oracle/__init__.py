"""Planar diagrams and the invariants used to check solver output."""

from tanglekit.diagram_oracle.bracket import jones_polynomial, kauffman_bracket
from tanglekit.diagram_oracle.classify import (
    Unrecognized,
    bracket_key,
    classify_closure,
    classify_diagram,
    signature_key,
)
from tanglekit.diagram_oracle.diagram import (
    Diagram,
    OrientedTorusLink2,
    closure_diagram,
    component_count,
    components,
    export_crossings,
    expr_to_diagram,
    induced_orientation,
    linking_number,
    mirror,
    orient,
    orient_with_linking,
    reverse_component,
)
from tanglekit.diagram_oracle.laurent import LaurentPoly
from tanglekit.diagram_oracle.moves import face_darts, reidemeister_one, reidemeister_two
from tanglekit.diagram_oracle.signature import determinant, signature

__all__ = [
    "Diagram",
    "LaurentPoly",
    "OrientedTorusLink2",
    "Unrecognized",
    "bracket_key",
    "classify_closure",
    "classify_diagram",
    "closure_diagram",
    "component_count",
    "components",
    "determinant",
    "export_crossings",
    "expr_to_diagram",
    "face_darts",
    "induced_orientation",
    "jones_polynomial",
    "kauffman_bracket",
    "linking_number",
    "mirror",
    "orient",
    "orient_with_linking",
    "reidemeister_one",
    "reidemeister_two",
    "reverse_component",
    "signature",
    "signature_key",
]
