"""Identify closures as 2-bridge links by comparing invariants."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from tanglekit.diagram_oracle.bracket import kauffman_bracket
from tanglekit.diagram_oracle.diagram import (
    Diagram,
    component_count,
    components,
    expr_to_diagram,
    reverse_component,
)
from tanglekit.diagram_oracle.laurent import LaurentPoly
from tanglekit.diagram_oracle.signature import determinant, signature
from tanglekit.tangle_core.expr import TangleExpr, as_expr
from tanglekit.tangle_core.fractions import TangleFraction
from tanglekit.tangle_core.twobridge import TwoBridgeLink

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Unrecognized:
    reason: str
    candidates: tuple[TwoBridgeLink, ...] = ()

    def __str__(self) -> str:
        if not self.candidates:
            return f"unrecognized ({self.reason})"
        return f"unrecognized ({self.reason}: {', '.join(map(str, self.candidates))})"


def bracket_key(d: Diagram) -> LaurentPoly:
    """Bracket up to a unit; unchanged by Reidemeister moves and orientation."""
    return kauffman_bracket(d).unit_normalized()


def signature_key(d: Diagram) -> tuple[int, ...]:
    """Signatures over every relative orientation, as an unoriented invariant."""
    sigma = signature(d)
    if component_count(d) < 2:
        return (sigma,)
    if len(components(d)) < 2:
        # the other component is a free loop; reversing it changes nothing
        return (sigma, sigma)
    return tuple(sorted((sigma, signature(reverse_component(d, 1)))))


def _candidate_links(p: int) -> list[TwoBridgeLink]:
    if p == 0:
        return [TwoBridgeLink(0, 1)]
    if p == 1:
        return [TwoBridgeLink(1, 0)]
    seen: dict[tuple[int, int], TwoBridgeLink] = {}
    for q in range(1, p):
        if gcd(p, q) == 1:
            link = TwoBridgeLink(p, q)
            seen.setdefault(link.key, link)
    return list(seen.values())


@lru_cache(maxsize=4096)
def _candidate_diagram(link: TwoBridgeLink) -> Diagram:
    return expr_to_diagram(link.as_fraction(), cap=0)


@lru_cache(maxsize=4096)
def _candidate_bracket(link: TwoBridgeLink) -> LaurentPoly:
    return bracket_key(_candidate_diagram(link))


@lru_cache(maxsize=4096)
def _candidate_signatures(link: TwoBridgeLink) -> tuple[int, ...]:
    return signature_key(_candidate_diagram(link))


def classify_diagram(d: Diagram) -> TwoBridgeLink | Unrecognized:
    count = component_count(d)
    if count > 2:
        return Unrecognized(f"{count} components")
    p = determinant(d)
    if (p % 2 == 0) != (count == 2):
        return Unrecognized(f"determinant {p} does not fit {count} component(s)")
    candidates = _candidate_links(p)
    key = bracket_key(d)
    matches = [link for link in candidates if _candidate_bracket(link) == key]
    logger.debug("determinant %d: %d of %d candidates share the bracket", p, len(matches), len(candidates))
    if matches:
        sig = signature_key(d)
        matches = [link for link in matches if _candidate_signatures(link) == sig]
    if len(matches) == 1:
        return matches[0]
    if not matches:
        return Unrecognized("no 2-bridge link matches")
    return Unrecognized("ambiguous", tuple(matches))


def classify_closure(e: TangleExpr | TangleFraction, cap: int | None = None) -> TwoBridgeLink | Unrecognized:
    """N(e) as a 2-bridge link, or Unrecognized. Respects the crossing cap."""
    return classify_diagram(expr_to_diagram(as_expr(e), cap))
