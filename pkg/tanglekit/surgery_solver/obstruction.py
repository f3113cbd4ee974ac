"""Signature obstruction to coherent band surgery.

A coherent band surgery changes the signature by at most one, so two
oriented links whose possible signatures all differ by two or more are
not related by one.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from tanglekit.diagram_oracle.diagram import (
    component_count,
    expr_to_diagram,
    orient_with_linking,
    reverse_component,
)
from tanglekit.diagram_oracle.signature import signature
from tanglekit.tangle_core.knot_table import LinkSpec

logger = logging.getLogger(__name__)


class SignatureFacts:
    """|sigma| values known in closed form, used before any diagram is built."""

    @staticmethod
    def torus_link(k: int, lk: int) -> int:
        """|sigma(N(2k))| for the orientation with the given linking number."""
        if k == 0:
            return 0
        return 2 * abs(k) - 1 if lk == k else 1

    @staticmethod
    def genus_one_knot() -> frozenset[int]:
        """Possible |sigma| of N((4mn-1)/2m)."""
        return frozenset({0, 2})

    @staticmethod
    def obstructs(k: int, lk: int) -> bool:
        """Whether every N((4mn-1)/2m) is too far in signature from N(2k) with this lk."""
        sigma = SignatureFacts.torus_link(k, lk)
        return all(abs(sigma - s) >= 2 for s in SignatureFacts.genus_one_knot())


@dataclass(frozen=True)
class SignatureCheck:
    sigma_l: tuple[int, ...]
    sigma_lb: tuple[int, ...]

    @property
    def obstructed(self) -> bool:
        return all(abs(a - b) >= 2 for a in self.sigma_l for b in self.sigma_lb)

    @property
    def passes(self) -> bool:
        return not self.obstructed

    def __str__(self) -> str:
        verdict = "obstructed" if self.obstructed else "passes"
        return f"{verdict}: sigma {list(self.sigma_l)} vs {list(self.sigma_lb)}"


def oriented_signatures(spec: LinkSpec, cap: int | None = None) -> tuple[int, ...]:
    """Signature of the link for its orientation, or every orientation if lk is unset."""
    d = expr_to_diagram(spec.link.as_fraction(), cap)
    if component_count(d) < 2:
        return (signature(d),)
    if spec.lk is not None:
        return (signature(orient_with_linking(d, spec.lk > 0)),)
    values = {signature(d)}
    try:
        values.add(signature(reverse_component(d, 1)))
    except ValueError:
        # second component is a free loop
        pass
    return tuple(sorted(values))


def signature_obstruction(l: LinkSpec, lb: LinkSpec, cap: int | None = None) -> SignatureCheck:
    """Can a coherent band surgery turn ``l`` into ``lb``? Signature test only."""
    check = SignatureCheck(oriented_signatures(l, cap), oriented_signatures(lb, cap))
    logger.debug("signature check %s -> %s: %s", l, lb, check)
    return check
