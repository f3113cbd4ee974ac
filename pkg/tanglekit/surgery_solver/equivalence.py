"""Equivalences between rational tangle moves.

A (0, t/w) move and a (0, t/(w - ht)) move have the same solutions up to
U -> U o (h, 0), and every (P, R) move is equivalent to some (0, t/w) move.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from tanglekit.errors import PreconditionError
from tanglekit.tangle_core.expr import CircleProduct, TangleExpr, as_expr
from tanglekit.tangle_core.fractions import TangleFraction

logger = logging.getLogger(__name__)

PSI_WORD = (1, 2, 0)


def move_equiv_zero(t: int, w: int, c: int, d: int) -> tuple[bool, int | None]:
    """Is (0, c/d) equivalent to (0, t/w)? Returns the shift h with c/d = t/(w - ht)."""
    if t == 0:
        return (c == 0, 0 if c == 0 else None)
    if c == t and (w - d) % t == 0:
        return True, (w - d) // t
    if c == -t and (w + d) % t == 0:
        return True, (w + d) // t
    return False, None


@dataclass(frozen=True)
class ZeroForm:
    """(P, R) rewritten as (0, t/w); ``t`` > 0 and 0 <= w < t after reduction."""

    t: int
    w: int
    e1: int
    i1: int
    raw_t: int
    raw_w: int

    @property
    def fraction(self) -> TangleFraction:
        return TangleFraction(self.t, self.w)


def _bezout_witness(f1: int, g1: int) -> tuple[int, int]:
    # g1*e1 - f1*i1 = 1 with the smallest non-negative e1
    if f1 == 0:
        return 1, 0
    if abs(f1) == 1:
        return 0, -f1
    e1 = pow(g1, -1, abs(f1))
    return e1, (g1 * e1 - 1) // f1


def move_to_zero_form(p: TangleFraction, r: TangleFraction) -> ZeroForm:
    """The (0, t/w) move equivalent to the (p, r) move."""
    if p == r:
        raise PreconditionError(f"P and R must differ, both are {p}")
    f1, g1 = p.num, p.den
    f2, g2 = r.num, r.den
    e1, i1 = _bezout_witness(f1, g1)
    t = g1 * f2 - g2 * f1
    w = e1 * g2 - i1 * f2
    ct, cw = (t, w) if t > 0 else (-t, -w)
    cw %= ct
    logger.debug("(%s, %s) -> (0, %d/%d), witness e1=%d i1=%d", p, r, ct, cw, e1, i1)
    return ZeroForm(ct, cw, e1, i1, t, w)


def transport_zero_move(u: TangleExpr | TangleFraction, h: int) -> TangleExpr:
    """U o (h, 0): a solution for (0, t/w) becomes one for (0, t/(w - ht))."""
    return CircleProduct(as_expr(u), (h, 0))


def psi_translate(u: TangleExpr | TangleFraction) -> TangleExpr:
    """U o (1,2,0): a (0, 9/5) solution becomes a (-1/3, -4/3) solution."""
    return CircleProduct(as_expr(u), PSI_WORD)
