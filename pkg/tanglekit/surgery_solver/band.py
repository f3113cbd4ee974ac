"""Coherent band surgery from the torus link N(2k) to genus-one 2-bridge knots.

The substrate side of every band system here is N(U + 0), the product side
N(U + 1/w).  For band_solve the knot N((4mn-1)/2m) is the substrate
and the torus link the product; the Xer solver runs the other way.
"""

from __future__ import annotations

import logging

from tanglekit.diagram_oracle.diagram import OrientedTorusLink2
from tanglekit.errors import PreconditionError, UnsupportedError
from tanglekit.surgery_solver.families import (
    BAND_K_M,
    BAND_K_N,
    BAND_K_SUM_MINUS,
    BAND_K_SUM_PLUS,
    TREFOIL_HOPF,
    XER,
    Instance,
    Move,
    SolutionFamily,
    SolutionReport,
    obstructed,
    solved,
    unknown,
)
from tanglekit.surgery_solver.obstruction import SignatureFacts
from tanglekit.tangle_core.expr import CircleProduct, TangleExpr, format_expr, leaf, tangle_sum
from tanglekit.tangle_core.fractions import ZERO, TangleFraction
from tanglekit.tangle_core.knot_table import LinkSpec, torus_link
from tanglekit.tangle_core.twobridge import closure_of_rational, genus_one_fraction

logger = logging.getLogger(__name__)


def band_move(w: int) -> Move:
    return Move(ZERO, TangleFraction(1, w))


def _ordered_sums(a: int, b: int, word: tuple[int, ...] | None) -> list[tuple[TangleExpr, str | None]]:
    """(-1/a + -1/b) and (-1/b + -1/a), each followed by ``word`` if given."""
    out = []
    pairs = [(a, b)] if a == b else [(a, b), (b, a)]
    for x, y in pairs:
        e = tangle_sum(TangleFraction(-1, x), TangleFraction(-1, y))
        out.append((CircleProduct(e, word) if word else e, None))
    if a == b:
        out[0] = (out[0][0], "m = n: both ordered sums coincide")
    return out


def _family(
    case: str,
    u_list: list[tuple[TangleExpr, str | None]],
    move: Move,
    substrate: LinkSpec,
    product: LinkSpec,
    closed_form: str,
    parameters: dict,
) -> SolutionFamily:
    instances = []
    notes = []
    seen = set()
    for u, note in u_list:
        if format_expr(u) in seen:
            continue
        seen.add(format_expr(u))
        instances.append(Instance(u, (("swap", len(instances)),)))
        if note:
            notes.append(note)
    return SolutionFamily(case, move, substrate, product, closed_form, parameters, tuple(instances), tuple(notes))


def band_solve(m: int, n: int, w: int, target: OrientedTorusLink2) -> SolutionReport:
    """Solve N(U + 0) = N((4mn-1)/2m), N(U + 1/w) = N(2k) with the target orientation.

    The linking number is that of N(2k) oriented coherently with the knot
    across the band.
    """
    if m == 0 or n == 0:
        raise UnsupportedError(
            f"substrate N((4mn-1)/2m) with m={m}, n={n} is a torus knot case; not handled here",
            reason="mn=0",
        )
    k, lk = target.k, target.lk
    notes = []
    if abs(k) == 1 and lk == k:
        lk = -k
        notes.append("Hopf link: both orientations are treated alike")
    if lk == k and k != 0:
        if SignatureFacts.obstructs(k, lk):
            return obstructed(
                "signature",
                f"|sigma(N({2 * k}), lk={lk:+d})| = {SignatureFacts.torus_link(k, lk)}, knot signature is 0 or +-2",
            )
        return unknown(f"coherent banding onto N({2 * k}) with lk={lk:+d} is undecided")

    move = band_move(w)
    knot = genus_one_fraction(m, n)
    substrate = LinkSpec(closure_of_rational(knot))
    # the Hopf link is the same link under either orientation
    product = LinkSpec(torus_link(2 * k), -k if abs(k) != 1 else None)
    params = {"m": m, "n": n, "w": w, "k": k}
    det = 4 * m * n - 1
    families = []
    if k == m:
        u = leaf(det, -w * det + 2 * m)
        families.append(
            _family(BAND_K_M, [(u, None)], move, substrate, product, "U = (4mn-1)/(-w(4mn-1)+2m)", params)
        )
    if k == n:
        u = leaf(det, -w * det + 2 * n)
        families.append(
            _family(BAND_K_N, [(u, None)], move, substrate, product, "U = (4mn-1)/(-w(4mn-1)+2n)", params)
        )
    if k == m + n + 1:
        families.append(
            _family(
                BAND_K_SUM_PLUS,
                _ordered_sums(2 * m + 1, 2 * n + 1, (1, -(w + 1), 0)),
                move,
                substrate,
                product,
                "U = (-1/(2m+1) + -1/(2n+1)) o (1,-(w+1),0)",
                params,
            )
        )
    if k == m + n - 1:
        families.append(
            _family(
                BAND_K_SUM_MINUS,
                _ordered_sums(2 * m - 1, 2 * n - 1, (-1, -(w - 1), 0)),
                move,
                substrate,
                product,
                "U = (-1/(2m-1) + -1/(2n-1)) o (-1,-(w-1),0)",
                params,
            )
        )
    logger.debug("band system m=%d n=%d w=%d k=%d: %d cases", m, n, w, k, len(families))
    return solved(families, *notes)


def xer_pairs(k: int) -> list[tuple[int, int]]:
    """All (m, n) with mn > 0 and |m + n| = k + 1, positive class first."""
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    positive = [(m, k + 1 - m) for m in range(1, k + 1)]
    return positive + [(-m, -n) for m, n in positive]


def solve_2k_to_2k1(k: int, w: int = -1) -> list[SolutionFamily]:
    """Coherent bands from N(2k), lk = -k, to the (2k+1)-crossing knots N((4mn-1)/2m).

    One family per admitted (m, n); rejected pairs (the mirror class,
    which needs the substrate N(-2k)) come back with no instances.
    """
    move = band_move(w)
    substrate = LinkSpec(torus_link(2 * k), -k)
    families = []
    for m, n in xer_pairs(k):
        product = LinkSpec(closure_of_rational(genus_one_fraction(m, n)))
        params = {"m": m, "n": n, "k": k, "w": w}
        if m + n - 1 != k:
            families.append(
                SolutionFamily(
                    XER, move, substrate, product, "none", params,
                    notes=(f"substrate mismatch: (m,n)=({m},{n}) needs N({-2 * k})",),
                )
            )
            continue
        u: TangleExpr = tangle_sum(TangleFraction(-1, 2 * m - 1), TangleFraction(-1, 2 * n - 1))
        closed_form = "U = (-1/(2m-1) + -1/(2n-1))"
        if w != -1:
            u = CircleProduct(u, (-w - 1, 0))
            closed_form += " o (-w-1,0)"
        families.append(
            SolutionFamily(XER, move, substrate, product, closed_form, params, (Instance(u),))
        )
    logger.debug("xer k=%d: %d pairs", k, len(families))
    return families


def admitted(family: SolutionFamily) -> bool:
    return bool(family.instances)


def solve_trefoil_hopf(w: int) -> TangleFraction:
    """U with N(U + 0) = trefoil and N(U + 1/w) = Hopf link."""
    return TangleFraction(3, -3 * w - 2)


def trefoil_hopf_family(w: int) -> SolutionFamily:
    u = solve_trefoil_hopf(w)
    return SolutionFamily(
        TREFOIL_HOPF,
        band_move(w),
        LinkSpec(torus_link(3)),
        LinkSpec(torus_link(2)),
        "U = 3/(-3w-2)",
        {"w": w},
        (Instance(leaf(u.num, u.den)),),
    )
