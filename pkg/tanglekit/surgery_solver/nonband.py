"""Tangle systems N(U + 0) = N(a/b), N(U + t/w) = N(z/v) beyond band moves.

When |t| > 1 every solution U is a generalized M-tangle: either rational,
U = a/b', or a sum of two rational tangles followed by a circle product
(h, 0), the latter only when w = +-1 (mod t).  The sum case is finite:
t, p and pb - qa all divide z -+ a.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from math import gcd

from tanglekit import settings_store
from tanglekit.errors import PreconditionError
from tanglekit.surgery_solver.equivalence import move_equiv_zero, psi_translate
from tanglekit.surgery_solver.families import (
    GENERALIZED_RATIONAL,
    GENERALIZED_SUM,
    NONBAND_RATIONAL,
    PSI,
    Instance,
    Move,
    SolutionFamily,
    SolutionReport,
    no_solution,
    solved,
)
from tanglekit.tangle_core.expr import CircleProduct, TangleExpr, format_expr, leaf, tangle_sum
from tanglekit.tangle_core.fractions import ZERO, TangleFraction
from tanglekit.tangle_core.knot_table import LinkSpec, torus_link
from tanglekit.tangle_core.twobridge import (
    TwoBridgeLink,
    bezout_pair,
    closure_of_rational,
    sum_closure,
)

logger = logging.getLogger(__name__)

XER_PSI_MOVE = Move(TangleFraction(-1, 3), TangleFraction(-4, 3))
# the (0, 9/5) move equivalent to XER_PSI_MOVE
PSI_T, PSI_W = 9, 5


def h_window(h_range: tuple[int, int] | None = None) -> range:
    if h_range is None:
        h_range = (int(settings_store.get_setting("h_min")), int(settings_store.get_setting("h_max")))
    lo, hi = h_range
    if lo > hi:
        raise PreconditionError(f"empty h window [{lo}, {hi}]")
    return range(lo, hi + 1)


def residues(z: int, v: int, both_chiralities: bool = False) -> list[int]:
    """Representatives in [0, |z|) of v^{+-1} mod z, and of -v^{+-1} if asked."""
    mod = abs(z)
    if mod <= 1:
        return [0]
    found = {v % mod, pow(v, -1, mod)}
    if both_chiralities:
        found |= {-r % mod for r in found}
    return sorted(found)


def divisor_bounds(a: int, z: int) -> tuple[int, int]:
    """|z - a| and |z + a|, sorted; t, p and pb - qa divide one of them."""
    return tuple(sorted((abs(z - a), abs(z + a))))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _substrate_reps(a: int, b: int) -> list[int]:
    # N(a/b) = N(a/b^-1): both presentations of the substrate
    reps = [b]
    if abs(a) > 1:
        inverse = pow(b, -1, abs(a))
        if inverse % abs(a) != b % abs(a):
            reps.append(inverse)
    return reps


def _require_substrate(ab: TangleFraction) -> None:
    if ab.num == 0 or ab.is_infinity:
        raise PreconditionError(f"substrate N({ab}) must be a knot or a nonsplit link")


# ---- Rational families ----


def rational_move_family(
    ab: TangleFraction,
    zv: TangleFraction,
    h_range: tuple[int, int] | None = None,
    both_chiralities: bool = False,
    case: str = GENERALIZED_RATIONAL,
) -> list[SolutionFamily]:
    """All (0, t/w) moves with a rational solution, materialized over residues and h.

    With bx - ay = 1 the solutions are t/w = (xz - av')/(bv' - yz - ht),
    U = a/(b + ha), and t/w = (bz - av')/(xv' - yz - ht), U = a/(x + ha),
    for v' = v^{+-1} (mod z).  The second form is dropped when x = b.
    """
    _require_substrate(ab)
    a, b = ab.num, ab.den
    z, v = zv.num, zv.den
    x, y = bezout_pair(b, a)
    substrate = LinkSpec(closure_of_rational(ab))
    target = closure_of_rational(zv)
    own = set(residues(z, v))
    forms = [(1, b, x)] if x == b else [(1, b, x), (2, x, b)]
    families = []
    for form, base, other in forms:
        instances = []
        for r in residues(z, v, both_chiralities):
            product = None if r in own else LinkSpec(target.mirror())
            for h in h_window(h_range):
                t = other * z - a * r
                w = base * r - y * z - h * t
                if t == 0:
                    continue
                instances.append(
                    Instance(
                        leaf(a, base + h * a),
                        (("form", form), ("v'", r), ("h", h)),
                        Move(ZERO, TangleFraction(t, w)),
                        product,
                    )
                )
        if not instances:
            continue
        lead = "x" if form == 1 else "b"
        den = "b" if form == 1 else "x"
        families.append(
            SolutionFamily(
                case,
                instances[0].move,
                substrate,
                LinkSpec(target),
                f"t/w = ({lead}z - av')/({den}v' - yz - ht), U = a/({den} + ha)",
                {"a": a, "b": b, "x": x, "y": y, "z": z, "v": v, "form": form,
                 "residues": residues(z, v, both_chiralities)},
                tuple(instances),
            )
        )
    logger.debug("rational families for N(%s) -> N(%s): %d", ab, zv, len(families))
    return families


def solve_nonband_family(
    k: int, zv: TangleFraction, h_range: tuple[int, int] | None = None
) -> SolutionFamily:
    """Rational solutions from N(2k) to the knot N(z/v), both chiralities of the target.

    t/w = (z - 2kv')/(v' - (z - 2kv')h), U = 2k/(2kh + 1).
    """
    if zv.num % 2 == 0:
        raise PreconditionError(f"N({zv}) is a link; the target must be a knot")
    if k == 0:
        raise PreconditionError("k must be nonzero")
    family = rational_move_family(TangleFraction(2 * k, 1), zv, h_range, True, NONBAND_RATIONAL)[0]
    band = sum(1 for i in family if abs(family.move_of(i).r.num) == 1)
    notes = (f"{band} instance(s) with t = +-1 are band moves",) if band else ()
    return SolutionFamily(
        family.case,
        family.move,
        LinkSpec(torus_link(2 * k)),
        family.product,
        "t/w = (z - 2kv')/(v' - (z - 2kv')h), U = 2k/(2kh + 1)",
        {"k": k, "z": zv.num, "v": zv.den, "residues": family.parameters["residues"]},
        family.instances,
        notes,
    )


# ---- Sums of rational tangles ----


@dataclass(frozen=True)
class SumCandidate:
    """(p, q) from the sum case, with r = pb - qa and the substrate presentation b."""

    t: int
    epsilon: int
    p: int
    q: int
    r: int
    b: int

    @property
    def non_rational(self) -> bool:
        return self.p > 1 and abs(self.r) > 1

    def as_dict(self) -> dict[str, int]:
        return {"t": self.t, "epsilon": self.epsilon, "p": self.p, "q": self.q, "r": self.r, "b": self.b}


def _sum_candidates(a: int, b: int, t: int, epsilon: int, target: TwoBridgeLink, z: int) -> Iterator[SumCandidate]:
    for s in (1, -1):
        numerator = s * z - epsilon * a
        if numerator == 0 or numerator % t:
            continue
        pr = numerator // t
        for p in _divisors(pr):
            r = pr // p
            for rep in _substrate_reps(a, b):
                if (p * rep - r) % a:
                    continue
                q = (p * rep - r) // a
                if gcd(p, q) != 1:
                    continue
                den = t * q * r + epsilon * rep
                if closure_of_rational(TangleFraction(s * z, den)) != target:
                    continue
                yield SumCandidate(t, epsilon, p, q, r, rep)


def _sum_tangles(a: int, c: SumCandidate, h: int) -> list[TangleExpr]:
    d, j = bezout_pair(c.p, c.q)
    first = TangleFraction(d * a - j * c.b, c.r)
    second = TangleFraction(j, c.p)
    out: dict[str, TangleExpr] = {}
    for e in (tangle_sum(first, second), tangle_sum(second, first)):
        u = CircleProduct(e, (-h, 0)) if h else e
        out.setdefault(format_expr(u), u)
    return list(out.values())


def nonrational_certificate(ab: TangleFraction, zv: TangleFraction) -> list[SumCandidate]:
    """Every non-rational sum candidate over all |t| > 1 dividing z -+ a.

    An empty list shows that no (0, t/w) move with w = +-1 (mod t) has a
    non-rational solution.
    """
    _require_substrate(ab)
    a, b = ab.num, ab.den
    z = zv.num
    target = closure_of_rational(zv)
    found = []
    seen = set()
    for bound in divisor_bounds(a, z):
        for t in _divisors(bound):
            if t <= 1:
                continue
            for signed_t in (t, -t):
                for epsilon in (1, -1):
                    for c in _sum_candidates(a, b, signed_t, epsilon, target, z):
                        if c.non_rational and c not in seen:
                            seen.add(c)
                            found.append(c)
    logger.debug("non-rational scan N(%s) -> N(%s): %d candidates", ab, zv, len(found))
    return found


def solve_generalized_M(ab: TangleFraction, tw: TangleFraction, zv: TangleFraction) -> list[SolutionFamily]:
    """All U with N(U + 0) = N(a/b) and N(U + t/w) = N(z/v), for |t| > 1."""
    _require_substrate(ab)
    a, b = ab.num, ab.den
    t, w = tw.num, tw.den
    z = zv.num
    if abs(t) <= 1:
        raise PreconditionError(f"|t| must exceed 1 for generalized M-tangle solutions, got t={t}")
    substrate = LinkSpec(closure_of_rational(ab))
    product = LinkSpec(closure_of_rational(zv))
    move = Move(ZERO, tw)
    families = []

    rational: dict[int, Instance] = {}
    for s in (1, -1):
        numerator = s * z - w * a
        if numerator % t:
            continue
        b_prime = numerator // t
        if gcd(a, b_prime) != 1:
            continue
        u = TangleFraction(a, b_prime)
        if closure_of_rational(u) != substrate.link or sum_closure(u, tw) != product.link:
            continue
        rational.setdefault(b_prime, Instance(leaf(a, b_prime), (("b'", b_prime),)))
    if rational:
        families.append(
            SolutionFamily(
                GENERALIZED_RATIONAL,
                move,
                substrate,
                product,
                "U = a/b', b' = b^{+-1} (mod a), N((tb' + wa)/(ty + wx)) = N(z/v)",
                {"a": a, "b": b, "t": t, "w": w},
                tuple(rational.values()),
            )
        )

    seen = set()
    for epsilon in (1, -1):
        if (w - epsilon) % t:
            continue
        h = (w - epsilon) // t
        for c in _sum_candidates(a, b, t, epsilon, product.link, z):
            if not c.non_rational or (c.p, c.q, c.b) in seen:
                continue
            seen.add((c.p, c.q, c.b))
            instances = tuple(
                Instance(u, (("p", c.p), ("q", c.q), ("swap", i)))
                for i, u in enumerate(_sum_tangles(a, c, h))
            )
            families.append(
                SolutionFamily(
                    GENERALIZED_SUM,
                    move,
                    substrate,
                    product,
                    "U = ((da - jb)/(pb - qa) + j/p) o (-h,0), pd - qj = 1, w = epsilon + ht",
                    c.as_dict() | {"h": h},
                    instances,
                )
            )
    logger.debug("generalized M: N(%s), %s -> N(%s): %d families", ab, tw, zv, len(families))
    return families


# ---- The (-1/3, -4/3) move ----


def psi_move_solve(k: int, zv: TangleFraction) -> SolutionReport:
    """Solve N(U - 1/3) = N(2k), N(U - 4/3) = N(z/v) (either chirality of the target).

    Works in the equivalent (0, 9/5) system, where the non-band rational
    family needs z - 2kv' = 9*epsilon and epsilon*v' = 5 (mod 9), then
    translates back with U o (1,2,0).
    """
    if zv.num % 2 == 0:
        raise PreconditionError(f"N({zv}) is a link; the target must be a knot")
    z, v = zv.num, zv.den
    target = closure_of_rational(zv)
    families = []
    for chirality, link in ((v, target), (-v, target.mirror())):
        admissible = set(residues(z, chirality))
        for epsilon in (1, -1):
            if (z - PSI_T * epsilon) % (2 * k):
                continue
            v_prime = (z - PSI_T * epsilon) // (2 * k)
            if v_prime % abs(z) not in admissible:
                continue
            t, w0 = PSI_T * epsilon, v_prime
            equivalent, h = move_equiv_zero(t, w0, PSI_T, PSI_W)
            if not equivalent:
                continue
            u0 = TangleFraction(2 * k, 2 * k * h + 1)
            u = psi_translate(leaf(u0.num, u0.den))
            families.append(
                SolutionFamily(
                    PSI,
                    XER_PSI_MOVE,
                    LinkSpec(torus_link(2 * k)),
                    LinkSpec(link),
                    "U = (2k/(2kh + 1)) o (1,2,0)",
                    {"k": k, "epsilon": epsilon, "v'": v_prime, "h": h, "U0": str(u0)},
                    (Instance(u, (("epsilon", epsilon), ("h", h))),),
                )
            )
    logger.debug("psi move k=%d -> N(%s): %d families", k, zv, len(families))
    if not families:
        return no_solution(f"no v' with z - {2 * k}v' = +-9 and the 9/5 residue for N({zv})")
    return solved(families)
