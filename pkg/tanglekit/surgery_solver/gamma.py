"""Unknottedness of the band core curve on a genus-one Seifert surface, and
the stepwise unlinking pathway report.

The curve is described by its linking numbers p, q with the two core
curves of the surface whose twisting is m and n.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cache

from tanglekit.errors import PreconditionError
from tanglekit.surgery_solver.band import solve_trefoil_hopf

logger = logging.getLogger(__name__)

_TREFOIL_PAIRS = frozenset({(0, 1), (1, 0), (1, 1), (1, -1), (2, -1), (1, -2)})

EXTERNAL_TORUS = "external: [Thompson1989]/[HS]"
EXTERNAL_UNLINK = "external: [Sc]"


@dataclass(frozen=True)
class GammaParams:
    m: int
    n: int
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.m == 0 or self.n == 0:
            raise PreconditionError(f"m and n must be nonzero, got m={self.m} n={self.n}", reason="mn=0")
        if self.p == 0 and self.q == 0:
            raise PreconditionError("(p, q) = (0, 0) does not describe a curve")

    def swapped(self) -> GammaParams:
        return GammaParams(self.n, self.m, self.q, self.p)

    def reflected(self) -> GammaParams:
        return GammaParams(-self.m, -self.n, self.p, -self.q)


def _plus_minus(pairs) -> frozenset[tuple[int, int]]:
    return frozenset(pairs) | frozenset((-p, -q) for p, q in pairs)


@cache
def _fibonacci_upto(limit: int) -> tuple[int, ...]:
    fib = [0, 1]
    while fib[-1] <= limit:
        fib.append(fib[-1] + fib[-2])
    return tuple(fib)


def _fibonacci_pairs(limit: int) -> frozenset[tuple[int, int]]:
    """+-(F_i, F_{i+1}) and +-(F_{i+1}, -F_i) with entries up to ``limit``."""
    fib = _fibonacci_upto(limit)
    pairs = set()
    for a, b in zip(fib, fib[1:]):
        pairs.add((a, b))
        pairs.add((b, -a))
    return _plus_minus(pairs)


def gamma_unknot_classify(g: GammaParams) -> bool:
    """Is the core curve an unknot in S^3?"""
    m, n, pq = g.m, g.n, (g.p, g.q)
    if abs(g.p) <= 1 and abs(g.q) <= 1:
        return True
    if n == 1 and pq in _plus_minus({(1, -2)}):
        return True
    if n == -1 and pq in _plus_minus({(1, 2)}):
        return True
    if m == 1 and pq in _plus_minus({(2, -1)}):
        return True
    if m == -1 and pq in _plus_minus({(2, 1)}):
        return True
    limit = max(abs(g.p), abs(g.q))
    if (m, n) == (1, 1):
        return pq in _plus_minus(_TREFOIL_PAIRS)
    if (m, n) == (-1, -1):
        return pq in _plus_minus({(p, -q) for p, q in _TREFOIL_PAIRS})
    if (m, n) == (1, -1):
        return pq in _fibonacci_pairs(limit)
    if (m, n) == (-1, 1):
        return (g.q, g.p) in _fibonacci_pairs(limit)
    return False


# ---- Stepwise unlinking ----


@dataclass(frozen=True)
class PathwayStep:
    source: str
    target: str
    status: str
    detail: str

    def as_dict(self) -> dict[str, str]:
        return {"from": self.source, "to": self.target, "status": self.status, "detail": self.detail}


def _torus_name(n: int) -> str:
    return {3: "3_1", 2: "Hopf"}.get(n, f"T(2,{n})")


def pathway_check(k: int, w: int = -1) -> list[PathwayStep]:
    """T(2,2k) -> T(2,2k-1) -> ... -> trefoil -> Hopf -> unknot -> unlink, one step per round."""
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    names = [_torus_name(n) for n in range(2 * k, 1, -1)] + ["unknot", "unlink"]
    steps = []
    for source, target in zip(names, names[1:]):
        if (source, target) == ("3_1", "Hopf"):
            u = solve_trefoil_hopf(w)
            steps.append(PathwayStep(source, target, "solved", f"U = {u} (w = {w})"))
        elif target == "unlink":
            steps.append(PathwayStep(source, target, "external", EXTERNAL_UNLINK))
        else:
            steps.append(PathwayStep(source, target, "external", EXTERNAL_TORUS))
    logger.debug("pathway k=%d: %d steps", k, len(steps))
    return steps
