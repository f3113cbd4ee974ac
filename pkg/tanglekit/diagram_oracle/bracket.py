"""Kauffman bracket and Jones polynomial by an incremental state sum.

Crossings are absorbed one at a time.  A partial state records how the
open edges (one end absorbed, one end still pending) are paired up by
the smoothed strands, so equal pairings are merged and the work stays
proportional to the diagram's width rather than to 2^c.

<O> = 1, <X> = A <A-smoothing> + A^-1 <B-smoothing>, with the A-smoothing
joining slots (0,1),(2,3).  Jones is (-A^3)^-w <D> at A = t^(-1/4).
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable

from tanglekit import settings_store
from tanglekit.diagram_oracle.diagram import Diagram, orient
from tanglekit.diagram_oracle.laurent import LaurentPoly
from tanglekit.oracle_pool import oracle_pool

logger = logging.getLogger(__name__)

A_PAIRS = ((0, 1), (2, 3))
B_PAIRS = ((0, 3), (1, 2))

# (sorted open-edge pairs, loop already closed)
_StateKey = tuple[tuple[tuple[int, int], ...], bool]

_DELTA = LaurentPoly({2: -1, -2: -1})


def _accumulate(target: dict[_StateKey, LaurentPoly], key: _StateKey, poly: LaurentPoly) -> None:
    total = target[key] + poly if key in target else poly
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def _processing_order(d: Diagram) -> list[int]:
    """Greedy order: next is the crossing sharing the most edges with those done."""
    remaining = set(range(d.crossing_count))
    done_edges: dict[int, int] = {}
    order = []
    while remaining:
        best = min(
            remaining,
            key=lambda x: (-sum(1 for e in d.crossings[x] if done_edges.get(e)), x),
        )
        remaining.remove(best)
        order.append(best)
        for e in d.crossings[best]:
            done_edges[e] = done_edges.get(e, 0) + 1
    return order


class _StateSum:
    def __init__(self, d: Diagram) -> None:
        self.d = d
        self.ends = d.edge_ends()
        self.done: set[int] = set()

    def absorb(
        self,
        states: dict[_StateKey, LaurentPoly],
        x: int,
        choices: Iterable[tuple[tuple[tuple[int, int], ...], int]],
    ) -> dict[_StateKey, LaurentPoly]:
        crossing = self.d.crossings[x]
        new_states: dict[_StateKey, LaurentPoly] = {}
        choices = list(choices)
        for (pairs, closed), poly in states.items():
            for smoothing, a_power in choices:
                match = {}
                for a, b in pairs:
                    match[a] = b
                    match[b] = a
                ports = [("slot", s) for s in range(4)]
                linked_self = set()
                for s, edge in enumerate(crossing):
                    port = ports[s]
                    if edge in match:
                        far = match.pop(edge)
                        match[far] = port
                        match[port] = far
                    elif edge in linked_self:
                        continue
                    else:
                        other = self.d.other_end(self.ends, x, s)
                        if other[0] == x:
                            # edge with both ends at this crossing
                            match[port] = ports[other[1]]
                            match[ports[other[1]]] = port
                            linked_self.add(edge)
                        else:
                            match[port] = edge
                            match[edge] = port
                loops = 0
                for s1, s2 in smoothing:
                    p1, p2 = ports[s1], ports[s2]
                    a, b = match.pop(p1), match.pop(p2)
                    if a == p2:
                        loops += 1
                        continue
                    match[a] = b
                    match[b] = a
                factor = LaurentPoly.monomial(a_power)
                now_closed = closed
                for _ in range(loops):
                    if now_closed:
                        factor = factor * _DELTA
                    now_closed = True
                key_pairs = tuple(sorted({tuple(sorted((a, b))) for a, b in match.items()}))
                _accumulate(new_states, (key_pairs, now_closed), poly * factor)
        return new_states

    def run(self, order: list[int], states: dict[_StateKey, LaurentPoly]) -> dict[_StateKey, LaurentPoly]:
        both = ((A_PAIRS, 1), (B_PAIRS, -1))
        for x in order:
            states = self.absorb(states, x, both)
        return states


def _finish(d: Diagram, states: dict[_StateKey, LaurentPoly]) -> LaurentPoly:
    total = LaurentPoly()
    for (pairs, _), poly in states.items():
        if pairs:
            raise RuntimeError("state sum ended with open edges")
        total = total + poly
    free = d.free_loops if d.crossing_count else d.free_loops - 1
    return total * _DELTA**free


def _prefix_job(args: tuple[Diagram, list[int], tuple[int, ...]]) -> dict[_StateKey, LaurentPoly]:
    d, order, prefix = args
    engine = _StateSum(d)
    states: dict[_StateKey, LaurentPoly] = {((), False): LaurentPoly.one()}
    for x, choice in zip(order, prefix):
        smoothing = (A_PAIRS, 1) if choice == 0 else (B_PAIRS, -1)
        states = engine.absorb(states, x, (smoothing,))
    return engine.run(order[len(prefix):], states)


def kauffman_bracket(d: Diagram, split_depth: int | None = None) -> LaurentPoly:
    """Bracket polynomial in A with <O> = 1.

    ``split_depth`` smoothings of the first crossings are fixed per job and
    the 2^split_depth jobs are summed in prefix order; the result does not
    depend on the split.
    """
    if d.crossing_count == 0 and d.free_loops == 0:
        raise ValueError("empty diagram")
    if split_depth is None:
        split_depth = int(settings_store.get_setting("split_depth"))
    order = _processing_order(d)
    split_depth = max(0, min(split_depth, len(order)))
    prefixes = list(itertools.product((0, 1), repeat=split_depth))
    logger.debug("bracket of %d crossings in %d jobs", d.crossing_count, len(prefixes))
    partials = oracle_pool.map_ordered(_prefix_job, [(d, order, p) for p in prefixes])
    merged: dict[_StateKey, LaurentPoly] = {}
    for states in partials:
        for key, poly in states.items():
            _accumulate(merged, key, poly)
    return _finish(d, merged)


def jones_polynomial(d: Diagram, split_depth: int | None = None) -> LaurentPoly:
    """V(t) of the oriented diagram; exponents in units of t^(1/2)."""
    d = orient(d)
    bracket = kauffman_bracket(d, split_depth)
    w = d.writhe
    normalized = bracket * LaurentPoly({-3 * w: -1 if w % 2 else 1}, "A", 1)
    # A^k = t^(-k/4) = (t^(1/2))^(-k/2)
    out = {}
    for e, c in normalized.terms.items():
        if e % 2:
            raise ValueError(f"bracket exponent {e} is odd after normalization")
        out[-e // 2] = c
    return LaurentPoly(out, "t", 2)
