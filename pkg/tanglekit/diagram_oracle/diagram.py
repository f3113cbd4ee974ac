"""Planar diagrams built from tangle expressions.

Crossings use PD slots ``[a, b, c, d]`` listed counterclockwise: ``a-c``
is the under strand and ``b-d`` the over strand.  A crossing is positive
when the under strand runs ``a -> c`` and the over strand ``d -> b`` (or
both are reversed).

The crossing ``[+1]`` has its over strand NW-SE and under strand SW-NE;
``[c]`` is a horizontal row of ``|c|`` such crossings (mirrored for
``c < 0``) and ``1/[c]`` the same crossings stacked in a column.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import NamedTuple

from tanglekit import settings_store
from tanglekit.errors import CrossingCapExceeded, DiagramError
from tanglekit.tangle_core.expr import (
    CircleProduct,
    RationalLeaf,
    Sum,
    TangleExpr,
    as_expr,
    crossing_count,
)
from tanglekit.tangle_core.fractions import Axis, TangleFraction, fraction_to_cf

logger = logging.getLogger(__name__)

Crossing = tuple[int, int, int, int]
# (under runs slot 0 -> 2, over runs slot 1 -> 3)
StrandDirections = tuple[bool, bool]


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    free_loops: int = 0
    orientation: tuple[StrandDirections, ...] | None = None

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def edge_ends(self) -> dict[int, list[tuple[int, int]]]:
        ends: dict[int, list[tuple[int, int]]] = {}
        for x, crossing in enumerate(self.crossings):
            for s, edge in enumerate(crossing):
                ends.setdefault(edge, []).append((x, s))
        return ends

    def other_end(self, ends: dict[int, list[tuple[int, int]]], x: int, s: int) -> tuple[int, int]:
        first, second = ends[self.crossings[x][s]]
        return second if first == (x, s) else first

    def signs(self) -> tuple[int, ...]:
        oriented = orient(self)
        return tuple(1 if under != over else -1 for under, over in oriented.orientation)

    @property
    def writhe(self) -> int:
        return sum(self.signs())


@dataclass(frozen=True)
class OrientedTorusLink2:
    """N(2k) together with the linking number of its orientation."""

    k: int
    lk: int

    def __post_init__(self) -> None:
        if abs(self.lk) != abs(self.k):
            raise ValueError(f"N({2 * self.k}) has linking number +-{abs(self.k)}, not {self.lk}")

    @property
    def coherent_class(self) -> str:
        return "-k" if self.lk == -self.k else "+k"

    def __str__(self) -> str:
        return f"T(2,{2 * self.k},lk={self.lk:+d})"


# ---- Building ----


class _Piece(NamedTuple):
    nw: int
    ne: int
    sw: int
    se: int


class _Builder:
    """Glues tangle pieces; edges are union-find classes of endpoint nodes."""

    def __init__(self) -> None:
        self.parent: list[int] = []
        self.crossings: list[list[int]] = []
        self.free_loops = 0

    def node(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def join(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            # an arc closed on itself without meeting a crossing
            self.free_loops += 1
        else:
            self.parent[ra] = rb

    def crossing(self, positive: bool) -> _Piece:
        nw, ne, sw, se = (self.node() for _ in range(4))
        self.crossings.append([sw, se, ne, nw] if positive else [nw, sw, se, ne])
        return _Piece(nw, ne, sw, se)

    def zero(self) -> _Piece:
        nw, sw = self.node(), self.node()
        return _Piece(nw, nw, sw, sw)

    def infinity(self) -> _Piece:
        nw, ne = self.node(), self.node()
        return _Piece(nw, ne, nw, ne)

    def add(self, left: _Piece, right: _Piece) -> _Piece:
        self.join(left.ne, right.nw)
        self.join(left.se, right.sw)
        return _Piece(left.nw, right.ne, left.sw, right.se)

    def stack(self, top: _Piece, bottom: _Piece) -> _Piece:
        self.join(top.sw, bottom.nw)
        self.join(top.se, bottom.ne)
        return _Piece(top.nw, top.ne, bottom.sw, bottom.se)

    def twist(self, piece: _Piece, c: int, axis: Axis) -> _Piece:
        for _ in range(abs(c)):
            x = self.crossing(c > 0)
            piece = self.add(piece, x) if axis is Axis.HORIZONTAL else self.stack(piece, x)
        return piece

    def word(self, piece: _Piece, word: tuple[int, ...]) -> _Piece:
        n = len(word)
        for i, c in enumerate(word):
            axis = Axis.HORIZONTAL if (n - i - 1) % 2 == 0 else Axis.VERTICAL
            piece = self.twist(piece, c, axis)
        return piece

    def build(self, e: TangleExpr) -> _Piece:
        match e:
            case RationalLeaf(fraction):
                word = fraction_to_cf(fraction)
                base = self.infinity() if len(word) % 2 == 0 else self.zero()
                return self.word(base, word)
            case Sum(terms):
                piece = self.build(terms[0])
                for term in terms[1:]:
                    piece = self.add(piece, self.build(term))
                return piece
            case CircleProduct(inner, word):
                return self.word(self.build(inner), word)
        raise TypeError(f"not a tangle expression: {e!r}")

    def close(self, piece: _Piece) -> Diagram:
        self.join(piece.nw, piece.ne)
        self.join(piece.sw, piece.se)
        labels: dict[int, int] = {}
        crossings = []
        for crossing in self.crossings:
            row = []
            for node in crossing:
                root = self.find(node)
                row.append(labels.setdefault(root, len(labels)))
            crossings.append(tuple(row))
        diagram = Diagram(tuple(crossings), self.free_loops)
        for edge, ends in diagram.edge_ends().items():
            if len(ends) != 2:
                raise DiagramError(f"edge {edge} has {len(ends)} ends")
        return diagram


def _check_cap(e: TangleExpr, cap: int | None) -> None:
    if cap is None:
        cap = settings_store.crossing_cap()
    count = crossing_count(e)
    if cap > 0 and count > cap:
        raise CrossingCapExceeded(count, cap)


def expr_to_diagram(e: TangleExpr | TangleFraction, cap: int | None = None) -> Diagram:
    """Numerator closure N(e), oriented with the default walk.

    ``cap`` defaults to the configured crossing cap; ``cap=0`` disables it.
    """
    e = as_expr(e)
    _check_cap(e, cap)
    builder = _Builder()
    diagram = orient(builder.close(builder.build(e)))
    logger.debug("built %d-crossing diagram for %s", diagram.crossing_count, e)
    return diagram


def closure_diagram(u: TangleExpr, r: TangleExpr | TangleFraction, cap: int | None = None) -> Diagram:
    """N(U + R); the crossings of U come first, so closures of one U share indices."""
    return expr_to_diagram(Sum((as_expr(u), as_expr(r))), cap)


# ---- Orientation ----


def _walk(
    d: Diagram,
    ends: dict[int, list[tuple[int, int]]],
    x: int,
    slot_in: int,
) -> list[tuple[int, int, bool]]:
    """Follow a component entering crossing x at slot_in; yields (crossing, strand, forward)."""
    visited = []
    start = (x, slot_in)
    while True:
        visited.append((x, slot_in % 2, slot_in < 2))
        slot_out = (slot_in + 2) % 4
        x, slot_in = d.other_end(ends, x, slot_out)
        if (x, slot_in) == start:
            return visited


def components(d: Diagram) -> list[list[tuple[int, int, bool]]]:
    """Strand walks of every component through crossings, in the diagram's orientation.

    Free loops are not listed; see :func:`component_count`.
    """
    ends = d.edge_ends()
    seen: set[tuple[int, int]] = set()
    result = []
    for x in range(d.crossing_count):
        for strand in (0, 1):
            if (x, strand) in seen:
                continue
            forward = True if d.orientation is None else d.orientation[x][strand]
            walk = _walk(d, ends, x, strand if forward else strand + 2)
            seen.update((cx, cs) for cx, cs, _ in walk)
            result.append(walk)
    return result


def component_count(d: Diagram) -> int:
    return len(components(d)) + d.free_loops


def _with_walks(d: Diagram, walks: list[list[tuple[int, int, bool]]]) -> Diagram:
    directions = [[True, True] for _ in d.crossings]
    for walk in walks:
        for x, strand, forward in walk:
            directions[x][strand] = forward
    return replace(d, orientation=tuple((u, o) for u, o in directions))


def orient(d: Diagram) -> Diagram:
    """Give every component a direction if the diagram has none."""
    if d.orientation is not None:
        return d
    return _with_walks(d, components(d))


def component_index(d: Diagram) -> dict[tuple[int, int], int]:
    return {(x, s): i for i, walk in enumerate(components(orient(d))) for x, s, _ in walk}


def reverse_component(d: Diagram, index: int) -> Diagram:
    walks = components(orient(d))
    if not 0 <= index < len(walks):
        raise DiagramError(f"no component {index}; diagram has {len(walks)}")
    flipped = [
        [(x, s, not f) for x, s, f in walk] if i == index else walk
        for i, walk in enumerate(walks)
    ]
    return _with_walks(d, flipped)


def induced_orientation(source: Diagram, target: Diagram, shared: int) -> Diagram:
    """Orient ``target`` so its first ``shared`` crossings run as in ``source``.

    Components of ``target`` that never pass through a shared crossing keep
    their default direction.  Raises DiagramError if the shared crossings
    disagree about one component's direction.
    """
    source = orient(source)
    walks = components(orient(target))
    oriented = []
    for walk in walks:
        votes = {
            source.orientation[x][s] == f
            for x, s, f in walk
            if x < shared
        }
        if len(votes) > 1:
            raise DiagramError("shared crossings give a component two directions")
        keep = votes.pop() if votes else True
        oriented.append(walk if keep else [(x, s, not f) for x, s, f in walk])
    return _with_walks(target, oriented)


def linking_number(d: Diagram) -> int:
    """Half the signed count of crossings between the two components."""
    d = orient(d)
    if component_count(d) != 2:
        raise DiagramError(f"linking number needs 2 components, got {component_count(d)}")
    index = component_index(d)
    signs = d.signs()
    total = sum(signs[x] for x in range(d.crossing_count) if index[(x, 0)] != index[(x, 1)])
    if total % 2:
        raise DiagramError(f"odd inter-component crossing sum {total}")
    return total // 2


def orient_with_linking(d: Diagram, positive: bool) -> Diagram:
    """Orientation of a 2-component diagram with lk >= 0 (or <= 0)."""
    d = orient(d)
    lk = linking_number(d)
    if lk == 0 or (lk > 0) == positive or len(components(d)) < 2:
        return d
    return reverse_component(d, 1)


# ---- Other operations ----


def mirror(d: Diagram) -> Diagram:
    """Switch every crossing: [a,b,c,d] becomes [b,c,d,a]."""
    crossings = tuple((b, c, dd, a) for a, b, c, dd in d.crossings)
    orientation = None
    if d.orientation is not None:
        orientation = tuple((over, not under) for under, over in d.orientation)
    return Diagram(crossings, d.free_loops, orientation)


def export_crossings(d: Diagram) -> str:
    """Crossing list: header, then ``<id> <a> <b> <c> <d> <sign>`` per crossing."""
    d = orient(d)
    lines = [f"# crossings={d.crossing_count} free_loops={d.free_loops}"]
    for x, (crossing, sign) in enumerate(zip(d.crossings, d.signs())):
        lines.append(f"{x} " + " ".join(str(e) for e in crossing) + f" {sign:+d}")
    return "\n".join(lines) + "\n"
