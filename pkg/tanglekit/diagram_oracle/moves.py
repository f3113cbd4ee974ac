"""Reidemeister I and II moves on diagrams, for invariance checks.

New crossings are appended, so existing crossing indices are kept and
the result is oriented to agree with the input.
"""

from __future__ import annotations

from tanglekit.diagram_oracle.diagram import Diagram, induced_orientation, orient
from tanglekit.diagram_oracle.signature import faces
from tanglekit.errors import DiagramError


def _fresh(d: Diagram, count: int) -> list[int]:
    top = max((e for c in d.crossings for e in c), default=-1)
    return list(range(top + 1, top + 1 + count))


def _replace_slot(crossings: list[list[int]], x: int, s: int, edge: int) -> None:
    crossings[x][s] = edge


def reidemeister_one(d: Diagram, x: int, s: int, variant: int = 0) -> Diagram:
    """Add a kink on the edge leaving crossing x at slot s.

    ``variant`` (0-7) picks the rotation and reflection of the kink,
    covering both signs and both sides of the edge.
    """
    d = orient(d)
    if not d.crossings:
        raise DiagramError("no edge to put a kink on")
    ends = d.edge_ends()
    x2, s2 = d.other_end(ends, x, s)
    near, far, loop = _fresh(d, 3)
    kink = [near, far, loop, loop]
    if variant & 4:
        kink = [far, near, loop, loop]
    turn = variant % 4
    kink = kink[turn:] + kink[:turn]
    crossings = [list(c) for c in d.crossings]
    _replace_slot(crossings, x, s, near)
    _replace_slot(crossings, x2, s2, far)
    crossings.append(kink)
    target = Diagram(tuple(tuple(c) for c in crossings), d.free_loops)
    return induced_orientation(d, target, d.crossing_count)


def face_darts(d: Diagram) -> dict[int, list[tuple[int, int]]]:
    """Darts bounding each face, in boundary order."""
    ends = d.edge_ends()
    face_of = faces(d)
    by_face: dict[int, list[tuple[int, int]]] = {}
    for f in sorted(set(face_of.values())):
        start = min(dart for dart, g in face_of.items() if g == f)
        dart = start
        darts = []
        while True:
            darts.append(dart)
            nx, ns = d.other_end(ends, *dart)
            dart = (nx, (ns - 1) % 4)
            if dart == start:
                break
        by_face[f] = darts
    return by_face


def reidemeister_two(
    d: Diagram,
    first: tuple[int, int],
    second: tuple[int, int],
    over: bool = True,
) -> Diagram:
    """Push the edge of dart ``first`` across the edge of dart ``second``.

    Both darts must bound the same face (face to their left) and lie on
    different edges.  ``over`` puts the first edge on top.
    """
    d = orient(d)
    face_of = faces(d)
    if face_of.get(first) is None or face_of.get(first) != face_of.get(second):
        raise DiagramError(f"darts {first} and {second} do not bound one face")
    e, f = d.crossings[first[0]][first[1]], d.crossings[second[0]][second[1]]
    if e == f:
        raise DiagramError("an edge cannot pass over itself")
    ends = d.edge_ends()
    p2 = d.other_end(ends, *first)
    q2 = d.other_end(ends, *second)
    e1, e2, e3, f1, f2, f3 = _fresh(d, 6)
    if over:
        left = [f2, e2, f3, e1]
        right = [f1, e2, f2, e3]
    else:
        left = [e1, f2, e2, f3]
        right = [e2, f2, e3, f1]
    crossings = [list(c) for c in d.crossings]
    _replace_slot(crossings, *first, e1)
    _replace_slot(crossings, *p2, e3)
    _replace_slot(crossings, *second, f1)
    _replace_slot(crossings, *q2, f3)
    crossings.extend([left, right])
    target = Diagram(tuple(tuple(c) for c in crossings), d.free_loops)
    return induced_orientation(d, target, d.crossing_count)
