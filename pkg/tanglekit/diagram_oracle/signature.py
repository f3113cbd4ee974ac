"""Link signature and determinant from a checkerboard Goeritz matrix.

Faces are traced on darts: leaving crossing x at slot s, arriving at
(x', s'), the next dart is (x', s' - 1), so the face lies on the left and
corner k of a crossing (between slots k and k+1) is owned by the face of
dart (x, k).  Corners 1 and 3 are the A-corners.

The signature follows Gordon-Litherland: sign(G) minus the correction
summed over type II crossings, with the convention that positive knots
have negative signature.
"""

from __future__ import annotations

import logging
from collections import deque
from functools import cache

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from tanglekit.diagram_oracle.diagram import Diagram, orient

logger = logging.getLogger(__name__)


def _pieces(d: Diagram) -> list[list[int]]:
    """Crossings grouped into connected pieces of the diagram."""
    parent = list(range(d.crossing_count))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for ends in d.edge_ends().values():
        (x1, _), (x2, _) = ends
        parent[find(x1)] = find(x2)
    groups: dict[int, list[int]] = {}
    for x in range(d.crossing_count):
        groups.setdefault(find(x), []).append(x)
    return list(groups.values())


def faces(d: Diagram) -> dict[tuple[int, int], int]:
    """Face id of every dart (x, s)."""
    ends = d.edge_ends()
    face_of: dict[tuple[int, int], int] = {}
    count = 0
    for x in range(d.crossing_count):
        for s in range(4):
            if (x, s) in face_of:
                continue
            dart = (x, s)
            while dart not in face_of:
                face_of[dart] = count
                nx, ns = d.other_end(ends, *dart)
                dart = (nx, (ns - 1) % 4)
            count += 1
    return face_of


def checkerboard(d: Diagram, face_of: dict[tuple[int, int], int]) -> dict[int, int]:
    """Two-colour the faces so faces across an edge differ."""
    ends = d.edge_ends()
    adjacent: dict[int, set[int]] = {}
    for (x, s), f in face_of.items():
        g = face_of[d.other_end(ends, x, s)]
        adjacent.setdefault(f, set()).add(g)
        adjacent.setdefault(g, set()).add(f)
    colour: dict[int, int] = {}
    for start in sorted(set(face_of.values())):
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for g in adjacent.get(f, ()):
                if g not in colour:
                    colour[g] = 1 - colour[f]
                    queue.append(g)
                elif colour[g] == colour[f]:
                    raise ValueError("diagram is not checkerboard colourable")
    return colour


def _sub_diagram(d: Diagram, crossings: list[int]) -> Diagram:
    orientation = None
    if d.orientation is not None:
        orientation = tuple(d.orientation[x] for x in crossings)
    return Diagram(tuple(d.crossings[x] for x in crossings), 0, orientation)


def goeritz_data(d: Diagram) -> tuple[list[list[int]], int]:
    """Reduced Goeritz matrix on the unshaded faces, and the type II correction.

    ``d`` must be connected and oriented.
    """
    face_of = faces(d)
    colour = checkerboard(d, face_of)
    # either shading gives the same signature; use the smaller white set
    ones = sum(colour.values())
    white_colour = 0 if len(colour) - ones <= ones else 1
    white = sorted(f for f, c in colour.items() if c == white_colour)
    position = {f: i for i, f in enumerate(white)}
    size = len(white)
    g = [[0] * size for _ in range(size)]
    correction = 0
    signs = d.signs()
    for x in range(d.crossing_count):
        a_shaded = colour[face_of[(x, 1)]] != white_colour
        eta = 1 if a_shaded else -1
        w1, w2 = (0, 2) if a_shaded else (1, 3)
        i, j = position[face_of[(x, w1)]], position[face_of[(x, w2)]]
        if i != j:
            g[i][j] -= eta
            g[j][i] -= eta
        if (signs[x] > 0) == a_shaded:
            correction += eta
    for i in range(size):
        g[i][i] = -sum(g[i][j] for j in range(size) if j != i)
    return [row[1:] for row in g[1:]], correction


def _domain_matrix(rows: tuple[tuple[int, ...], ...]) -> DomainMatrix:
    n = len(rows)
    return DomainMatrix([[ZZ(v) for v in row] for row in rows], (n, n), ZZ)


def _descartes(coeffs: list[int]) -> int:
    signs = [c > 0 for c in coeffs if c]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


@cache
def matrix_signature(rows: tuple[tuple[int, ...], ...]) -> int:
    """Signature of a symmetric integer matrix (positive minus negative eigenvalues)."""
    if not rows:
        return 0
    coeffs = [int(c) for c in _domain_matrix(rows).charpoly()]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    degree = len(coeffs) - 1
    positive = _descartes(coeffs)
    negative = _descartes([c * (-1) ** (degree - i) for i, c in enumerate(coeffs)])
    return positive - negative


def signature(d: Diagram) -> int:
    """Signature of the oriented link; split pieces add, free loops give 0."""
    d = orient(d)
    total = 0
    for piece in _pieces(d):
        g, correction = goeritz_data(_sub_diagram(d, piece))
        total += matrix_signature(tuple(tuple(row) for row in g)) - correction
    return total


def determinant(d: Diagram) -> int:
    """|det| of the reduced Goeritz matrix; 0 for split diagrams."""
    pieces = _pieces(d)
    if len(pieces) + d.free_loops > 1:
        return 0
    if not pieces:
        return 1
    g, _ = goeritz_data(orient(_sub_diagram(d, pieces[0])))
    if not g:
        return 1
    return abs(int(_domain_matrix(tuple(tuple(row) for row in g)).det()))
