"""Exploration path tracer: the white/black interface from apex to apex.

The walk lives on integer lattice coordinates so no floating-point equality
is ever needed.  Vertices of the hexagonal lattice sit at (U, V) with
Euclidean position ``(U * scale/2, V * edge/2)``; cell centers occupy
V = 0 mod 3, lattice vertices the other residues.  A vertex with
V = 1 mod 3 has edges going down, up-left and up-right; V = 2 mod 3 is the
mirror image.  The six directed-edge steps, ordered counterclockwise:

    index   0       1      2        3        4       5
    step  (1,1)   (0,2)  (-1,1)  (-1,-1)  (0,-2)  (1,-1)

For a step arriving at vertex w with direction d, the three cells around w
are exactly the cells at w + (arrival direction) over the three possible
arrivals, so the "front" cell is always w + d.  Front WHITE turns the walk
right (index - 1), front BLACK turns it left (index + 1), which keeps white
cells on the left of the walk and black cells on the right.

The walk enters through the edge shared by the two bottom-row cells and
terminates on reaching the bottom vertex of the edge shared by the two
top-row cells (any interface visit to that vertex must continue out through
that edge).  The emitted polyline starts and ends at the apex points
(0, -1) and (0, +1), the midpoints of those two shared edges, so its first
and last segments are half an edge long; all other segments are full edges.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lattice import Color, Domain, HexCoord
from .prng import Coloring

_DU = (1, 0, -1, -1, 0, 1)
_DV = (1, 2, 1, -1, -2, -1)


class ExplorationError(RuntimeError):
    """Structural failure of the walk; indicates a bug, not a data condition."""


@dataclass
class Walk:
    """Full interface walk in integer coordinates, entry and exit included."""

    domain: Domain
    vertices: list[tuple[int, int]]
    left_cells: list[HexCoord] | None = None
    right_cells: list[HexCoord] | None = None


def _cell_at(domain: Domain, cx: int, cy: int) -> HexCoord:
    row = cy // 3 + domain.n
    if not (0 <= row <= 2 * domain.n) or cy % 3:
        raise ExplorationError(f"front cell ({cx}, {cy}) outside the domain")
    size = domain.row_sizes[row]
    index = (cx + size - 1) // 2
    if not (0 <= index < size) or (cx + size - 1) % 2:
        raise ExplorationError(f"front cell ({cx}, {cy}) outside the domain")
    return HexCoord(row, index)


def _cells_around(u: int, v: int) -> tuple[tuple[int, int], ...]:
    if v % 3 == 1:
        return ((u - 1, v - 1), (u + 1, v - 1), (u, v + 2))
    return ((u - 1, v + 1), (u + 1, v + 1), (u, v - 2))


def _edge_sides(domain: Domain, t: tuple[int, int], w: tuple[int, int]) -> tuple[HexCoord, HexCoord]:
    """(left, right) cells flanking the directed edge t -> w."""
    flank = set(_cells_around(*t)) & set(_cells_around(*w))
    assert len(flank) == 2
    dx, dy = w[0] - t[0], w[1] - t[1]
    left = right = None
    for cx, cy in flank:
        cross = dx * (cy - t[1]) - dy * (cx - t[0])
        if cross > 0:
            left = _cell_at(domain, cx, cy)
        else:
            right = _cell_at(domain, cx, cy)
    assert left is not None and right is not None
    return left, right


def trace_walk(domain: Domain, coloring: Coloring, record_cells: bool = False) -> Walk:
    """Run the interface walk; with record_cells, also keep per-edge flanks."""
    n = domain.n
    rows = coloring.rows
    sizes = domain.row_sizes
    exit_v = 3 * n - 1
    max_steps = 3 * domain.num_cells

    u, v = 0, 1 - 3 * n
    d = 1
    verts = [(0, -3 * n - 1), (u, v)]
    steps = 0
    while not (u == 0 and v == exit_v):
        cx, cy = u + _DU[d], v + _DV[d]
        row = cy // 3 + n
        if not (0 <= row <= 2 * n) or cy % 3:
            raise ExplorationError(f"front cell ({cx}, {cy}) outside the domain")
        size = sizes[row]
        idx2 = cx + size - 1
        index = idx2 >> 1
        if idx2 & 1 or not (0 <= index < size):
            raise ExplorationError(f"front cell ({cx}, {cy}) outside the domain")
        if rows[row][index]:
            d = (d + 1) % 6
        else:
            d = (d - 1) % 6
        u += _DU[d]
        v += _DV[d]
        verts.append((u, v))
        steps += 1
        if steps > max_steps:
            raise ExplorationError(f"walk exceeded {max_steps} steps")
    verts.append((0, 3 * n + 1))

    walk = Walk(domain, verts)
    if record_cells:
        sides = [_edge_sides(domain, t, w) for t, w in zip(verts, verts[1:])]
        walk.left_cells = [s[0] for s in sides]
        walk.right_cells = [s[1] for s in sides]
    return walk


def polyline_of(walk: Walk) -> np.ndarray:
    """Apex-to-apex polyline: apex midpoints plus every interior lattice vertex."""
    n = walk.domain.n
    inner = walk.vertices[1:-1]
    pts = np.empty((len(inner) + 2, 2), dtype=np.float64)
    pts[0] = (0.0, -1.0)
    pts[-1] = (0.0, 1.0)
    iv = np.asarray(inner, dtype=np.float64)
    pts[1:-1, 0] = iv[:, 0] * (0.5 * walk.domain.scale)
    pts[1:-1, 1] = iv[:, 1] / (3.0 * n)
    return pts


def trace(domain: Domain, coloring: Coloring) -> np.ndarray:
    """Exploration path of a coloring as an (L, 2) float array.

    White cells lie to the left of the directed path, black cells to the
    right; the first point is the bottom apex (0, -1), the last the top apex
    (0, +1).
    """
    return polyline_of(trace_walk(domain, coloring))
