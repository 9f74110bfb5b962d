"""Rhombic domain of hexagonal cells: two equilateral triangles glued along
their shared base (the "equator").

Conventions fixed here and relied on everywhere else:

* The domain for size parameter ``n`` has ``2n + 1`` horizontal rows of
  hexagons, indexed from the bottom; row ``r`` holds
  ``min(r, 2n - r) + 2`` cells indexed left to right, so the row sizes read
  2, 3, ..., n+1, n+2, n+1, ..., 3, 2 and the equator is row ``n``.
* Cells are pointy-top hexagons whose centers form a triangular lattice with
  nearest-neighbor spacing ``scale = 2 / (sqrt(3) * n)``: within a row the
  centers are ``scale`` apart, consecutive rows sit ``scale * sqrt(3) / 2``
  higher and are offset horizontally by ``scale / 2``.
* The unit of length makes the domain diameter 2: the bottom and top apex
  points sit at (0, -1) and (0, +1).  Each apex is the midpoint of the
  vertical edge shared by the two cells of the adjacent size-2 row, which
  puts the extreme rows' centers at height -1 and +1 exactly.
* The first and last cell of every row are boundary cells; index 0 is the
  LEFT (white) side, the last index the RIGHT (black) side.  Size-2 rows
  contribute one cell to each side.

Integer cell addressing used by the geometry (and by the path tracer): cell
``(row, index)`` has its center at ``(2*index - rowsize + 1, 3*(row - n))``
in half-spacing / half-edge units, i.e. multiply by ``(scale/2, edge/2)``
with ``edge = scale / sqrt(3)`` to get Euclidean coordinates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterator, NamedTuple


class Color(IntEnum):
    WHITE = 0
    BLACK = 1


class HexCoord(NamedTuple):
    """Cell address: row counted from the bottom, index from the left."""

    row: int
    index: int


class Point(NamedTuple):
    x: float
    y: float


def row_size(n: int, row: int) -> int:
    """Number of cells in a row of the size-``n`` domain."""
    return min(row, 2 * n - row) + 2


@dataclass(frozen=True)
class Domain:
    """Immutable description of the rhombic domain; safe to share freely."""

    n: int
    row_sizes: tuple[int, ...]
    scale: float

    @property
    def num_rows(self) -> int:
        return 2 * self.n + 1

    @property
    def num_cells(self) -> int:
        return self.n * self.n + 4 * self.n + 2

    @property
    def edge(self) -> float:
        """Side length of one hexagon."""
        return self.scale / math.sqrt(3.0)

    @property
    def bottom_apex(self) -> Point:
        return Point(0.0, -1.0)

    @property
    def top_apex(self) -> Point:
        return Point(0.0, 1.0)

    def cells(self) -> Iterator[HexCoord]:
        """All cells in canonical order: row-major, bottom row first."""
        for row, size in enumerate(self.row_sizes):
            for index in range(size):
                yield HexCoord(row, index)

    def is_valid(self, c: HexCoord) -> bool:
        return 0 <= c.row <= 2 * self.n and 0 <= c.index < self.row_sizes[c.row]

    def is_boundary(self, c: HexCoord) -> bool:
        return c.index == 0 or c.index == self.row_sizes[c.row] - 1

    def boundary_color(self, c: HexCoord) -> Color:
        """Deterministic color of a boundary cell (LEFT white, RIGHT black)."""
        if c.index == 0:
            return Color.WHITE
        if c.index == self.row_sizes[c.row] - 1:
            return Color.BLACK
        raise ValueError(f"{c} is not a boundary cell")

    def boundary_cells(self) -> Iterator[HexCoord]:
        for row, size in enumerate(self.row_sizes):
            yield HexCoord(row, 0)
            yield HexCoord(row, size - 1)

    def interior_row_count(self, row: int) -> int:
        return self.row_sizes[row] - 2


def build_domain(n: int) -> Domain:
    """Construct the ``2n + 1``-row rhombic domain, diameter normalized to 2."""
    if n < 1:
        raise ValueError(f"domain size must be >= 1, got {n}")
    sizes = tuple(row_size(n, r) for r in range(2 * n + 1))
    return Domain(n=n, row_sizes=sizes, scale=2.0 / (math.sqrt(3.0) * n))


def hex_center(domain: Domain, c: HexCoord) -> Point:
    """Euclidean center of a cell; rejects coordinates outside the domain."""
    c = HexCoord(*c)
    if not (0 <= c.row <= 2 * domain.n):
        raise ValueError(f"row {c.row} outside domain with n={domain.n}")
    size = domain.row_sizes[c.row]
    if not (0 <= c.index < size):
        raise ValueError(f"index {c.index} outside row of size {size}")
    # Integer lattice coordinates keep left/right mirror pairs exactly opposite.
    x = (2 * c.index - size + 1) * (0.5 * domain.scale)
    y = (c.row - domain.n) / domain.n
    return Point(x, y)


def resample_rows(n: int, k: int) -> range:
    """Contiguous block of k row indices centered on the equator.

    Odd k is symmetric about row n; even k takes one extra row above it.
    """
    if n < 1:
        raise ValueError(f"domain size must be >= 1, got {n}")
    if not 1 <= k <= 2 * n + 1:
        raise ValueError(f"k must be in [1, {2 * n + 1}], got {k}")
    return range(n - (k - 1) // 2, n + k // 2 + 1)
