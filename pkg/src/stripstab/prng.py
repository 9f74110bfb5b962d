"""Wichmann-Hill (AS-183) uniforms, per-trial seeding, and coloring draws.

The classic three-generator combination (moduli 30269/30307/30323,
multipliers 171/172/170) is implemented both as a scalar stepper and as a
chunked vectorized stream; the two produce bit-identical uniforms.  Every
trial owns its own state, seeded by an injective map from
(log2 n, log2 k, trial number), so trials are reproducible in isolation and
in any execution order.

Color convention: u < 0.5 draws WHITE, otherwise BLACK.  Interior cells are
always visited row-major from the bottom row, left to right.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .lattice import Color, Domain, HexCoord

M1, M2, M3 = 30269, 30307, 30323
A1, A2, A3 = 171, 172, 170


class WHState(NamedTuple):
    s1: int
    s2: int
    s3: int


def wh_next(state: WHState) -> tuple[float, WHState]:
    """Advance one step; returns (uniform in [0, 1), new state)."""
    s1 = (A1 * state.s1) % M1
    s2 = (A2 * state.s2) % M2
    s3 = (A3 * state.s3) % M3
    u = (s1 / M1 + s2 / M2 + s3 / M3) % 1.0
    return u, WHState(s1, s2, s3)


def wh_uniforms(state: WHState, count: int) -> tuple[np.ndarray, WHState]:
    """Next ``count`` uniforms as a float64 array, bit-identical to wh_next.

    The three congruential components are advanced independently with
    precomputed multiplier powers; products stay below 30323**2 < 2**63.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    steps = np.arange(1, count + 1, dtype=np.int64)
    out = np.empty(count, dtype=np.float64)
    acc = np.zeros(count, dtype=np.float64)
    s_new = []
    for s, mult, mod in ((state.s1, A1, M1), (state.s2, A2, M2), (state.s3, A3, M3)):
        powers = np.ones(count, dtype=np.int64)
        p = mult
        for bit in range(count.bit_length()):
            mask = (steps >> bit) & 1 == 1
            powers[mask] = powers[mask] * p % mod
            p = p * p % mod
        vals = powers * s % mod
        acc += vals / mod
        s_new.append(int(vals[-1]) if count else s)
    np.mod(acc, 1.0, out=out)
    return out, WHState(*s_new)


def seed_for_trial(n: int, k: int, trial: int, *, strict: bool = True) -> WHState:
    """Injective (n, k, trial) -> state map for the power-of-two grid.

    With ``strict=False`` arbitrary n, k are accepted via a different
    injective encoding (n, k taken mod the state ranges); results are then
    not comparable with the published-grid protocol.
    """
    if trial < 1:
        raise ValueError(f"trial numbers start at 1, got {trial}")
    if strict:
        if n < 1 or n & (n - 1):
            raise ValueError(f"n must be a power of two, got {n}")
        if k < 1 or k & (k - 1):
            raise ValueError(f"k must be a power of two, got {k}")
        s1 = 1 + n.bit_length() - 1
        s2 = 1 + k.bit_length() - 1
    else:
        if n < 1 or k < 1:
            raise ValueError("n and k must be >= 1")
        s1 = 1 + n % (M1 - 1)
        s2 = 1 + k % (M2 - 1)
    return WHState(s1, s2, 1 + (trial - 1) % (M3 - 1))


@dataclass(frozen=True)
class Coloring:
    """Black/white assignment for every cell of a domain.

    ``rows[r][i]`` is the Color value of cell (r, i); row lists are never
    mutated after construction, so colorings can share unchanged rows.
    """

    domain: Domain
    rows: tuple[list[int], ...]

    def color_at(self, c: HexCoord) -> Color:
        return Color(self.rows[c.row][c.index])

    def interior_black_fraction(self) -> float:
        black = total = 0
        for r, row in enumerate(self.rows):
            total += len(row) - 2
            black += sum(row[1:-1])
        return black / total if total else 0.0


def _filled_row(size: int, bits: Iterable[int]) -> list[int]:
    return [Color.WHITE, *bits, Color.BLACK]


def draw_coloring(domain: Domain, state: WHState) -> tuple[Coloring, WHState]:
    """Color the whole domain: boundary fixed, interior one uniform per cell."""
    interior = domain.num_cells - (4 * domain.n + 2)
    u, state = wh_uniforms(state, interior)
    bits = (u >= 0.5).view(np.int8)
    rows = []
    pos = 0
    for size in domain.row_sizes:
        inner = size - 2
        rows.append(_filled_row(size, bits[pos:pos + inner].tolist()))
        pos += inner
    return Coloring(domain, tuple(rows)), state


def redraw_rows(coloring: Coloring, rows: range, state: WHState) -> tuple[Coloring, WHState]:
    """Redraw the interior of the given rows; everything else is shared as-is."""
    domain = coloring.domain
    if len(rows) == 0:
        return coloring, state
    for r in (rows[0], rows[-1]):
        if not 0 <= r <= 2 * domain.n:
            raise ValueError(f"row {r} outside domain with n={domain.n}")
    interior = sum(domain.row_sizes[r] - 2 for r in rows)
    u, state = wh_uniforms(state, interior)
    bits = (u >= 0.5).view(np.int8)
    new_rows = list(coloring.rows)
    pos = 0
    for r in rows:
        inner = domain.row_sizes[r] - 2
        new_rows[r] = _filled_row(domain.row_sizes[r], bits[pos:pos + inner].tolist())
        pos += inner
    return Coloring(domain, tuple(new_rows)), state
