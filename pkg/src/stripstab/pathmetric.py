"""Distance between polylines via monotone couplings, plus simplification.

``dp_distance`` minimizes, over all monotone couplings of the two vertex
sequences, the maximum pointwise Euclidean distance.  It is evaluated by
rolling one dynamic-programming row along antidiagonals of the coupling
lattice, O(M*N) time and O(min(M, N)) memory.  ``brute_distance`` is the
independent test oracle: it enumerates every coupling outright.

Both routines compare squared distances and take a single square root at
the end; max/min only ever select values, so the result is bit-identical
to applying the square root per pair.
"""
from __future__ import annotations

import math

import numpy as np

# Largest finite double as the out-of-range sentinel; it may flow through
# max() but never survives the min() that follows (one neighbor is always
# in range).
_BIG = float(np.finfo(np.float64).max)


def _as_points(p) -> np.ndarray:
    pts = np.asarray(p, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) == 0:
        raise ValueError("polyline must be a nonempty sequence of 2-D points")
    return pts


def simplify(a, eps: float) -> np.ndarray:
    """Greedy subsequence: drop points within eps of the last kept point.

    Keeps the first point; from each kept point the next kept one is the
    first later point farther than eps away; the final point is always kept.
    """
    pts = _as_points(a)
    if eps < 0:
        raise ValueError(f"eps must be >= 0, got {eps}")
    n = len(pts)
    eps2 = eps * eps
    x, y = pts[:, 0], pts[:, 1]
    kept = [0]
    anchor = 0
    while anchor < n - 1:
        ax, ay = x[anchor], y[anchor]
        found = -1
        lo = anchor + 1
        window = 32
        while lo < n:
            hi = min(n, lo + window)
            dx = x[lo:hi] - ax
            dy = y[lo:hi] - ay
            far = dx * dx + dy * dy > eps2
            if far.any():
                found = lo + int(np.argmax(far))
                break
            lo = hi
            window *= 2
        if found < 0:
            break
        kept.append(found)
        anchor = found
    if kept[-1] != n - 1:
        kept.append(n - 1)
    return pts[kept]


def dp_distance(a, b) -> float:
    """Minimum over monotone couplings of the running max pointwise distance.

    Not a metric: a sequence is at positive distance from itself whenever it
    has more than one point, because every coupling must pair some vertex
    with an offset one.
    """
    pa = _as_points(a)
    pb = _as_points(b)
    if len(pa) < len(pb):
        pa, pb = pb, pa  # roll the DP row over the shorter sequence
    m, n = len(pa) - 1, len(pb) - 1
    ax, ay = pa[:, 0], pa[:, 1]
    bx, by = pb[:, 0], pb[:, 1]

    d0 = ax[0] - bx[0]
    e0 = ay[0] - by[0]
    if m + n == 0:
        return math.sqrt(d0 * d0 + e0 * e0)

    # row[j] = best running max (squared) with pb-index j on antidiagonal k.
    row = np.full(n + 1, _BIG)
    row[0] = d0 * d0 + e0 * e0
    pad = np.array([_BIG])
    for k in range(1, m + n + 1):
        lo = max(0, k - m)
        hi = min(k, n)
        j = np.arange(lo, hi + 1)
        dx = bx[j] - ax[k - j]
        dy = by[j] - ay[k - j]
        d2 = dx * dx + dy * dy
        same = row[lo:hi + 1]
        prev = row[lo - 1:hi] if lo > 0 else np.concatenate((pad, row[:hi]))
        row[lo:hi + 1] = np.maximum(d2, np.minimum(same, prev))
    return math.sqrt(row[n])


def brute_distance(a, b) -> float:
    """Exhaustive minimum over all couplings; exact but exponential.

    Guards against blowup: requires M + N <= 22 (at most C(22, 11)
    couplings).  Agreement with dp_distance is exact, not approximate.
    """
    pa = _as_points(a)
    pb = _as_points(b)
    m, n = len(pa) - 1, len(pb) - 1
    if m + n > 22:
        raise ValueError(f"brute_distance limited to M + N <= 22, got {m + n}")

    def d2(i: int, j: int) -> float:
        dx = pa[i, 0] - pb[j, 0]
        dy = pa[i, 1] - pb[j, 1]
        return dx * dx + dy * dy

    best = _BIG

    def walk(i: int, j: int, running: float) -> None:
        nonlocal best
        if i == m and j == n:
            best = min(best, running)
            return
        if i < m:
            walk(i + 1, j, max(running, d2(i + 1, j)))
        if j < n:
            walk(i, j + 1, max(running, d2(i, j + 1)))

    walk(0, 0, d2(0, 0))
    return math.sqrt(best)


def path_distance(a, b, eps: float = 0.03) -> float:
    """Production distance: simplify both polylines at eps, then dp_distance."""
    return dp_distance(simplify(a, eps), simplify(b, eps))
