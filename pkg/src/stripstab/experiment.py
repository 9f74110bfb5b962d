"""Trial engine: run resampling trials, aggregate medians, fit the power law.

A trial is a pure function of (n, k, trial number, eps): seed the generator,
color the domain, trace the exploration path, redraw the k equatorial rows,
trace again, and measure the coupled-walk distance between the two paths.
Trials are independent work units; a sample farms them out to worker
processes and aggregates in trial order, so results are bit-identical
regardless of worker count.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache, partial
from typing import Iterable, Sequence

import numpy as np

from .explorer import trace
from .lattice import Domain, build_domain, resample_rows
from .pathmetric import path_distance
from .prng import Coloring, draw_coloring, redraw_rows, seed_for_trial

BOOTSTRAP_RESAMPLES = 1000


@dataclass(frozen=True)
class TrialResult:
    n: int
    k: int
    trial: int
    distance: float
    first_len: int
    second_len: int


@dataclass(frozen=True)
class SampleStats:
    n: int
    k: int
    trials: int
    median: float
    msd: float
    eps_strip: float


@dataclass(frozen=True)
class GridConfig:
    """Grid of (n, k) pairs to sample.

    ``max_strip`` keeps only pairs with strip width k/n up to the given
    value; the default 1/16 is the lower-triangular pattern of the published
    table (None admits every pair with k <= 2n + 1).
    """

    n_list: tuple[int, ...]
    k_list: tuple[int, ...]
    trials: int = 250
    eps: float = 0.03
    strict_seed: bool = True
    max_strip: float | None = 1.0 / 16.0

    def pairs(self) -> list[tuple[int, int]]:
        out = []
        for k in sorted(self.k_list):
            for n in sorted(self.n_list):
                if k > 2 * n + 1:
                    continue
                if self.max_strip is not None and k / n > self.max_strip * (1 + 1e-12):
                    continue
                out.append((n, k))
        return out


@lru_cache(maxsize=64)
def _domain(n: int) -> Domain:
    return build_domain(n)


def _trial_colorings(n: int, k: int, trial: int, *, strict_seed: bool = True) -> tuple[Domain, Coloring, Coloring]:
    """Domain plus the before/after colorings of one trial."""
    domain = _domain(n)
    state = seed_for_trial(n, k, trial, strict=strict_seed)
    first, state = draw_coloring(domain, state)
    second, state = redraw_rows(first, resample_rows(n, k), state)
    return domain, first, second


def run_trial(n: int, k: int, trial: int, eps: float = 0.03, *, strict_seed: bool = True) -> TrialResult:
    """One complete trial; deterministic in (n, k, trial, eps)."""
    domain, first, second = _trial_colorings(n, k, trial, strict_seed=strict_seed)
    p1 = trace(domain, first)
    p2 = trace(domain, second)
    return TrialResult(n, k, trial, path_distance(p1, p2, eps), len(p1), len(p2))


def run_trials(n: int, k: int, trials: int, eps: float = 0.03, *,
               workers: int = 1, strict_seed: bool = True) -> list[TrialResult]:
    """Trials 1..trials in trial order, optionally on worker processes."""
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    ids = range(1, trials + 1)
    job = partial(run_trial, n, k, eps=eps, strict_seed=strict_seed)
    if workers <= 1:
        return [job(t) for t in ids]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunk = max(1, trials // (workers * 8))
        return list(pool.map(job, ids, chunksize=chunk))


def median(values: Sequence[float]) -> float:
    """Order-statistic median; even counts average the two central values."""
    if len(values) == 0:
        raise ValueError("median of an empty sequence")
    ordered = sorted(values)
    mid = len(ordered) // 2
    if len(ordered) % 2:
        return ordered[mid]
    return 0.5 * (ordered[mid - 1] + ordered[mid])


def bootstrap_msd(values: Sequence[float], *, resamples: int = BOOTSTRAP_RESAMPLES,
                  seed: int = 0) -> float:
    """Root-mean-square deviation of resampled medians around the median."""
    data = np.asarray(values, dtype=np.float64)
    center = median(values)
    rng = np.random.default_rng(seed)
    idx = rng.integers(0, len(data), size=(resamples, len(data)))
    boot = np.median(data[idx], axis=1)
    return float(np.sqrt(np.mean((boot - center) ** 2)))


def _sample_seed(n: int, k: int, trials: int) -> int:
    return (n * 1_000_003 + k * 1009 + trials) & 0x7FFFFFFF


def run_sample(n: int, k: int, trials: int = 250, eps: float = 0.03, *,
               workers: int = 1, strict_seed: bool = True) -> SampleStats:
    results = run_trials(n, k, trials, eps, workers=workers, strict_seed=strict_seed)
    distances = [r.distance for r in results]
    return SampleStats(
        n=n, k=k, trials=trials,
        median=median(distances),
        msd=bootstrap_msd(distances, seed=_sample_seed(n, k, trials)),
        eps_strip=k / n,
    )


def run_grid(config: GridConfig, *, workers: int = 1) -> list[SampleStats]:
    """One SampleStats per admissible (n, k) pair, sorted by (k, n)."""
    return [
        run_sample(n, k, config.trials, config.eps,
                   workers=workers, strict_seed=config.strict_seed)
        for n, k in config.pairs()
    ]


PAPER_N_FULL = (16, 32, 64, 128, 256, 512, 1024)
PAPER_K = (1, 2, 4, 8, 16, 32)


def paper_grid(full: bool = False, trials: int = 250, eps: float = 0.03) -> GridConfig:
    """The published 27-pair grid; without ``full``, capped at n <= 256."""
    n_list = PAPER_N_FULL if full else tuple(n for n in PAPER_N_FULL if n <= 256)
    return GridConfig(n_list=n_list, k_list=PAPER_K, trials=trials, eps=eps)


@dataclass(frozen=True)
class PowerLawFit:
    alpha: float
    prefactor: float
    r2: float


def fit_power_law(stats: Iterable) -> PowerLawFit:
    """OLS of log(median) on log(k/n): median ~ prefactor * (k/n) ** alpha."""
    pts = [(s.eps_strip, s.median) for s in stats]
    if len(pts) < 3:
        raise ValueError(f"power-law fit needs >= 3 samples, got {len(pts)}")
    if any(m <= 0 for _, m in pts):
        raise ValueError("power-law fit needs positive medians")
    x = np.log([e for e, _ in pts])
    y = np.log([m for _, m in pts])
    sxx = float(np.sum((x - x.mean()) ** 2))
    if sxx == 0.0:
        raise ValueError("degenerate regressor: all k/n equal")
    alpha = float(np.sum((x - x.mean()) * (y - y.mean())) / sxx)
    intercept = float(y.mean() - alpha * x.mean())
    residual = y - (alpha * x + intercept)
    sstot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 if sstot == 0.0 else 1.0 - float(np.sum(residual ** 2)) / sstot
    return PowerLawFit(alpha=alpha, prefactor=math.exp(intercept), r2=r2)
