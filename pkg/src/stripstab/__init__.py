"""Monte Carlo lab for the strip-resampling stability of critical
percolation exploration paths on the two-triangle hexagon domain."""

from .lattice import Color, Domain, HexCoord, build_domain, hex_center, resample_rows
from .prng import Coloring, WHState, draw_coloring, redraw_rows, seed_for_trial, wh_next
from .explorer import ExplorationError, trace, trace_walk
from .pathmetric import brute_distance, dp_distance, path_distance, simplify
from .experiment import (
    GridConfig,
    PowerLawFit,
    SampleStats,
    TrialResult,
    fit_power_law,
    median,
    paper_grid,
    run_grid,
    run_sample,
    run_trial,
    run_trials,
)

__all__ = [
    "Color", "Domain", "HexCoord", "build_domain", "hex_center", "resample_rows",
    "Coloring", "WHState", "draw_coloring", "redraw_rows", "seed_for_trial", "wh_next",
    "ExplorationError", "trace", "trace_walk",
    "brute_distance", "dp_distance", "path_distance", "simplify",
    "GridConfig", "PowerLawFit", "SampleStats", "TrialResult",
    "fit_power_law", "median", "paper_grid", "run_grid", "run_sample",
    "run_trial", "run_trials",
]

__version__ = "0.1.0"
