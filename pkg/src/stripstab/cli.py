"""Command-line front end: grid tables, single trials with SVG renders, fits.

Exit codes: 0 success, 1 I/O failure, 2 bad flags, 3 degenerate regression.
CSV schema for tables: header ``n,k,trials,median,msd,eps_strip``, six
significant digits, LF line endings.  All output is deterministic
byte-for-byte for fixed flags, including across --threads values.
"""
from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from typing import Sequence

from . import experiment
from .experiment import GridConfig, SampleStats, TrialResult, fit_power_law, paper_grid
from .explorer import Walk, trace_walk, polyline_of
from .lattice import Domain, HexCoord, hex_center
from .prng import Coloring

_SVG_UNIT = 500.0  # svg user units per world unit (domain height -> 1000)

TABLE_HEADER = "n,k,trials,median,msd,eps_strip"
TRIAL_HEADER = "n,k,trial,distance,first_len,second_len"
FIT_HEADER = "alpha,prefactor,r2"


def _g(v: float) -> str:
    return f"{v:.6g}"


def format_table_csv(stats: Sequence[SampleStats]) -> str:
    lines = [TABLE_HEADER]
    for s in stats:
        lines.append(f"{s.n},{s.k},{s.trials},{_g(s.median)},{_g(s.msd)},{_g(s.eps_strip)}")
    return "\n".join(lines) + "\n"


def format_table_markdown(stats: Sequence[SampleStats]) -> str:
    """Published-table layout: one row per k, one column per n, blanks elsewhere."""
    ns = sorted({s.n for s in stats})
    ks = sorted({s.k for s in stats})
    cell = {(s.n, s.k): s.median for s in stats}
    lines = ["| k \\ n | " + " | ".join(str(n) for n in ns) + " |",
             "|---" * (len(ns) + 1) + "|"]
    for k in ks:
        row = [f"{cell[(n, k)]:.2f}" if (n, k) in cell else "" for n in ns]
        lines.append(f"| {k} | " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"


def format_trial_csv(r: TrialResult) -> str:
    return (TRIAL_HEADER + "\n"
            + f"{r.n},{r.k},{r.trial},{_g(r.distance)},{r.first_len},{r.second_len}\n")


# ---------------------------------------------------------------------------
# SVG rendering


@dataclass(frozen=True)
class RenderSpec:
    """What to draw for one trial and where to crop."""

    n: int
    k: int
    trial: int
    eps: float = 0.03
    clip: tuple[float, float] | None = None  # world-coordinate (y0, y1) band


def _hex_corners(domain: Domain, c: HexCoord) -> list[tuple[float, float]]:
    size = domain.row_sizes[c.row]
    cx = 2 * c.index - size + 1
    cy = 3 * (c.row - domain.n)
    corners = [(cx + 1, cy + 1), (cx, cy + 2), (cx - 1, cy + 1),
               (cx - 1, cy - 1), (cx, cy - 2), (cx + 1, cy - 1)]
    half = 0.5 * domain.scale
    third = 3.0 * domain.n
    return [(u * half, v / third) for u, v in corners]


def _svg_xy(x: float, y: float) -> str:
    return f"{x * _SVG_UNIT:.3f},{-y * _SVG_UNIT:.3f}"


def render_trial_svg(domain: Domain, coloring: Coloring, walk1: Walk,
                     path1, path2, clip: tuple[float, float] | None = None) -> str:
    """SVG of the cells touched by path 1 plus both paths (path 2 dashed)."""
    assert walk1.left_cells is not None and walk1.right_cells is not None
    edge = domain.edge
    half_w = 0.5 * (domain.row_sizes[domain.n] + 1) * domain.scale + edge
    if clip is None:
        y_lo, y_hi = -1.0 - 2 * edge, 1.0 + 2 * edge
    else:
        y_lo, y_hi = clip
    x0 = -half_w * _SVG_UNIT
    y0 = -y_hi * _SVG_UNIT
    width = 2 * half_w * _SVG_UNIT
    height = (y_hi - y_lo) * _SVG_UNIT

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{x0:.3f} {y0:.3f} {width:.3f} {height:.3f}">',
        '<defs><clipPath id="frame">'
        f'<rect x="{x0:.3f}" y="{y0:.3f}" width="{width:.3f}" height="{height:.3f}"/>'
        '</clipPath></defs>',
        '<g clip-path="url(#frame)">',
    ]

    cells = sorted(set(walk1.left_cells) | set(walk1.right_cells))
    outline = f"{0.06 * edge * _SVG_UNIT:.3f}"
    for c in cells:
        pts = " ".join(_svg_xy(x, y) for x, y in _hex_corners(domain, c))
        if coloring.rows[c.row][c.index]:
            out.append(f'<polygon points="{pts}" fill="black" stroke="black" '
                       f'stroke-width="{outline}"/>')
        else:
            out.append(f'<polygon points="{pts}" fill="white" stroke="#999999" '
                       f'stroke-width="{outline}"/>')

    stroke = f"{0.22 * edge * _SVG_UNIT:.3f}"
    dash = f"{0.9 * edge * _SVG_UNIT:.3f},{0.55 * edge * _SVG_UNIT:.3f}"
    p1 = " ".join(_svg_xy(x, y) for x, y in path1)
    p2 = " ".join(_svg_xy(x, y) for x, y in path2)
    out.append(f'<polyline points="{p1}" fill="none" stroke="black" '
               f'stroke-width="{stroke}"/>')
    out.append(f'<polyline points="{p2}" fill="none" stroke="black" '
               f'stroke-width="{stroke}" stroke-dasharray="{dash}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_trial(spec: RenderSpec) -> str:
    """Re-run the trial of the spec and render it."""
    domain, first, second = experiment._trial_colorings(spec.n, spec.k, spec.trial)
    walk1 = trace_walk(domain, first, record_cells=True)
    path1 = polyline_of(walk1)
    path2 = polyline_of(trace_walk(domain, second))
    return render_trial_svg(domain, first, walk1, path1, path2, clip=spec.clip)


# ---------------------------------------------------------------------------
# commands


def _write_out(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_table(args: argparse.Namespace) -> int:
    if args.paper_grid:
        config = paper_grid(full=args.full, trials=args.trials, eps=args.eps)
    else:
        if not args.n_list or not args.k_list:
            print("table: --n-list and --k-list are required without --paper-grid",
                  file=sys.stderr)
            return 2
        config = GridConfig(
            n_list=tuple(args.n_list), k_list=tuple(args.k_list),
            trials=args.trials, eps=args.eps,
            max_strip=None if args.all_pairs else 1.0 / 16.0,
        )
    stats = experiment.run_grid(config, workers=args.threads)
    text = format_table_markdown(stats) if args.format == "markdown" else format_table_csv(stats)
    try:
        _write_out(args.out, text)
    except OSError as exc:
        print(f"table: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_trial(args: argparse.Namespace) -> int:
    if args.pick == "median":
        results = experiment.run_trials(args.n, args.k, args.trials, args.eps,
                                        workers=args.threads)
        ordered = sorted(results, key=lambda r: (r.distance, r.trial))
        result = ordered[(len(ordered) - 1) // 2]
    else:
        result = experiment.run_trial(args.n, args.k, args.trial, args.eps)
    try:
        _write_out(args.out, format_trial_csv(result))
        if args.render:
            spec = RenderSpec(n=args.n, k=args.k, trial=result.trial,
                              eps=args.eps, clip=args.clip)
            with open(args.render, "w", encoding="utf-8", newline="") as fh:
                fh.write(render_trial(spec))
    except OSError as exc:
        print(f"trial: cannot write output: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_fit(args: argparse.Namespace) -> int:
    try:
        with open(args.input, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            rows = list(reader)
    except OSError as exc:
        print(f"fit: cannot read {args.input}: {exc}", file=sys.stderr)
        return 1
    try:
        stats = [
            SampleStats(n=int(r["n"]), k=int(r["k"]), trials=int(r.get("trials", 0) or 0),
                        median=float(r["median"]), msd=float(r.get("msd", 0) or 0),
                        eps_strip=int(r["k"]) / int(r["n"]))
            for r in rows
        ]
        fit = fit_power_law(stats)
    except (KeyError, TypeError, ValueError) as exc:
        print(f"fit: degenerate or malformed input: {exc}", file=sys.stderr)
        return 3
    _write_out(args.out, FIT_HEADER + "\n"
               + f"{fit.alpha:.9g},{fit.prefactor:.9g},{fit.r2:.9g}\n")
    return 0


def _clip_band(text: str) -> tuple[float, float]:
    try:
        lo, hi = text.split(":")
        band = (float(lo), float(hi))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected y0:y1, got {text!r}")
    if band[0] >= band[1]:
        raise argparse.ArgumentTypeError(f"empty clip band {text!r}")
    return band


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stripstab",
        description="Equatorial-strip resampling experiment on critical percolation paths.")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="run a grid of samples and tabulate medians")
    table.add_argument("--n-list", type=int, nargs="+", help="domain sizes")
    table.add_argument("--k-list", type=int, nargs="+", help="resampled row counts")
    table.add_argument("--trials", type=int, default=250)
    table.add_argument("--eps", type=float, default=0.03)
    table.add_argument("--out", default="-", help="output file (default stdout)")
    table.add_argument("--format", choices=("csv", "markdown"), default="csv")
    table.add_argument("--threads", type=int, default=1)
    table.add_argument("--paper-grid", action="store_true",
                       help="use the published n/k lists (n <= 256 unless --full)")
    table.add_argument("--full", action="store_true",
                       help="with --paper-grid: include the n = 512 and 1024 columns")
    table.add_argument("--all-pairs", action="store_true",
                       help="keep every pair with k <= 2n+1 instead of the table pattern")
    table.set_defaults(func=cmd_table)

    trial = sub.add_parser("trial", help="run one trial, optionally render it")
    trial.add_argument("--n", type=int, required=True)
    trial.add_argument("--k", type=int, required=True)
    pick = trial.add_mutually_exclusive_group(required=True)
    pick.add_argument("--trial", type=int, help="trial number to run")
    pick.add_argument("--pick", choices=("median",),
                      help="run a whole sample and pick its median trial")
    trial.add_argument("--trials", type=int, default=250,
                       help="sample size used with --pick")
    trial.add_argument("--eps", type=float, default=0.03)
    trial.add_argument("--out", default="-")
    trial.add_argument("--render", metavar="FILE.svg", help="write an SVG of the trial")
    trial.add_argument("--clip", type=_clip_band, metavar="Y0:Y1",
                       help="vertical world-coordinate band to crop the render to")
    trial.add_argument("--threads", type=int, default=1)
    trial.set_defaults(func=cmd_trial)

    fit = sub.add_parser("fit", help="fit median ~ c * (k/n)^alpha from a table CSV")
    fit.add_argument("--input", required=True, help="CSV with n, k and median columns")
    fit.add_argument("--out", default="-")
    fit.set_defaults(func=cmd_fit)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
