"""Command-line front end.

Subcommands load JSON game configs and strategy profiles, run the solvers
or the simulator, and emit CSV (curves, sweeps, estimates) or JSON
(equilibrium reports).  Exit codes are part of the contract so shell
pipelines can branch:

    0  success
    1  verification negative (candidate profile is not an equilibrium)
    2  malformed JSON (diagnostics carry line and column)
    3  domain violation (bad indices, ranges, missing files, bad tolerances)
    4  numerical failure

All output is deterministic given the arguments and seed; repeated runs
produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .equilibrium import solve_sequential, solve_symmetric_uniform, verify_nash
from .errors import DomainError, NumericError
from .monte_carlo import (
    SimConfig,
    estimate_expected_utility,
    estimate_success_probability,
    write_estimates_csv,
)
from .strategy import GameConfig, StrategyProfile
from .success import success_curve


@dataclass(frozen=True)
class RunManifest:
    """Everything one command run depends on."""

    command: str
    config_path: str | None = None
    profile_path: str | None = None
    out_path: str | None = None
    seed: int = 0
    tol: float | None = None
    grid: int = 1001

    def __post_init__(self):
        for path in (self.config_path, self.profile_path):
            if path is not None and not Path(path).is_file():
                raise DomainError(f"no such file: {path}")
        if self.tol is not None and self.tol <= 0:
            raise DomainError(f"tolerance must be positive, got {self.tol!r}")
        if self.grid < 2:
            raise DomainError(f"grid must be >= 2, got {self.grid}")


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _open_out(path: str | None):
    return open(path, "w") if path else sys.stdout


def _write(out_path: str | None, text: str):
    fh = _open_out(out_path)
    try:
        fh.write(text)
    finally:
        if out_path:
            fh.close()


def cmd_success_curve(args) -> int:
    manifest = RunManifest(
        command="success-curve",
        config_path=args.config,
        profile_path=args.profile,
        out_path=args.out,
        grid=args.grid,
    )
    cfg = GameConfig.from_spec(_load_json(manifest.config_path))
    profile = StrategyProfile.from_spec(_load_json(manifest.profile_path), cfg.radius)
    curve = success_curve(profile, cfg, args.node, grid_size=manifest.grid)
    fh = _open_out(manifest.out_path)
    try:
        curve.write_csv(fh)
    finally:
        if manifest.out_path:
            fh.close()
    return 0


def cmd_cutoff_sweep(args) -> int:
    manifest = RunManifest(command="cutoff-sweep", out_path=args.out)
    n_list = [int(x) for x in args.n_list.split(",") if x]
    if args.c_list:
        c_grid = [float(x) for x in args.c_list.split(",") if x]
    else:
        c_grid = [float(c) for c in np.linspace(args.c_min, args.c_max, args.c_count)]
    if any(c <= 0 for c in c_grid):
        raise DomainError("costs in the sweep must be positive")
    lines = ["n,c,d_star\n"]
    for n in n_list:
        for c in c_grid:
            lines.append(f"{n},{c!r},{solve_symmetric_uniform(n, c, args.radius)!r}\n")
    _write(manifest.out_path, "".join(lines))
    return 0


def cmd_equilibrium(args) -> int:
    manifest = RunManifest(
        command="equilibrium", config_path=args.config, out_path=args.out, tol=args.tol
    )
    cfg = GameConfig.from_spec(_load_json(manifest.config_path))
    report = solve_sequential(cfg, tol=manifest.tol)
    _write(manifest.out_path, json.dumps(report.as_dict(), indent=2) + "\n")
    return 0 if report.is_nash else 1


def cmd_verify(args) -> int:
    manifest = RunManifest(
        command="verify",
        config_path=args.config,
        profile_path=args.profile,
        out_path=args.out,
        tol=args.tol,
    )
    cfg = GameConfig.from_spec(_load_json(manifest.config_path))
    profile = StrategyProfile.from_spec(_load_json(manifest.profile_path), cfg.radius)
    report = verify_nash(profile, cfg, tol=manifest.tol)
    _write(manifest.out_path, json.dumps(report.as_dict(), indent=2) + "\n")
    return 0 if report.is_nash else 1


def cmd_simulate(args) -> int:
    manifest = RunManifest(
        command="simulate",
        config_path=args.config,
        profile_path=args.profile,
        out_path=args.out,
        seed=args.seed,
    )
    cfg = GameConfig.from_spec(_load_json(manifest.config_path))
    profile = StrategyProfile.from_spec(_load_json(manifest.profile_path), cfg.radius)
    sim = SimConfig(samples=args.samples, seed=manifest.seed)
    if args.quantity == "utility":
        est = estimate_expected_utility(profile, cfg, args.node, args.d, sim)
    else:
        est = estimate_success_probability(profile, cfg, args.node, args.d, sim)
    fh = _open_out(manifest.out_path)
    try:
        write_estimates_csv([args.d], [est], fh)
    finally:
        if manifest.out_path:
            fh.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ragame",
        description="Solvers and simulation for the one-shot random access game "
        "with imperfect location information.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("success-curve", help="emit a node's success-probability curve as CSV")
    p.add_argument("--config", required=True, help="game config JSON path")
    p.add_argument("--profile", required=True, help="strategy profile JSON path")
    p.add_argument("--node", type=int, required=True, help="node index (0-based)")
    p.add_argument("--grid", type=int, default=1001, help="uniform grid size (default 1001)")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_success_curve)

    p = sub.add_parser(
        "cutoff-sweep",
        help="emit symmetric equilibrium cut-offs over (n, cost) grids as CSV",
    )
    p.add_argument("--n-list", default="2,3,5,10", help="comma-separated node counts")
    p.add_argument("--c-min", type=float, default=0.1)
    p.add_argument("--c-max", type=float, default=10.0)
    p.add_argument("--c-count", type=int, default=100)
    p.add_argument("--c-list", default=None, help="explicit comma-separated costs (overrides range)")
    p.add_argument("--radius", type=float, default=12.0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_cutoff_sweep)

    p = sub.add_parser("equilibrium", help="solve for the cut-off equilibrium, emit JSON report")
    p.add_argument("--config", required=True)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_equilibrium)

    p = sub.add_parser("verify", help="verify a candidate profile; exit 1 if not an equilibrium")
    p.add_argument("--config", required=True)
    p.add_argument("--profile", required=True)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="Monte Carlo estimate at one distance, emit CSV")
    p.add_argument("--config", required=True)
    p.add_argument("--profile", required=True)
    p.add_argument("--node", type=int, required=True)
    p.add_argument("--d", type=float, required=True, help="conditioned distance of the node")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--quantity", choices=("success", "utility"), default="success",
        help="estimate the success probability or the expected utility",
    )
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
              file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NumericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
