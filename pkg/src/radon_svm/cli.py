"""Command-line entry point: ``radon-svm <command> [input.csv] [flags]``.

Exit status: 0 on success, 1 on a domain error (non-separable data,
degenerate input), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from .experiments import ExperimentConfig, census
from .geometry import radon_partition
from .io import SCHEMA_VERSION, DataFormatError, jsonable, parse_csv
from .numerics import DegenerateHyperplaneError, SingularSystemError
from .plotting import PlotDimensionError, plot_svg
from .radon import (NotAnSvmSolutionError, classify_configuration, precision_audit,
                    radon_point_from_duals, shatter_check)
from .svm import (DEFAULT_MAX_ITER, DEFAULT_TAU, DEFAULT_TOL, NotSeparableError, TrainingError,
                  train_hard_margin)

COMMANDS = ("train", "radon", "analyze", "shatter", "census", "audit")
DATA_COMMANDS = frozenset(COMMANDS) - {"census"}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str | None = None
    output_format: str = "json"
    plot_path: str | None = None
    tol: float = DEFAULT_TOL
    tau: float | None = None
    seed: int = 0
    trials: int = 1000
    a: float = 10.0
    points_per_class: int = 20
    dim: int = 2
    max_iter: int = DEFAULT_MAX_ITER
    workers: int | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.command in DATA_COMMANDS and not self.input_path:
            raise UsageError(f"{self.command} needs an input CSV")
        if self.command == "census" and self.input_path:
            raise UsageError("census takes no input file")
        if self.output_format not in ("json", "csv"):
            raise UsageError("--format must be json or csv")
        if self.plot_path and self.command in ("census", "radon", "shatter"):
            raise UsageError(f"--plot is not available for {self.command}")
        if self.tol <= 0 or (self.tau is not None and self.tau <= 0) or self.max_iter < 1:
            raise UsageError("--tol, --tau and --max-iter must be positive")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="radon-svm", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", nargs="?", help="dataset CSV with header y,x1,...,xn ('-' for stdin)")
    p.add_argument("--format", dest="output_format", choices=("json", "csv"), default="json")
    p.add_argument("--plot", dest="plot_path", metavar="PATH", help="write an SVG figure (2-D data only)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--tau", type=float, default=None, help="support-vector resolution")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--a", type=float, default=10.0, help="half-width of the centre square")
    p.add_argument("--points-per-class", type=int, default=20)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p.add_argument("--workers", type=int, default=None, help="census processes (capped by RADON_SVM_THREADS)")
    return p


def _load(path: str):
    if path == "-":
        return parse_csv(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_csv(text)


def _solution_dict(S) -> dict:
    return {"w": S.w, "b": S.b, "margin": S.margin, "alphas": S.alphas,
            "support_indices": list(S.support_indices), "iterations": S.iterations}


def _train(cfg: RunConfig, D):
    return train_hard_margin(D, tol=cfg.tol, max_iter=cfg.max_iter)


def execute(cfg: RunConfig) -> tuple[dict, list[dict] | None]:
    """Run one command; returns the JSON report and optional per-row CSV records."""
    if cfg.command == "census":
        ecfg = ExperimentConfig(a=cfg.a, points_per_class=cfg.points_per_class, dim=cfg.dim,
                                trials=cfg.trials, seed=cfg.seed, tol=cfg.tol)
        res = census(ecfg, workers=cfg.workers)
        rows = [{"trial": r.trial, "n_pos_sv": r.n_pos_sv, "n_neg_sv": r.n_neg_sv,
                 "margin": r.margin, "flags": ";".join(r.flags)} for r in res.records]
        return res.to_dict(), rows

    D = _load(cfg.input_path)
    if cfg.command == "radon":
        cert = radon_partition(D.points)
        return {"coefficients": cert.coefficients, "part_one": list(cert.part_one),
                "part_two": list(cert.part_two), "radon_point": cert.radon_point,
                "scale": cert.scale, "degenerate": cert.degenerate}, None
    if cfg.command == "shatter":
        v = shatter_check(D.points)
        return {"shattered": v.ok, "witness_labeling": None if v.ok else list(v.witness),
                "n_points": len(D), "dim": D.dim}, None

    D.check_both_classes()
    S = _train(cfg, D)
    report: dict = {}
    radon_pt = None
    if cfg.command == "train":
        report = _solution_dict(S)
    elif cfg.command == "analyze":
        rep = classify_configuration(S, D, cfg.tau)
        radon_pt = rep.radon_point
        report = {"solution": _solution_dict(S), "n_pos_sv": rep.n_pos_sv, "n_neg_sv": rep.n_neg_sv,
                  "support": list(rep.support), "dual_support": list(rep.dual_support),
                  "radon_point": rep.radon_point, "hulls_intersect": rep.hulls_intersect,
                  "unique_point": rep.unique_point, "general_position": rep.general_position,
                  "strong_gp_condition_i": rep.strong_gp_condition_i,
                  "strong_gp_condition_ii": rep.strong_gp_condition_ii,
                  "strong_general_position": rep.strong_general_position,
                  "exceeds_bound": rep.exceeds_bound, "degeneracy_flags": list(rep.degeneracy_flags)}
    elif cfg.command == "audit":
        au = precision_audit(S, D, cfg.tau)
        report = {"n_support": au.n_support, "bound": au.bound, "exceeds_bound": au.exceeds_bound,
                  "cause": au.cause, "co_marginal": au.co_marginal,
                  "co_margin_residual": au.co_margin_residual, "general_position": au.general_position,
                  "condition_i": au.condition_i, "condition_ii": au.condition_ii,
                  "recommended_tol": au.recommended_tol, "notes": list(au.notes)}
    if cfg.plot_path:
        if radon_pt is None:
            try:
                radon_pt = radon_point_from_duals(S, D)
            except NotAnSvmSolutionError:
                radon_pt = None
        plot_svg(D, S, cfg.plot_path, radon_pt)
    return report, None


def _flatten(d: dict, prefix: str = "") -> list[tuple[str, object]]:
    out = []
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.extend(_flatten(v, key + "."))
        elif isinstance(v, list):
            out.append((key, " ".join("" if x is None else str(x) for x in v)))
        else:
            out.append((key, "" if v is None else v))
    return out


def render(cfg: RunConfig, report: dict, rows: list[dict] | None) -> str:
    if cfg.output_format == "json":
        return json.dumps({"schema": SCHEMA_VERSION, "command": cfg.command, **jsonable(report)}, indent=2) + "\n"
    if rows is not None:
        lines = ["trial,n_pos_sv,n_neg_sv,margin,flags"]
        for r in jsonable(rows):
            m = "" if r["margin"] is None else repr(r["margin"])
            lines.append(f'{r["trial"]},{r["n_pos_sv"]},{r["n_neg_sv"]},{m},"{r["flags"]}"')
        return "\n".join(lines) + "\n"
    lines = ["key,value"] + [f'{k},"{v}"' for k, v in _flatten(jsonable(report))]
    return "\n".join(lines) + "\n"


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        report, rows = execute(cfg)
    except (DataFormatError, UsageError, PlotDimensionError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except (NotSeparableError, DegenerateHyperplaneError, SingularSystemError,
            NotAnSvmSolutionError, TrainingError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    except ValueError as exc:
        # remaining ValueErrors come from domain preconditions (too few points, one class, ...)
        print(f"error: {exc}", file=err)
        return 1
    out.write(render(cfg, report, rows))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(command=args.command, input_path=args.input, output_format=args.output_format,
                        plot_path=args.plot_path, tol=args.tol, tau=args.tau, seed=args.seed,
                        trials=args.trials, a=args.a, points_per_class=args.points_per_class,
                        dim=args.dim, max_iter=args.max_iter, workers=args.workers)
    except UsageError as exc:
        print(f"radon-svm: error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
