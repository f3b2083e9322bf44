"""Write SVG figures for the named instances and two census trials."""

from __future__ import annotations

import argparse
from pathlib import Path

from radon_svm import instances
from radon_svm.experiments import ExperimentConfig, generate_trial
from radon_svm.plotting import plot_svg
from radon_svm.radon import NotAnSvmSolutionError, classify_configuration, radon_point_from_duals
from radon_svm.svm import train_hard_margin


def _draw(D, path, S=None):
    S = S or train_hard_margin(D)
    try:
        r = radon_point_from_duals(S, D)
    except NotAnSvmSolutionError:
        r = None
    plot_svg(D, S, path, r)
    return S


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figures")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    _draw(instances.two_point(), out / "two_point.svg")
    _draw(instances.three_point(), out / "three_point.svg")
    _draw(instances.parallel_segments(), out / "parallel_segments.svg")
    _draw(instances.redundant_margin_point(), out / "redundant_margin_point.svg")

    D, wrong = instances.wrong_hyperplane_instance()
    _draw(D, out / "wrong_hyperplane.svg", wrong)
    _draw(D, out / "correct_hyperplane.svg")

    # first census trials at a = 10 with two and with three support vectors
    cfg = ExperimentConfig(a=10, seed=args.seed)
    wanted = {2: None, 3: None}
    t = 0
    while any(v is None for v in wanted.values()) and t < 200:
        D = generate_trial(cfg, t)
        S = train_hard_margin(D)
        k = len(classify_configuration(S, D).support)
        if k in wanted and wanted[k] is None:
            wanted[k] = t
            _draw(D, out / f"census_{k}sv_trial{t}.svg", S)
        t += 1
    for p in sorted(out.glob("*.svg")):
        print(p)


if __name__ == "__main__":
    main()
