"""Support-vector census over a in {5, 10, 20}: counts of 2- and 3-SV trials."""

from __future__ import annotations

import argparse
import json
import time

from radon_svm.experiments import ExperimentConfig, census

REFERENCE = {5.0: 417, 10.0: 632, 20.0: 809}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=None)
    ap.add_argument("--json", metavar="PATH", help="also write all results as JSON")
    args = ap.parse_args()

    rows, dump = [], []
    for a, ref in REFERENCE.items():
        t0 = time.perf_counter()
        res = census(ExperimentConfig(a=a, trials=args.trials, seed=args.seed), workers=args.workers)
        dt = time.perf_counter() - t0
        two, three = res.total_by_sv_count.get(2, 0), res.total_by_sv_count.get(3, 0)
        rows.append((a, two, three, len(res.flagged_trials), res.rejected_trials, ref * args.trials / 1000, dt))
        dump.append(res.to_dict())

    print(f"{'a':>5} {'2 SV':>6} {'3 SV':>6} {'flagged':>8} {'rejected':>9} {'reference 2 SV':>15} {'time':>7}")
    for a, two, three, fl, rej, ref, dt in rows:
        print(f"{a:5g} {two:6d} {three:6d} {fl:8d} {rej:9d} {ref:15.0f} {dt:6.1f}s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"schema": 1, "runs": dump}, fh, indent=2)


if __name__ == "__main__":
    main()
