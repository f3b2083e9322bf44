"""Monte Carlo census of support-vector configurations for random separable data.

Each trial draws two centres uniformly from ``[-a, a]^dim`` and
``points_per_class`` Gaussian points around each; draws that are not linearly
separable are thrown away and the whole trial (centres included) is redrawn.
The trained SVM is then classified by its support-vector split.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .radon import classify_configuration
from .rng import gaussian, trial_generator
from .svm import DEFAULT_TOL, LabeledPointSet, is_linearly_separable, train_hard_margin

THREADS_ENV = "RADON_SVM_THREADS"


class RejectionLimitError(RuntimeError):
    def __init__(self, trial_index: int, limit: int):
        super().__init__(f"separability rejection limit: trial {trial_index} discarded {limit} draws")
        self.trial_index = trial_index


@dataclass(frozen=True)
class ExperimentConfig:
    a: float
    points_per_class: int = 20
    dim: int = 2
    std_dev: float = 1.0
    trials: int = 1000
    seed: int = 0
    max_rejections_per_trial: int = 10_000
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if self.a <= 0 or self.std_dev <= 0 or self.tol <= 0:
            raise ValueError("a, std_dev and tol must be positive")
        if self.points_per_class < 1 or self.dim < 1 or self.trials < 1 or self.max_rejections_per_trial < 1:
            raise ValueError("counts must be at least 1")


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    n_pos_sv: int
    n_neg_sv: int
    margin: float
    rejections: int
    flags: tuple[str, ...] = ()
    failed: bool = False


@dataclass
class CensusResult:
    config: ExperimentConfig
    counts: dict[tuple[int, int], int]
    total_by_sv_count: dict[int, int]
    rejected_trials: int
    failed_trials: list[int] = field(default_factory=list)
    flagged_trials: list[int] = field(default_factory=list)
    records: list[TrialRecord] = field(default_factory=list, repr=False)

    @property
    def completed(self) -> int:
        return sum(self.counts.values())

    def fraction(self, total_sv: int) -> float:
        return self.total_by_sv_count.get(total_sv, 0) / max(1, self.completed)

    def to_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "counts": [{"n_pos_sv": p, "n_neg_sv": q, "trials": c} for (p, q), c in sorted(self.counts.items())],
            "total_by_sv_count": {str(k): v for k, v in sorted(self.total_by_sv_count.items())},
            "two_sv_fraction": self.fraction(2),
            "three_sv_fraction": self.fraction(3),
            "rejected_draws": self.rejected_trials,
            "failed_trials": list(self.failed_trials),
            "flagged_trials": list(self.flagged_trials),
        }


def _draw(cfg: ExperimentConfig, gen: np.random.Generator) -> LabeledPointSet:
    k, d = cfg.points_per_class, cfg.dim
    centres = -cfg.a + 2.0 * cfg.a * gen.random((2, d))
    pts = cfg.std_dev * gaussian(gen, (2 * k, d))
    pts[:k] += centres[0]
    pts[k:] += centres[1]
    return LabeledPointSet(pts, np.r_[np.ones(k, int), -np.ones(k, int)])


def generate_trial(cfg: ExperimentConfig, trial_index: int, return_rejections: bool = False):
    """Separable labelled sample for one trial, fully determined by ``(seed, trial_index)``."""
    gen = trial_generator(cfg.seed, trial_index)
    for rejected in range(cfg.max_rejections_per_trial + 1):
        D = _draw(cfg, gen)
        if is_linearly_separable(D):
            return (D, rejected) if return_rejections else D
    raise RejectionLimitError(trial_index, cfg.max_rejections_per_trial)


def run_trial(cfg: ExperimentConfig, trial_index: int) -> TrialRecord:
    try:
        D, rejected = generate_trial(cfg, trial_index, return_rejections=True)
    except RejectionLimitError:
        return TrialRecord(trial_index, 0, 0, float("nan"), cfg.max_rejections_per_trial, ("rejection limit",), True)
    S = train_hard_margin(D, tol=cfg.tol, check_separable=False)
    rep = classify_configuration(S, D)
    return TrialRecord(trial_index, rep.n_pos_sv, rep.n_neg_sv, S.margin, rejected, tuple(rep.degeneracy_flags))


def _run_chunk(args) -> list[TrialRecord]:
    cfg, indices = args
    return [run_trial(cfg, t) for t in indices]


def worker_count(requested: int | None = None) -> int:
    cap = os.environ.get(THREADS_ENV)
    n = requested if requested is not None else 1
    if cap:
        n = min(n, max(1, int(cap))) if requested is not None else max(1, int(cap))
    return max(1, n)


def census(cfg: ExperimentConfig, workers: int | None = None) -> CensusResult:
    """Tally support-vector splits over ``cfg.trials`` trials.

    Trials run in ``workers`` processes (capped by ``RADON_SVM_THREADS``); the
    tally is identical for any worker count.
    """
    nw = worker_count(workers)
    indices = list(range(cfg.trials))
    if nw == 1:
        records = [run_trial(cfg, t) for t in indices]
    else:
        chunks = [indices[i::nw] for i in range(nw)]
        with ProcessPoolExecutor(max_workers=nw) as pool:
            records = [r for part in pool.map(_run_chunk, [(cfg, c) for c in chunks]) for r in part]
        records.sort(key=lambda r: r.trial)

    counts: Counter = Counter()
    totals: Counter = Counter()
    failed, flagged = [], []
    rejected = 0
    for r in records:
        rejected += r.rejections
        if r.failed:
            failed.append(r.trial)
            continue
        counts[(r.n_pos_sv, r.n_neg_sv)] += 1
        totals[r.n_pos_sv + r.n_neg_sv] += 1
        if r.flags:
            flagged.append(r.trial)
    return CensusResult(cfg, dict(counts), dict(totals), rejected, failed, flagged, records)
