"""Hard-margin linear SVM: separability test, dual pairwise ascent, brute-force oracle, KKT audit."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .lp import phase_one
from .numerics import SingularSystemError, solve_linear

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 10**6
DEFAULT_TAU = 1e-8
ORACLE_MAX_POINTS = 25


class NotSeparableError(ValueError):
    def __init__(self, msg: str = "not linearly separable"):
        super().__init__(msg)


class TrainingError(RuntimeError):
    """Iteration budget exhausted; carries the best iterate and its KKT report."""

    def __init__(self, msg: str, solution: "SvmSolution", report: "KktReport"):
        super().__init__(msg)
        self.solution = solution
        self.report = report


@dataclass(frozen=True)
class LabeledPointSet:
    points: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        X = np.asarray(self.points, dtype=float)
        if X.ndim == 1:
            X = X.reshape(-1, 1)
        y = np.asarray(self.labels).astype(int).ravel()
        if X.ndim != 2 or len(X) != len(y):
            raise ValueError("points and labels must have matching lengths")
        if not np.all(np.isfinite(X)):
            raise ValueError("point coordinates must be finite")
        if not np.all(np.isin(y, (-1, 1))):
            raise ValueError("labels must be -1 or +1")
        object.__setattr__(self, "points", X)
        object.__setattr__(self, "labels", y)

    @classmethod
    def from_classes(cls, positives, negatives) -> "LabeledPointSet":
        P = np.atleast_2d(np.asarray(positives, dtype=float))
        N = np.atleast_2d(np.asarray(negatives, dtype=float))
        return cls(np.vstack([P, N]), np.r_[np.ones(len(P), int), -np.ones(len(N), int)])

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def positives(self) -> np.ndarray:
        return self.points[self.labels > 0]

    @property
    def negatives(self) -> np.ndarray:
        return self.points[self.labels < 0]

    def check_both_classes(self) -> None:
        if not (np.any(self.labels > 0) and np.any(self.labels < 0)):
            raise ValueError("both classes must be nonempty")


@dataclass(frozen=True)
class SvmSolution:
    w: np.ndarray
    b: float
    alphas: np.ndarray
    support_indices: tuple[int, ...]
    iterations: int = 0
    tol: float = DEFAULT_TOL

    @property
    def margin(self) -> float:
        return 2.0 / float(np.linalg.norm(self.w))

    def decision(self, X) -> np.ndarray:
        return np.asarray(X, dtype=float) @ self.w + self.b


@dataclass(frozen=True)
class KktReport:
    stationarity_residual: float
    balance_residual: float
    worst_primal_violation: float
    complementary_slackness_worst: float
    dual_violation: float
    constraint_values: np.ndarray = field(repr=False)

    def passes(self, tol: float) -> bool:
        return max(self.stationarity_residual, self.balance_residual, self.worst_primal_violation,
                   self.complementary_slackness_worst, self.dual_violation) <= tol


@dataclass(frozen=True)
class SupportSets:
    margin: tuple[int, ...]
    dual: tuple[int, ...]

    @property
    def degenerate(self) -> bool:
        # a margin point with zero multiplier, or a multiplier off the margin
        return self.margin != self.dual


def separating_hyperplane(D: LabeledPointSet) -> tuple[np.ndarray, float] | None:
    """Some ``(w, b)`` with ``y_i (w.x_i + b) >= 1`` for all i, or ``None``.

    Free variables are split into nonnegative parts and the inequalities get
    surplus columns, so phase one sees ``A z = 1, z >= 0``.
    """
    D.check_both_classes()
    X, y = D.points, D.labels
    m, n = X.shape
    Z = np.column_stack([y[:, None] * X, y])
    A = np.hstack([Z, -Z, -np.eye(m)])
    res = phase_one(A, np.ones(m))
    if not res.feasible:
        return None
    v = res.x[: n + 1] - res.x[n + 1: 2 * n + 2]
    return v[:n], float(v[n])


def is_linearly_separable(D: LabeledPointSet) -> bool:
    return separating_hyperplane(D) is not None


def _midpoint_offset(f: np.ndarray, y: np.ndarray) -> float:
    return -0.5 * (f[y > 0].min() + f[y < 0].max())


def margin_support(w: np.ndarray, b: float, D: LabeledPointSet, tau: float) -> tuple[int, ...]:
    fm = D.labels * (D.points @ w + b)
    return tuple(int(i) for i in np.flatnonzero(np.abs(fm - 1.0) <= tau))


def _solution(D: LabeledPointSet, alphas: np.ndarray, iterations: int, tol: float) -> SvmSolution:
    X, y = D.points, D.labels
    w = (alphas * y) @ X
    b = float(_midpoint_offset(X @ w, y))
    return SvmSolution(w, b, alphas, margin_support(w, b, D, max(DEFAULT_TAU, tol)), iterations, tol)


def _violation(alpha: np.ndarray, X: np.ndarray, y: np.ndarray) -> tuple[float, int, int, float]:
    """Largest KKT violation and the maximal violating pair (lowest index on ties).

    Returns ``(relative violation, i, j, raw violation)``. The relative value
    divides by ``max(1, max |w.x_i|)``, the scale at which functional margins
    can be resolved in floating point.
    """
    w = (alpha * y) @ X
    f = X @ w
    score = y - f  # minus y times the gradient of the negated dual
    up = (y > 0) | (alpha > 0)
    low = (y < 0) | (alpha > 0)
    i = int(np.flatnonzero(up)[np.argmax(score[up])])
    j = int(np.flatnonzero(low)[np.argmin(score[low])])
    raw = float(score[i] - score[j])
    return raw / max(1.0, float(np.abs(f).max())), i, j, raw


def _polish(alpha: np.ndarray, X: np.ndarray, y: np.ndarray, K: np.ndarray) -> np.ndarray | None:
    """Solve the equality KKT system on the current positive-multiplier set.

    Negative multipliers are dropped one at a time (most negative first);
    returns ``None`` when no nonnegative solution is found.
    """
    A = list(np.flatnonzero(alpha > 0))
    while len(A) >= 2 and np.any(y[A] > 0) and np.any(y[A] < 0):
        k = len(A)
        ya = y[A]
        M = np.zeros((k + 1, k + 1))
        M[:k, :k] = np.outer(ya, ya) * K[np.ix_(A, A)]
        M[:k, k] = ya
        M[k, :k] = ya
        rhs = np.r_[np.ones(k), 0.0]
        sol, *_ = np.linalg.lstsq(M, rhs, rcond=None)
        if np.linalg.norm(M @ sol - rhs) > 1e-9 * (1.0 + np.linalg.norm(sol)):
            return None
        lam = sol[:k]
        worst = int(np.argmin(lam))
        if lam[worst] >= 0:
            out = np.zeros_like(alpha)
            out[A] = lam
            return out
        del A[worst]
    return None


def train_hard_margin(D: LabeledPointSet, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER,
                      check_separable: bool = True, polish_every: int = 50) -> SvmSolution:
    """Maximise the hard-margin dual by two-coordinate ascent.

    Each step moves the maximal violating pair along the direction that keeps
    ``sum alpha_i y_i`` fixed, with the exact line-search step clipped at
    ``alpha >= 0``. Every ``polish_every`` steps the equality KKT system on
    the current positive-multiplier set is solved exactly and adopted if it
    lowers the violation; this rescues nearly non-separable inputs where plain
    coordinate ascent crawls. Stops once the violation, relative to the
    largest ``|w.x_i|``, drops below ``tol``.

    The offset uses the midpoint between the extreme functional margins, and
    ``support_indices`` are margin points at resolution ``max(1e-8, tol)``.
    """
    D.check_both_classes()
    if check_separable and not is_linearly_separable(D):
        raise NotSeparableError()
    X, y = D.points, D.labels.astype(float)
    K = X @ X.T
    alpha = np.zeros(len(y))
    it = 0
    while True:
        gap, i, j, step = _violation(alpha, X, y)
        if gap < tol:
            return _solution(D, alpha, it, tol)
        if it >= max_iter:
            best = _solution(D, alpha, it, tol)
            raise TrainingError(f"iteration budget of {max_iter} pair updates exhausted (gap {gap:.3e})",
                                best, kkt_check(best, D))
        if polish_every and it and it % polish_every == 0:
            cand = _polish(alpha, X, y, K)
            if cand is not None:
                cgap = _violation(cand, X, y)[0]
                if cgap < gap:
                    alpha = cand
                    if cgap < tol:
                        continue
                    gap, i, j, step = _violation(alpha, X, y)
        eta = K[i, i] + K[j, j] - 2.0 * K[i, j]
        t = step / eta if eta > 0 else np.inf
        if y[i] < 0:
            t = min(t, alpha[i])
        if y[j] > 0:
            t = min(t, alpha[j])
        if not np.isfinite(t):
            raise NotSeparableError("dual is unbounded: not linearly separable")
        alpha[i] += y[i] * t
        alpha[j] -= y[j] * t
        it += 1


def brute_force_train(D: LabeledPointSet, feas_tol: float = 1e-9) -> SvmSolution:
    """Oracle trainer: try every candidate active set of 2..n+1 points.

    For each candidate containing both classes, solve the equality KKT system
    (active constraints tight, balance condition) for the multipliers and
    offset; keep candidates with nonnegative multipliers that satisfy every
    constraint, and return the one with the widest margin.
    """
    D.check_both_classes()
    X, y = D.points, D.labels
    m, n = X.shape
    if m > ORACLE_MAX_POINTS:
        raise ValueError(f"brute_force_train is limited to {ORACLE_MAX_POINTS} points")
    if not is_linearly_separable(D):
        raise NotSeparableError()
    K = X @ X.T
    best = None
    for size in range(2, min(n + 1, m) + 1):
        for S in combinations(range(m), size):
            S = list(S)
            # both classes are needed for the balance condition
            if np.all(y[S] > 0) or np.all(y[S] < 0):
                continue
            ys = y[S]
            M = np.zeros((size + 1, size + 1))
            M[:size, :size] = np.outer(ys, ys) * K[np.ix_(S, S)]
            M[:size, size] = ys
            M[size, :size] = ys
            rhs = np.r_[np.ones(size), 0.0]
            try:
                sol = solve_linear(M, rhs)
            except SingularSystemError:
                continue
            a, b = sol[:size], float(sol[size])
            if np.any(a < -feas_tol * max(1.0, np.abs(a).max())):
                continue
            w = (np.clip(a, 0, None) * ys) @ X[S]
            if np.any(y * (X @ w + b) < 1.0 - feas_tol):
                continue
            nw = float(w @ w)
            if best is None or nw < best[0] - 1e-12 * max(1.0, nw):
                alphas = np.zeros(m)
                alphas[S] = np.clip(a, 0, None)
                best = (nw, w, b, alphas)
    if best is None:
        raise RuntimeError("no feasible active set found (degenerate instance)")
    _, w, b, alphas = best
    return SvmSolution(w, b, alphas, margin_support(w, b, D, DEFAULT_TAU), 0, 0.0)


def support_vectors(S: SvmSolution, D: LabeledPointSet, tau: float = DEFAULT_TAU) -> SupportSets:
    """Margin points ``|y(w.x + b) - 1| <= tau`` next to dual points ``alpha > tau * max alpha``."""
    amax = float(S.alphas.max()) if len(S.alphas) else 0.0
    dual = tuple(int(i) for i in np.flatnonzero(S.alphas > tau * amax)) if amax > 0 else ()
    return SupportSets(margin_support(S.w, S.b, D, tau), dual)


def kkt_check(S: SvmSolution, D: LabeledPointSet) -> KktReport:
    X, y = D.points, D.labels
    a = np.asarray(S.alphas, dtype=float)
    g = 1.0 - y * (X @ S.w + S.b)
    return KktReport(
        stationarity_residual=float(np.linalg.norm(S.w - (a * y) @ X)),
        balance_residual=float(abs(a @ y)),
        worst_primal_violation=float(max(0.0, g.max())),
        complementary_slackness_worst=float(np.max(np.abs(a * g))),
        dual_violation=float(max(0.0, -a.min())),
        constraint_values=g,
    )


def dual_objective(alphas: np.ndarray, D: LabeledPointSet) -> float:
    w = (alphas * D.labels) @ D.points
    return float(alphas.sum() - 0.5 * w @ w)
