"""Phase-one simplex for small dense feasibility problems.

Decides whether ``{x >= 0 : A x = b}`` is nonempty with a full tableau and
Bland's rule (lowest-index entering column, lowest-index leaving basic
variable on ratio ties), so it always terminates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

FEASIBILITY_TOL = 1e-9
PIVOT_TOL = 1e-12


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    x: np.ndarray | None
    infeasibility: float
    pivots: int


def phase_one(A, b, tol: float = FEASIBILITY_TOL, max_pivots: int | None = None) -> FeasibilityResult:
    A = np.array(A, dtype=float, copy=True)
    b = np.array(b, dtype=float, copy=True)
    m, n = A.shape
    if b.shape != (m,):
        raise ValueError("rhs length must match the number of rows")

    # row equilibration; rows with negative rhs are flipped so artificials start feasible
    scale = np.max(np.abs(np.column_stack([A, b])), axis=1)
    scale[scale == 0.0] = 1.0
    A /= scale[:, None]
    b /= scale
    neg = b < 0
    A[neg] *= -1.0
    b[neg] *= -1.0

    T = np.zeros((m + 1, n + m + 1))
    T[:m, :n] = A
    T[:m, n:n + m] = np.eye(m)
    T[:m, -1] = b
    T[m, :n] = -A.sum(axis=0)
    T[m, -1] = -b.sum()
    basis = list(range(n, n + m))

    if max_pivots is None:
        max_pivots = 50 * (m + n) + 100
    pivots = 0
    while True:
        cost = T[m, :n + m]
        entering = np.flatnonzero(cost < -tol)
        if entering.size == 0:
            break
        j = int(entering[0])
        col = T[:m, j]
        rows = np.flatnonzero(col > PIVOT_TOL)
        if rows.size == 0:
            # cannot happen in phase one (objective bounded below by 0), but guard anyway
            break
        ratios = T[rows, -1] / col[rows]
        best = ratios.min()
        tied = rows[ratios <= best + tol * max(1.0, abs(best))]
        i = int(min(tied, key=lambda r: basis[r]))
        _pivot(T, i, j)
        basis[i] = j
        pivots += 1
        if pivots > max_pivots:
            raise RuntimeError("phase-one simplex exceeded its pivot budget")

    infeasibility = float(-T[m, -1])
    if infeasibility > tol * max(1.0, float(b.sum())):
        return FeasibilityResult(False, None, infeasibility, pivots)

    x = np.zeros(n)
    for r, var in enumerate(basis):
        if var < n:
            x[var] = T[r, -1]
    x = _refine(A, b, x, [v for v in basis if v < n])
    return FeasibilityResult(True, x, infeasibility, pivots)


def _pivot(T: np.ndarray, i: int, j: int) -> None:
    T[i] /= T[i, j]
    col = T[:, j].copy()
    col[i] = 0.0
    T -= np.outer(col, T[i])


def _refine(A: np.ndarray, b: np.ndarray, x: np.ndarray, basic: list[int]) -> np.ndarray:
    """Recompute basic values from the original columns to shed pivoting error."""
    if not basic:
        return x
    sol, *_ = np.linalg.lstsq(A[:, basic], b, rcond=None)
    if np.all(sol >= -FEASIBILITY_TOL):
        y = np.zeros_like(x)
        y[basic] = np.clip(sol, 0.0, None)
        if np.linalg.norm(A @ y - b) <= np.linalg.norm(A @ x - b):
            return y
    return np.clip(x, 0.0, None)
