"""Dense small-matrix kernels: rank, null space, linear solve, hyperplane projection.

Everything here works on plain ``numpy`` arrays. Rank decisions are made on
singular values relative to the largest one, which keeps results deterministic
for identical inputs (LAPACK's SVD has no data-dependent pivoting choices).
"""

from __future__ import annotations

import numpy as np

DEFAULT_RANK_TOL = 1e-10


class DegenerateHyperplaneError(ValueError):
    pass


class SingularSystemError(np.linalg.LinAlgError):
    pass


def as_matrix(M) -> np.ndarray:
    A = np.asarray(M, dtype=float)
    if A.ndim == 1:
        A = A.reshape(1, -1)
    if A.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must be finite")
    return A


def _singular_values(A: np.ndarray) -> np.ndarray:
    if A.size == 0:
        return np.zeros(0)
    return np.linalg.svd(A, compute_uv=False)


def rank(M, tol: float = DEFAULT_RANK_TOL) -> int:
    """Numerical rank: singular values above ``tol`` times the largest one."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    A = as_matrix(M)
    s = _singular_values(A)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


def null_space(M, tol: float = DEFAULT_RANK_TOL) -> np.ndarray:
    """Orthonormal basis of the null space, one basis vector per row.

    Returns an array of shape ``(cols - rank, cols)``. Each basis vector is
    sign-normalised so its largest-magnitude entry (lowest index on ties) is
    positive, which makes the output reproducible.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    A = as_matrix(M)
    cols = A.shape[1]
    if A.size == 0:
        return np.eye(cols)
    _, s, vt = np.linalg.svd(A, full_matrices=True)
    r = 0 if s[0] == 0.0 else int(np.count_nonzero(s > tol * s[0]))
    basis = vt[r:].copy()
    for v in basis:
        k = int(np.argmax(np.abs(v)))
        if v[k] < 0:
            v *= -1.0
    return basis


def project_onto_hyperplane(x, w, b: float) -> np.ndarray:
    """Orthogonal projection of ``x`` onto ``{z : w.z + b = 0}``.

    ``x`` may be a single point or an ``(m, n)`` stack of points.
    """
    x = np.asarray(x, dtype=float)
    w = np.asarray(w, dtype=float)
    ww = float(w @ w)
    if ww == 0.0:
        raise DegenerateHyperplaneError("degenerate hyperplane")
    # works row-wise when x is a stack of points
    return x - np.multiply.outer((x @ w + b) / ww, w)


def solve_linear(A, rhs, cond_tol: float = 1e-13) -> np.ndarray:
    """Solve a square system, refusing numerically singular matrices."""
    A = as_matrix(A)
    rhs = np.asarray(rhs, dtype=float)
    if A.shape[0] != A.shape[1]:
        raise ValueError("solve_linear needs a square matrix")
    s = _singular_values(A)
    if s.size == 0 or s[0] == 0.0 or s[-1] <= cond_tol * s[0]:
        raise SingularSystemError("singular system")
    return np.linalg.solve(A, rhs)
