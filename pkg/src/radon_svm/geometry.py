"""Radon partitions, convex-hull intersection and general-position predicates.

Point sets are ``(m, n)`` arrays: one row per point in R^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Any

import numpy as np

from .lp import FEASIBILITY_TOL, phase_one
from .numerics import DEFAULT_RANK_TOL, null_space, rank

DEFAULT_MAX_PAIR_CHECKS = 10**6
COEFF_ZERO_TOL = 1e-12


class AuditTooLargeError(RuntimeError):
    pass


@dataclass(frozen=True)
class Verdict:
    """A boolean answer that carries a witness when the answer is ``False``."""

    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class RadonCertificate:
    coefficients: np.ndarray
    part_one: tuple[int, ...]
    part_two: tuple[int, ...]
    radon_point: np.ndarray
    scale: float
    # dimension of the solution space of the coefficient system; > 1 means the
    # points are not in general position and the partition is not unique
    null_dim: int = 1

    @property
    def degenerate(self) -> bool:
        return self.null_dim > 1


@dataclass(frozen=True)
class HullWitness:
    intersects: bool
    witness: np.ndarray | None = None
    barycentric_a: np.ndarray | None = None
    barycentric_b: np.ndarray | None = None


def as_points(X) -> np.ndarray:
    P = np.asarray(X, dtype=float)
    if P.ndim == 1:
        P = P.reshape(-1, 1)
    if P.ndim != 2:
        raise ValueError(f"expected an (m, n) array of points, got shape {P.shape}")
    if not np.all(np.isfinite(P)):
        raise ValueError("point coordinates must be finite")
    return P


def radon_system(X) -> np.ndarray:
    """Coefficient matrix of ``sum a_i x_i = 0, sum a_i = 0`` (one column per point)."""
    P = as_points(X)
    return np.vstack([P.T, np.ones(len(P))])


def radon_partition(X, tol: float = DEFAULT_RANK_TOL) -> RadonCertificate:
    """Radon partition of the first ``n + 2`` points of ``X``.

    The coefficients are a unit null vector of the coefficient system; points
    with a positive coefficient form ``part_one`` and the rest ``part_two``.
    """
    P = as_points(X)
    n = P.shape[1]
    if len(P) < n + 2:
        raise ValueError("too few points for Radon's theorem")
    P = P[: n + 2]
    basis = null_space(radon_system(P), tol)
    a = basis[0].copy()
    a[np.abs(a) <= COEFF_ZERO_TOL * np.max(np.abs(a))] = 0.0
    pos = a > 0
    part_one = tuple(int(i) for i in np.flatnonzero(pos))
    part_two = tuple(int(i) for i in np.flatnonzero(~pos))
    scale = float(a[pos].sum())
    v = (a[pos] / scale) @ P[pos]
    return RadonCertificate(a, part_one, part_two, v, scale, null_dim=len(basis))


def hulls_intersect(A, B, tol: float = FEASIBILITY_TOL) -> HullWitness:
    """Decide ``conv(A) & conv(B) != {}`` by phase-one feasibility.

    Looks for weights ``lam, mu >= 0`` with ``sum lam = sum mu = 1`` and
    ``lam @ A == mu @ B``.
    """
    PA, PB = as_points(A), as_points(B)
    if len(PA) == 0 or len(PB) == 0:
        raise ValueError("both point sets must be nonempty")
    if PA.shape[1] != PB.shape[1]:
        raise ValueError("point sets live in different dimensions")
    p, q = len(PA), len(PB)
    n = PA.shape[1]
    M = np.zeros((n + 2, p + q))
    M[:n, :p] = PA.T
    M[:n, p:] = -PB.T
    M[n, :p] = 1.0
    M[n + 1, p:] = 1.0
    rhs = np.zeros(n + 2)
    rhs[n:] = 1.0
    res = phase_one(M, rhs, tol=tol)
    if not res.feasible:
        return HullWitness(False)
    lam = res.x[:p] / res.x[:p].sum()
    mu = res.x[p:] / res.x[p:].sum()
    return HullWitness(True, lam @ PA, lam, mu)


def affine_rank(X, tol: float = DEFAULT_RANK_TOL) -> int:
    P = as_points(X)
    if len(P) <= 1:
        return 0
    return rank(P[1:] - P[0], tol)


def in_general_position(X, tol: float = DEFAULT_RANK_TOL) -> Verdict:
    """No ``k + 2`` points on a common k-flat, for every ``k < n``.

    On failure the witness is the first offending index tuple.
    """
    P = as_points(X)
    m, n = P.shape
    if m < 2:
        raise ValueError("need at least two points")
    for k in range(n):
        if k + 2 > m:
            break
        for idx in combinations(range(m), k + 2):
            if affine_rank(P[list(idx)], tol) < k + 1:
                return Verdict(False, idx)
    return Verdict(True)


def _direction_span(P: np.ndarray) -> np.ndarray:
    return P[1:] - P[0]


def count_flat_pairs(N: int, n: int) -> int:
    """Number of unordered disjoint subset pairs audited by :func:`flats_parallel_free`."""
    total = 0
    for a in range(2, N + 1):
        for b in range(a, N - a + 1):
            if (a - 1) + (b - 1) > n:
                break
            c = comb(N, a) * comb(N - a, b)
            total += c // 2 if a == b else c
    return total


def flats_parallel_free(X_pos, X_neg, tol: float = DEFAULT_RANK_TOL,
                        max_checks: int = DEFAULT_MAX_PAIR_CHECKS) -> Verdict:
    """Check that no two disjoint data-spanned flats share a direction.

    Every pair of disjoint index sets ``A, B`` over the pooled points with
    ``(|A| - 1) + (|B| - 1) <= n`` must have independent direction spans:
    ``rank(D_A) + rank(D_B) == rank([D_A; D_B])``. Singletons span no
    direction and are skipped. The witness is ``(A, B)`` in pooled indexing
    (positives first).
    """
    Pp, Pn = as_points(X_pos), as_points(X_neg)
    if Pp.shape[1] != Pn.shape[1]:
        raise ValueError("classes live in different dimensions")
    P = np.vstack([Pp, Pn])
    N, n = P.shape
    budget = count_flat_pairs(N, n)
    if budget > max_checks:
        raise AuditTooLargeError(f"audit too large: {budget} subset pairs exceed the cap of {max_checks}")

    spans: dict[tuple[int, ...], tuple[np.ndarray, int]] = {}

    def span(idx):
        if idx not in spans:
            D = _direction_span(P[list(idx)])
            spans[idx] = (D, rank(D, tol))
        return spans[idx]

    for a in range(2, N + 1):
        for b in range(a, N - a + 1):
            if (a - 1) + (b - 1) > n:
                break
            for A in combinations(range(N), a):
                rest = [i for i in range(N) if i not in A]
                DA, ra = span(A)
                for B in combinations(rest, b):
                    if a == b and B[0] < A[0]:
                        continue
                    DB, rb = span(B)
                    if rank(np.vstack([DA, DB]), tol) < ra + rb:
                        return Verdict(False, (A, B))
    return Verdict(True)


def radon_bipartitions(X, tol: float = FEASIBILITY_TOL) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All unordered bipartitions of ``X`` whose hulls intersect.

    Each bipartition is listed once, with the last point always in the second
    part; the list order is by bitmask of the first part.
    """
    P = as_points(X)
    N = len(P)
    found = []
    for mask in range(1, 2 ** (N - 1)):
        one = tuple(i for i in range(N) if mask >> i & 1)
        two = tuple(i for i in range(N) if not mask >> i & 1)
        if hulls_intersect(P[list(one)], P[list(two)], tol).intersects:
            found.append((one, two))
    return found


def unique_radon_partition(X, tol: float = FEASIBILITY_TOL) -> bool:
    P = as_points(X)
    if len(P) != P.shape[1] + 2:
        raise ValueError("unique_radon_partition needs exactly n + 2 points")
    return len(radon_bipartitions(P, tol)) == 1


def simplex_vertices(k: int) -> np.ndarray:
    """Standard basis of R^k: a regular (k-1)-simplex on the flat ``sum x = 1``."""
    if k < 2:
        raise ValueError("simplex_vertices needs k >= 2")
    return np.eye(k)
