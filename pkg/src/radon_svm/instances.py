"""Small named datasets used by tests, the CLI and the figure scripts."""

from __future__ import annotations

import numpy as np

from .geometry import simplex_vertices
from .numerics import null_space
from .svm import LabeledPointSet, SvmSolution, margin_support


def symmetric_pair() -> LabeledPointSet:
    """R^1: -1 labelled negative, +1 labelled positive."""
    return LabeledPointSet([[-1.0], [1.0]], [-1, 1])


def two_point() -> LabeledPointSet:
    """R^2: negative (0, 0), positive (2, 0)."""
    return LabeledPointSet([[0.0, 0.0], [2.0, 0.0]], [-1, 1])


def three_point() -> LabeledPointSet:
    """R^2: positive (2, 0); negatives (0, 1) and (0, -1). All three are support vectors."""
    return LabeledPointSet.from_classes([[2.0, 0.0]], [[0.0, 1.0], [0.0, -1.0]])


def crossed_square(s: float = 3.0) -> LabeledPointSet:
    """Opposite corners of a square share a label; the class hulls cross at the origin."""
    return LabeledPointSet.from_classes([[s, s], [-s, -s]], [[-s, s], [s, -s]])


def parallel_segments() -> LabeledPointSet:
    """Positive segment p1p2 parallel to negative segment n1n2; all four sit on the margins."""
    return LabeledPointSet.from_classes([[-3.0, 3.0], [-3.0, -3.0]], [[3.0, 1.0], [3.0, -2.0]])


def redundant_margin_point() -> LabeledPointSet:
    """One positive and three co-marginal negatives.

    ``w`` can be written with the middle negative (2, 0) alone or with the
    outer pair (2, 2), (2, -1), so the nonnegative multiplier representation
    is not unique.
    """
    return LabeledPointSet.from_classes([[-2.0, 0.0]], [[2.0, 2.0], [2.0, -1.0], [2.0, 0.0]])


def degenerate_rectangle() -> LabeledPointSet:
    """Two points per class on parallel margin lines: four margin points in R^2."""
    return LabeledPointSet.from_classes([[2.0, 1.0], [2.0, -1.0]], [[0.0, 1.0], [0.0, -1.0]])


def near_margin_instance(slack: float = 0.005) -> LabeledPointSet:
    """The three-point instance plus a positive whose functional margin is ``1 + slack``."""
    return LabeledPointSet.from_classes([[2.0, 0.0], [2.0 + slack, -0.5]], [[0.0, 1.0], [0.0, -1.0]])


def wrong_hyperplane_instance() -> tuple[LabeledPointSet, SvmSolution]:
    """A dataset with a canonical separating hyperplane that is not the SVM solution.

    The vertical hyperplane puts (3, 1) and (0, 0) on its margins, but their
    projections onto it do not meet, so no multipliers can satisfy the KKT
    conditions. Multipliers are the least-squares balanced fit on the claimed
    support vectors.
    """
    D = LabeledPointSet.from_classes([[3.0, 1.0], [4.0, 3.0]], [[0.0, 0.0], [-1.0, 2.0]])
    w = np.array([2.0 / 3.0, 0.0])
    b = -1.0
    p, q = D.points[0], D.points[2]
    c = float(w @ (p - q) / ((p - q) @ (p - q)))
    alphas = np.array([c, 0.0, c, 0.0])
    return D, SvmSolution(w, b, alphas, margin_support(w, b, D, 1e-8), 0, 0.0)


def labeled_simplex(n: int, k: int, i: int) -> LabeledPointSet:
    """``k`` equidistant points in R^n, the first ``i`` positive, the rest negative.

    The vertices of the regular (k-1)-simplex ``e_1..e_k`` live on the flat
    ``sum x = 1`` in R^k. They are carried isometrically into R^(k-1) with an
    orthonormal basis of that flat's direction space and padded with zeros up
    to R^n. Pairwise distances stay sqrt(2).
    """
    if not (2 <= k <= n + 1 and 1 <= i <= k - 1):
        raise ValueError("need 2 <= k <= n + 1 and 1 <= i <= k - 1")
    E = simplex_vertices(k)
    basis = null_space(np.ones((1, k)))  # (k-1, k), orthonormal
    Y = (E - E.mean(axis=0)) @ basis.T
    X = np.zeros((k, n))
    X[:, : k - 1] = Y
    labels = np.r_[np.ones(i, int), -np.ones(k - i, int)]
    return LabeledPointSet(X, labels)


def labeled_simplex_in_flat(k: int, i: int) -> LabeledPointSet:
    """The labelled simplex in its native coordinates ``e_1..e_k`` of R^k."""
    if not (k >= 2 and 1 <= i <= k - 1):
        raise ValueError("need k >= 2 and 1 <= i <= k - 1")
    return LabeledPointSet(simplex_vertices(k), np.r_[np.ones(i, int), -np.ones(k - i, int)])
