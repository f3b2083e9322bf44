"""Radon configurations of trained hard-margin SVMs.

The support vectors of each class, projected onto the separating hyperplane,
have intersecting convex hulls; the dual multipliers give an explicit common
point. On top of that this module audits strong general position, checks the
``n + 1`` support-vector bound, perturbs data to test support-set stability
and enumerates labelings for shattering.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import (AuditTooLargeError, Verdict, flats_parallel_free,
                       hulls_intersect, in_general_position, radon_partition)
from .lp import phase_one
from .numerics import DEFAULT_RANK_TOL, null_space, project_onto_hyperplane, rank
from .rng import trial_generator, uniform_ball
from .svm import (DEFAULT_TAU, DEFAULT_TOL, LabeledPointSet, NotSeparableError, SvmSolution,
                  is_linearly_separable, kkt_check, support_vectors, train_hard_margin)

KKT_TOL = 1e-8
WITNESS_TOL = 1e-8
MAX_SHATTER_POINTS = 20


class NotAnSvmSolutionError(ValueError):
    def __init__(self, msg: str = "not an SVM solution"):
        super().__init__(msg)


@dataclass(frozen=True)
class DualRadonWitness:
    """The Radon point built from the multipliers, with its convex weights."""

    point: np.ndarray
    pos_indices: tuple[int, ...]
    neg_indices: tuple[int, ...]
    pos_weights: np.ndarray
    neg_weights: np.ndarray
    # max distance between the point and either weighted projected combination
    residual: float


@dataclass(frozen=True)
class ConfigurationReport:
    n_pos_sv: int
    n_neg_sv: int
    support: tuple[int, ...]
    dual_support: tuple[int, ...]
    radon_point: np.ndarray | None
    hulls_intersect: bool
    unique_point: bool
    general_position: bool
    strong_gp_condition_i: bool
    strong_gp_condition_ii: bool
    exceeds_bound: bool
    degeneracy_flags: list[str] = field(default_factory=list)

    @property
    def split(self) -> tuple[int, int]:
        return self.n_pos_sv, self.n_neg_sv

    @property
    def strong_general_position(self) -> bool:
        return self.general_position and self.strong_gp_condition_i and self.strong_gp_condition_ii


@dataclass(frozen=True)
class PrecisionAudit:
    n_support: int
    bound: int
    exceeds_bound: bool
    cause: str | None  # "a", "b", "c" or None when within the bound
    co_marginal: bool
    co_margin_residual: float
    general_position: bool
    condition_i: bool
    condition_ii: bool
    recommended_tol: float | None
    notes: list[str] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.exceeds_bound


def _resolution(S: SvmSolution, tau: float | None) -> float:
    return tau if tau is not None else max(DEFAULT_TAU, S.tol)


def dual_radon_witness(S: SvmSolution, D: LabeledPointSet, kkt_tol: float = KKT_TOL) -> DualRadonWitness:
    """Project the multiplier-weighted class averages onto the hyperplane.

    With ``C = sum of positive-class multipliers`` both ``rho(sum_P a_j x_j / C)``
    and ``rho(sum_N a_j x_j / C)`` are the same point, where ``rho`` is the
    orthogonal projection onto ``w.x + b = 0``.
    """
    if not kkt_check(S, D).passes(kkt_tol):
        raise NotAnSvmSolutionError()
    a, y, X = S.alphas, D.labels, D.points
    P = np.flatnonzero((y > 0) & (a > 0))
    N = np.flatnonzero((y < 0) & (a > 0))
    C = float(a[P].sum())
    if C <= 0 or N.size == 0:
        raise NotAnSvmSolutionError("not an SVM solution: no positive multipliers")
    wp, wn = a[P] / C, a[N] / a[N].sum()
    rp = project_onto_hyperplane(wp @ X[P], S.w, S.b)
    rn = project_onto_hyperplane(wn @ X[N], S.w, S.b)
    point = 0.5 * (rp + rn)
    return DualRadonWitness(point, tuple(map(int, P)), tuple(map(int, N)), wp, wn,
                            float(max(np.linalg.norm(rp - point), np.linalg.norm(rn - point))))


def radon_point_from_duals(S: SvmSolution, D: LabeledPointSet, kkt_tol: float = KKT_TOL) -> np.ndarray:
    """Radon point on the separating hyperplane from the dual multipliers.

    Raises :class:`NotAnSvmSolutionError` when ``S`` fails the KKT audit, or
    when the two projected combinations disagree.
    """
    wit = dual_radon_witness(S, D, kkt_tol)
    scale = max(1.0, float(np.abs(D.points).max()))
    if wit.residual > WITNESS_TOL * scale:
        raise NotAnSvmSolutionError(f"not an SVM solution: projected class averages differ by {wit.residual:.2e}")
    proj = project_onto_hyperplane(D.points, S.w, S.b)
    hw = hulls_intersect(proj[list(wit.pos_indices)], proj[list(wit.neg_indices)])
    if not hw.intersects:
        raise NotAnSvmSolutionError("not an SVM solution: projected support hulls are disjoint")
    return wit.point


def projected_support(S: SvmSolution, D: LabeledPointSet, tau: float | None = None):
    """Projected positive and negative margin points, with their indices."""
    sv = support_vectors(S, D, _resolution(S, tau)).margin
    idx = np.array(sv, dtype=int)
    proj = project_onto_hyperplane(D.points[idx], S.w, S.b) if idx.size else np.zeros((0, D.dim))
    lab = D.labels[idx]
    return proj[lab > 0], proj[lab < 0], idx[lab > 0], idx[lab < 0]


def verify_unique_radon_point(S: SvmSolution, D: LabeledPointSet, tau: float | None = None,
                              rank_tol: float = DEFAULT_RANK_TOL) -> Verdict:
    """Projected support flats of the two classes share no direction.

    When that holds the projected hulls meet in a single point. On failure the
    witness is a unit vector in both projected direction spans.
    """
    Pp, Pn, _, _ = projected_support(S, D, tau)
    if len(Pp) == 0 or len(Pn) == 0:
        return Verdict(False, "a class has no support vectors")
    Dp, Dn = Pp[1:] - Pp[0], Pn[1:] - Pn[0]
    rp = rank(Dp, rank_tol) if len(Dp) else 0
    rn = rank(Dn, rank_tol) if len(Dn) else 0
    if rp == 0 or rn == 0:
        return Verdict(True)
    if rank(np.vstack([Dp, Dn]), rank_tol) == rp + rn:
        return Verdict(True)
    # a shared direction: c_p . Dp == c_n . Dn
    ns = null_space(np.vstack([Dp, -Dn]).T, rank_tol)
    v = ns[0][: len(Dp)] @ Dp
    return Verdict(False, v / np.linalg.norm(v))


def dual_representation_unique(S: SvmSolution, D: LabeledPointSet, tau: float | None = None,
                               rank_tol: float = 1e-8) -> Verdict:
    """Is ``w = sum alpha_i y_i x_i`` (alpha >= 0, balanced) the only such representation?

    Valid multipliers live on the margin points ``M`` and solve ``U alpha = (w, 0)``
    with columns ``u_i = (y_i x_i, y_i)``. The current multipliers are unique
    iff no nonzero ``d`` has ``U d = 0`` with ``d_i >= 0`` wherever
    ``alpha_i = 0``: full column rank on the positive multipliers, plus an
    infeasible phase-one problem for the zero-multiplier margin points.
    """
    tau = _resolution(S, tau)
    sets = support_vectors(S, D, tau)
    M = list(sets.margin)
    pos = [i for i in M if i in set(sets.dual)]
    if set(sets.dual) - set(M):
        return Verdict(False, "positive multiplier off the margin")
    X, y = D.points, D.labels
    U = np.vstack([(y[:, None] * X).T, y])
    UP = U[:, pos]
    if pos and rank(UP, rank_tol) < len(pos):
        return Verdict(False, ("rank-deficient", tuple(pos)))
    zero = [i for i in M if i not in pos]
    if not zero:
        return Verdict(True)
    # d = (d_P+ - d_P-, d_Z) with d_Z >= 0, sum d_Z = 1, U d = 0
    UZ = U[:, zero]
    A = np.vstack([np.hstack([UP, -UP, UZ]),
                   np.r_[np.zeros(2 * len(pos)), np.ones(len(zero))]])
    rhs = np.r_[np.zeros(U.shape[0]), 1.0]
    if phase_one(A, rhs).feasible:
        return Verdict(False, ("alternative multipliers through", tuple(zero)))
    return Verdict(True)


def classify_configuration(S: SvmSolution, D: LabeledPointSet, tau: float | None = None) -> ConfigurationReport:
    """Split counts, Radon point and general-position verdicts for a trained solution.

    Degeneracies end up in ``degeneracy_flags``; nothing here raises for a
    valid input.
    """
    tau = _resolution(S, tau)
    sets = support_vectors(S, D, tau)
    sv = np.array(sets.margin, dtype=int)
    n_pos = int(np.sum(D.labels[sv] > 0)) if sv.size else 0
    n_neg = len(sv) - n_pos
    flags: list[str] = []
    if sets.degenerate:
        flags.append("margin/dual support mismatch")

    radon_pt = None
    meets = False
    try:
        radon_pt = radon_point_from_duals(S, D)
        meets = True
    except NotAnSvmSolutionError as exc:
        flags.append(f"kkt: {exc}")
        Pp, Pn, _, _ = projected_support(S, D, tau)
        if len(Pp) and len(Pn):
            hw = hulls_intersect(Pp, Pn)
            meets = hw.intersects
            radon_pt = hw.witness

    unique = bool(verify_unique_radon_point(S, D, tau))
    pos_sv, neg_sv = D.points[sv[D.labels[sv] > 0]], D.points[sv[D.labels[sv] < 0]]
    gp = len(sv) < 2 or bool(in_general_position(D.points[sv]))
    try:
        cond_i = bool(flats_parallel_free(pos_sv, neg_sv)) if n_pos and n_neg else False
    except AuditTooLargeError as exc:
        flags.append(str(exc))
        cond_i = False
    cond_ii = bool(dual_representation_unique(S, D, tau))
    exceeds = len(sv) > D.dim + 1
    if not gp:
        flags.append("support vectors not in general position")
    if not cond_i:
        flags.append("condition (i): parallel directions between support flats")
    if not cond_ii:
        flags.append("condition (ii): multiplier representation not unique")
    if exceeds:
        flags.append(f"{len(sv)} support vectors exceed the bound n+1 = {D.dim + 1}")
        if gp and cond_i and cond_ii:
            flags.append("precision: support set larger than the bound without a geometric cause")
    return ConfigurationReport(n_pos, n_neg, tuple(map(int, sv)), sets.dual, radon_pt, meets, unique,
                               gp, cond_i, cond_ii, exceeds, flags)


def co_margin_fit(D: LabeledPointSet, idx) -> float:
    """Least-squares residual of forcing ``y_i (w.x_i + b) = 1`` on the given points.

    Zero (to rounding) iff the points can all sit exactly on a pair of
    parallel margin hyperplanes. Reported relative to the fitted ``(w, b)`` scale.
    """
    idx = list(idx)
    Z = np.column_stack([D.labels[idx, None] * D.points[idx], D.labels[idx]])
    sol, *_ = np.linalg.lstsq(Z, np.ones(len(idx)), rcond=None)
    scale = max(1.0, float(np.abs(Z).max()) * float(np.abs(sol).max()))
    return float(np.abs(Z @ sol - 1.0).max()) / scale


def precision_audit(S: SvmSolution, D: LabeledPointSet, tau: float | None = None) -> PrecisionAudit:
    """Explain a support set that is larger than ``n + 1``.

    If the claimed margin points cannot all lie exactly on one pair of margin
    hyperplanes, the solver did not resolve the margin finely enough: cause
    ``"c"``, with a tighter tolerance recommended. Otherwise the degeneracy is
    real: cause ``"a"`` for flat degeneracies (general position or parallel
    support flats), ``"b"`` for a non-unique multiplier representation.
    """
    tau = _resolution(S, tau)
    sv = support_vectors(S, D, tau).margin
    bound = D.dim + 1
    rep = classify_configuration(S, D, tau)
    if len(sv) <= bound:
        return PrecisionAudit(len(sv), bound, False, None, True, 0.0, rep.general_position,
                              rep.strong_gp_condition_i, rep.strong_gp_condition_ii, None)
    resid = co_margin_fit(D, sv)
    co_marginal = resid <= DEFAULT_TAU
    notes = []
    if not co_marginal:
        cause = "c"
        notes.append(f"margin points are not co-marginal (residual {resid:.2e}); "
                     "the solver tolerance is too loose to resolve the support set")
    elif not (rep.general_position and rep.strong_gp_condition_i):
        cause = "a"
    elif not rep.strong_gp_condition_ii:
        cause = "b"
    else:
        cause = "c"
        notes.append("no geometric degeneracy found")
    if cause == "a" and not rep.strong_gp_condition_ii:
        notes.append("condition (ii) also fails")
    recommended = max(S.tol * 1e-2, 1e-14) if cause == "c" else None
    return PrecisionAudit(len(sv), bound, True, cause, co_marginal, resid, rep.general_position,
                          rep.strong_gp_condition_i, rep.strong_gp_condition_ii, recommended, notes)


def perturbation_stability(D: LabeledPointSet, eps: float, trials: int, seed: int,
                           tol: float = DEFAULT_TOL, tau: float | None = None) -> Verdict:
    """Does every ``eps``-perturbation keep the same support-vector index set?

    Trial ``t`` displaces each point by a uniform vector in the ``eps``-ball
    drawn from the stream keyed by ``(seed, t)``. The witness on failure is a
    dict with the trial index, the reason and both support sets.
    """
    base = train_hard_margin(D, tol=tol)
    tau = _resolution(base, tau)
    ref = support_vectors(base, D, tau).margin
    if eps == 0:
        return Verdict(True)
    for t in range(trials):
        gen = trial_generator(seed, t, stream="perturb")
        moved = LabeledPointSet(D.points + eps * uniform_ball(gen, len(D), D.dim), D.labels)
        try:
            S = train_hard_margin(moved, tol=tol)
        except NotSeparableError:
            return Verdict(False, {"trial": t, "reason": "not linearly separable", "before": ref, "after": None})
        got = support_vectors(S, moved, tau).margin
        if got != ref:
            return Verdict(False, {"trial": t, "reason": "support set changed", "before": ref, "after": got})
    return Verdict(True)


def min_nonsupport_slack(S: SvmSolution, D: LabeledPointSet, tau: float | None = None) -> float:
    """Smallest distance from a non-support point to its margin hyperplane."""
    tau = _resolution(S, tau)
    sv = set(support_vectors(S, D, tau).margin)
    others = [i for i in range(len(D)) if i not in sv]
    if not others:
        return np.inf
    fm = D.labels[others] * S.decision(D.points[others])
    return float((fm - 1.0).min() / np.linalg.norm(S.w))


def _gray_labelings(m: int):
    for k in range(2**m):
        g = k ^ (k >> 1)
        yield np.array([1 if g >> i & 1 else -1 for i in range(m)])


def shatter_check(P, max_points: int = MAX_SHATTER_POINTS) -> Verdict:
    """Can affine separators realise all ``2^m`` labelings of ``P``?

    For ``m >= n + 2`` the labeling induced by a Radon partition of the first
    ``n + 2`` points is tried first, since its class hulls intersect. The
    witness on failure is the unrealisable labeling.
    """
    X = np.asarray(P, dtype=float)
    if X.ndim == 1:
        X = X.reshape(-1, 1)
    m, n = X.shape
    if m > max_points:
        raise ValueError(f"shatter_check is limited to {max_points} points")

    def realisable(lab):
        if np.all(lab > 0) or np.all(lab < 0):
            return True
        return is_linearly_separable(LabeledPointSet(X, lab))

    if m >= n + 2:
        cert = radon_partition(X)
        lab = np.ones(m, int)
        lab[list(cert.part_two)] = -1
        if not realisable(lab):
            return Verdict(False, tuple(int(v) for v in lab))
    for lab in _gray_labelings(m):
        if not realisable(lab):
            return Verdict(False, tuple(int(v) for v in lab))
    return Verdict(True)

