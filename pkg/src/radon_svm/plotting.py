"""Standalone SVG rendering of 2-D labelled data and a trained separator."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .svm import DEFAULT_TAU, LabeledPointSet, SvmSolution, support_vectors

SIZE = 800
PAD = 0.05


class PlotDimensionError(ValueError):
    def __init__(self):
        super().__init__("plotting is 2-D only")


def _clip_line(w, c, lo, hi):
    """Endpoints of ``w.x = c`` inside the box ``[lo, hi]``, or None."""
    pts = []
    for axis in (0, 1):
        other = 1 - axis
        if abs(w[other]) < 1e-300:
            continue
        for v in (lo[axis], hi[axis]):
            u = (c - w[axis] * v) / w[other]
            if lo[other] - 1e-12 <= u <= hi[other] + 1e-12:
                p = np.empty(2)
                p[axis], p[other] = v, u
                pts.append(p)
    if len(pts) < 2:
        return None
    pts.sort(key=lambda p: (p[0], p[1]))
    return pts[0], pts[-1]


def render_svg(D: LabeledPointSet, S: SvmSolution | None = None, radon_point=None,
               tau: float = DEFAULT_TAU) -> str:
    if D.dim != 2:
        raise PlotDimensionError()
    X = D.points
    extra = [X]
    if radon_point is not None:
        extra.append(np.asarray(radon_point, float).reshape(1, 2))
    allp = np.vstack(extra)
    lo, hi = allp.min(axis=0), allp.max(axis=0)
    span = float(max(hi - lo))
    if span == 0:
        span = 2.0
    mid = (lo + hi) / 2
    lo, hi = mid - span / 2 * 1.1, mid + span / 2 * 1.1
    inner = SIZE * (1 - 2 * PAD)

    def tx(p):
        u = (np.asarray(p) - lo) / (hi - lo)
        return SIZE * PAD + u[0] * inner, SIZE * PAD + (1 - u[1]) * inner

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
             f'viewBox="0 0 {SIZE} {SIZE}">',
             f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>']
    if S is not None:
        for off, dash, cls in ((0.0, "", "decision"), (1.0, ' stroke-dasharray="8,6"', "margin-pos"),
                               (-1.0, ' stroke-dasharray="8,6"', "margin-neg")):
            seg = _clip_line(S.w, off - S.b, lo, hi)
            if seg is None:
                continue
            (x1, y1), (x2, y2) = tx(seg[0]), tx(seg[1])
            parts.append(f'<line class="{cls}" x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                         f'stroke="black" stroke-width="2"{dash}/>')
        for i in support_vectors(S, D, tau).margin:
            cx, cy = tx(X[i])
            parts.append(f'<circle class="support" cx="{cx:.2f}" cy="{cy:.2f}" r="12" fill="none" '
                         f'stroke="green" stroke-width="2"/>')
    for lab, x in zip(D.labels, X):
        cx, cy = tx(x)
        if lab > 0:
            parts.append(f'<path class="pos" d="M{cx - 6:.2f},{cy:.2f}h12M{cx:.2f},{cy - 6:.2f}v12" '
                         f'stroke="red" stroke-width="2.5"/>')
        else:
            parts.append(f'<circle class="neg" cx="{cx:.2f}" cy="{cy:.2f}" r="5" fill="blue"/>')
    if radon_point is not None:
        cx, cy = tx(np.asarray(radon_point, float).reshape(2))
        parts.append(f'<rect class="radon" x="{cx - 6:.2f}" y="{cy - 6:.2f}" width="12" height="12" '
                     f'fill="orange" stroke="black" transform="rotate(45 {cx:.2f} {cy:.2f})"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def plot_svg(D: LabeledPointSet, S: SvmSolution | None, path, radon_point=None) -> None:
    Path(path).write_text(render_svg(D, S, radon_point), encoding="utf-8")
