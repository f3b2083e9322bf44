"""CSV ingestion/emission for labelled point sets and JSON-safe conversion."""

from __future__ import annotations

import csv
import io as _io
import math
from pathlib import Path

import numpy as np

from .svm import LabeledPointSet

SCHEMA_VERSION = 1
_LABELS = {"-1": -1, "+1": 1, "1": 1}


class DataFormatError(ValueError):
    """Malformed dataset text; ``line`` is 1-based."""

    def __init__(self, msg: str, line: int | None = None):
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
        self.line = line


def parse_csv(text: str) -> LabeledPointSet:
    rows = list(csv.reader(_io.StringIO(text)))
    # keep physical line numbers while skipping blank lines
    numbered = [(i + 1, r) for i, r in enumerate(rows) if r and any(c.strip() for c in r)]
    if not numbered:
        raise DataFormatError("empty dataset")
    hline, header = numbered[0]
    header = [h.strip() for h in header]
    n = len(header) - 1
    if n < 1 or header[0] != "y" or header[1:] != [f"x{j}" for j in range(1, n + 1)]:
        raise DataFormatError("header must be y,x1,...,xn", hline)
    labels, pts = [], []
    for line, row in numbered[1:]:
        if len(row) != n + 1:
            raise DataFormatError(f"expected {n + 1} fields, got {len(row)}", line)
        lab = row[0].strip()
        if lab not in _LABELS:
            raise DataFormatError(f"label must be -1 or +1, got {lab!r}", line)
        try:
            coords = [float(c) for c in row[1:]]
        except ValueError:
            raise DataFormatError("coordinates must be decimal numbers", line) from None
        if not all(math.isfinite(c) for c in coords):
            raise DataFormatError("coordinates must be finite", line)
        labels.append(_LABELS[lab])
        pts.append(coords)
    if not pts:
        raise DataFormatError("no data rows")
    return LabeledPointSet(np.array(pts), np.array(labels))


def read_csv(path) -> LabeledPointSet:
    return parse_csv(Path(path).read_text(encoding="utf-8"))


def format_csv(D: LabeledPointSet) -> str:
    out = ["y," + ",".join(f"x{j}" for j in range(1, D.dim + 1))]
    for lab, x in zip(D.labels, D.points):
        # repr of a float round-trips exactly
        out.append(("+1" if lab > 0 else "-1") + "," + ",".join(repr(float(v)) for v in x))
    return "\n".join(out) + "\n"


def write_csv(D: LabeledPointSet, path) -> None:
    Path(path).write_text(format_csv(D), encoding="utf-8")


def jsonable(obj):
    """Numpy-free structure for ``json.dumps``; non-finite floats become ``None``."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        return v if math.isfinite(v) else None
    return obj
