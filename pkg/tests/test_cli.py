import io
import json
import subprocess
import sys

import pytest

from radon_svm.cli import RunConfig, UsageError, main, run

THREE = "y,x1,x2\n+1,2,0\n-1,0,1\n-1,0,-1\n"


def _run(tmp_path, command, text=None, **kw):
    path = None
    if text is not None:
        path = tmp_path / "data.csv"
        path.write_text(text)
    out, err = io.StringIO(), io.StringIO()
    code = run(RunConfig(command=command, input_path=str(path) if path else None, **kw), out, err)
    return code, out.getvalue(), err.getvalue()


def test_train_three_point(tmp_path):
    code, out, _ = _run(tmp_path, "train", THREE)
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == 1
    assert rep["w"] == pytest.approx([1, 0], abs=1e-8)
    assert rep["b"] == pytest.approx(-1, abs=1e-8)
    assert rep["margin"] == pytest.approx(2, abs=1e-8)


def test_train_non_separable(tmp_path):
    code, _, err = _run(tmp_path, "train", "y,x1,x2\n1,3,3\n1,-3,-3\n-1,-3,3\n-1,3,-3\n")
    assert code == 1
    assert "not linearly separable" in err


def test_malformed_row(tmp_path):
    code, _, err = _run(tmp_path, "train", "y,x1,x2\n1,2,0\n-1,0\n")
    assert code == 2 and "line 3" in err


def test_usage_errors():
    with pytest.raises(UsageError):
        RunConfig(command="train")
    with pytest.raises(UsageError):
        RunConfig(command="census", input_path="x.csv")
    with pytest.raises(UsageError):
        RunConfig(command="census", plot_path="x.svg")
    assert main(["census", "--plot", "x.svg"]) == 2
    with pytest.raises(SystemExit) as ei:
        main(["bogus"])
    assert ei.value.code == 2


def test_shatter_four_points(tmp_path):
    code, out, _ = _run(tmp_path, "shatter", "y,x1,x2\n1,0,0\n1,1,0\n1,0,1\n1,1,1\n")
    rep = json.loads(out)
    assert code == 0 and rep["shattered"] is False
    assert sorted(rep["witness_labeling"]) == [-1, -1, 1, 1]


def test_radon_square(tmp_path):
    code, out, _ = _run(tmp_path, "radon", "y,x1,x2\n1,0,0\n1,1,0\n1,0,1\n1,1,1\n")
    rep = json.loads(out)
    assert rep["radon_point"] == pytest.approx([0.5, 0.5])
    assert sorted([rep["part_one"], rep["part_two"]]) == [[0, 3], [1, 2]]


def test_analyze_with_plot(tmp_path):
    svg = tmp_path / "fig.svg"
    code, out, _ = _run(tmp_path, "analyze", THREE, plot_path=str(svg))
    rep = json.loads(out)
    assert code == 0 and (rep["n_pos_sv"], rep["n_neg_sv"]) == (1, 2)
    assert rep["radon_point"] == pytest.approx([1, 0], abs=1e-8)
    assert 'class="radon"' in svg.read_text()


def test_plot_needs_two_dimensions(tmp_path):
    code, _, err = _run(tmp_path, "train", "y,x1\n1,1\n-1,-1\n", plot_path=str(tmp_path / "f.svg"))
    assert code == 2 and "plotting is 2-D only" in err


def test_audit_rectangle(tmp_path):
    code, out, _ = _run(tmp_path, "audit", "y,x1,x2\n1,2,1\n1,2,-1\n-1,0,1\n-1,0,-1\n")
    rep = json.loads(out)
    assert rep["cause"] == "a" and rep["n_support"] == 4


def test_census_json_and_csv(tmp_path):
    code, out, _ = _run(tmp_path, "census", a=20.0, trials=15, seed=3)
    rep = json.loads(out)
    assert code == 0 and rep["schema"] == 1
    assert sum(c["trials"] for c in rep["counts"]) == 15
    code, out, _ = _run(tmp_path, "census", a=20.0, trials=15, seed=3, output_format="csv")
    lines = out.strip().splitlines()
    assert lines[0] == "trial,n_pos_sv,n_neg_sv,margin,flags" and len(lines) == 16


def test_json_schema_is_stable(tmp_path):
    _, a, _ = _run(tmp_path, "analyze", THREE)
    _, b, _ = _run(tmp_path, "analyze", "y,x1,x2\n1,0,0\n-1,2,0\n")
    ka, kb = json.loads(a), json.loads(b)
    assert ka.keys() == kb.keys()
    assert {k: type(v) for k, v in ka.items() if v is not None} == \
        {k: type(v) for k, v in kb.items() if v is not None}


def test_console_entry_point(tmp_path):
    p = tmp_path / "d.csv"
    p.write_text(THREE)
    r = subprocess.run([sys.executable, "-m", "radon_svm.cli", "train", str(p), "--format", "csv"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "key,value"


def test_census_example_seed7(tmp_path):
    code, out, _ = _run(tmp_path, "census", a=10.0, trials=1000, seed=7)
    frac = json.loads(out)["two_sv_fraction"]
    assert code == 0 and 0.582 <= frac <= 0.682
