import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from lcprop import ExactSeq, TriangleRow, kernel_from_json, stirling2_row
from lcprop.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    return code, json.loads(out)


def test_check_counterexample(capsys):
    code, out, _ = run(capsys, "check", "--seq", "5/8,1/4,1/8")
    assert code == 1
    assert "deficit[1] = -1/64" in out


def test_check_lc(capsys):
    assert run(capsys, "check", "--seq", "1,2,1")[0] == 0
    # decimal literals are exact
    code, js = run_json(capsys, "check", "--seq", "0.5,1.5,1")
    assert code == 0 and dict(js["deficits"])[1] == "7/4"


def test_check_file_with_triangle_row(capsys, tmp_path):
    path = tmp_path / "row.json"
    path.write_text(json.dumps(stirling2_row(5).to_json()))
    assert run(capsys, "check", "--file", str(path))[0] == 0
    path.write_text(json.dumps(["5/8", "1/4", "1/8"]))
    assert run(capsys, "check", "--file", str(path))[0] == 1


def test_condition1_examples(capsys):
    code, out, _ = run(capsys, "condition1", "--kernel", "eulerian:6", "--imax", "5")
    assert code == 1 and "part=b" in out
    code, js = run_json(capsys, "condition1", "--kernel", "eulerian:6", "--imax", "5")
    first = js["first_failure"]
    assert first["part"] == "b" and first["m"] == first["i"] - 1 and F(first["value"]) < 0
    assert run(capsys, "condition1", "--kernel", "stirling2", "--imax", "10")[0] == 0
    assert run(capsys, "condition1", "--kernel", "independent", "--pW", "1,1")[0] == 0
    assert run(capsys, "condition1", "--kernel", "eulerian:8", "--imax", "6", "--adjusted")[0] == 0


def test_condition1_kernel_json(capsys, tmp_path):
    spec = json.dumps({"kind": "eulerian", "n": 6})
    assert run(capsys, "condition1", "--kernel", spec, "--imax", "5")[0] == 1
    path = tmp_path / "k.json"
    path.write_text(spec)
    assert run(capsys, "condition1", "--kernel", str(path), "--imax", "4", "--adjusted")[0] == 0


def test_json_round_trips(capsys, tmp_path):
    code, js = run_json(capsys, "triangle", "--family", "stirling2", "--n", "6")
    assert code == 0 and TriangleRow.from_json(js) == stirling2_row(6)
    path = tmp_path / "row.json"
    path.write_text(json.dumps(js))
    code, rep = run_json(capsys, "check", "--file", str(path))
    assert rep["is_lc"] and all(F(d) >= 0 for _, d in rep["deficits"])

    code, js = run_json(capsys, "dependent-sum", "--seq", "0,1,31,90,65,15,1", "--kernel", "stirling2")
    assert ExactSeq.from_json(js["result"]) == stirling2_row(7).row

    code, js = run_json(capsys, "convolve", "--a", "1/2,1/2", "--b", "1/3,2/3")
    assert ExactSeq.from_json(js["result"]) == ExactSeq([F(1, 6), F(1, 2), F(1, 3)])

    code, js = run_json(capsys, "geom", "--seq", "5/8,1/4,1/8", "--p", "1/2", "--threshold", "256")
    assert code == 0 and js["is_lc"]
    assert F(js["threshold"]["lo"]) < F(1, 10) <= F(js["threshold"]["hi"])
    assert ExactSeq.from_json(js["q_values"])[0] == F(5, 16)


def test_kernel_json_from_library_round_trips(capsys):
    from lcprop import geometric_joint_kernel
    spec = json.dumps(geometric_joint_kernel(F(1, 2), F(1, 3), 8).to_json())
    assert kernel_from_json(json.loads(spec)).kind == "geom_joint"
    assert run(capsys, "condition1", "--kernel", spec, "--imax", "6")[0] == 0


def test_decimal_display_is_marked(capsys):
    code, out, _ = run(capsys, "check", "--seq", "5/8,1/4,1/8", "--decimal", "3")
    assert "-1/64 (~-0.016, approx)" in out


def test_geom_gap(capsys):
    code, out, _ = run(capsys, "geom", "--seq", "1/2,0,1/2", "--threshold", "64")
    assert code == 1 and "gap" in out


def test_roots(capsys):
    assert run(capsys, "roots", "--seq", "1,3,3,1")[0] == 0
    assert run(capsys, "roots", "--seq", "1,3,5,6,5,3,1")[0] == 1
    assert run(capsys, "roots", "--seq", "0,2,3,1")[0] == 0
    code, js = run_json(capsys, "roots", "--poly=-1,0,1")
    assert code == 0 and js["real_roots_with_multiplicity"] == 2


def test_reproduce_single(capsys):
    code, out, _ = run(capsys, "reproduce", "geom-counterexample")
    assert code == 0 and "[PASS] 1." in out
    assert run(capsys, "reproduce", "7")[0] == 0


def test_seed_env_override(capsys, monkeypatch):
    monkeypatch.setenv("LCPROP_SEED", "17")
    code, js = run_json(capsys, "reproduce", "hoggar", "--seed", "3")
    assert js["seed"] == 17 and code == 0


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["check"],
    ["check", "--seq", "1,x"],
    ["check", "--seq", "1,-1"],
    ["check", "--seq", "1/0"],
    ["check", "--seq", "1", "--file", "x.json"],
    ["check", "--file", "/nonexistent/row.json"],
    ["condition1", "--kernel", "nope"],
    ["condition1", "--kernel", "{not json"],
    ["condition1", "--kernel", '{"kind": "eulerian"}'],
    ["condition1", "--kernel", "stirling2", "--imax", "-1"],
    ["condition1", "--kernel", "stirling2", "--imax", "two"],
    ["dependent-sum", "--seq", "1,1,1,1,1,1", "--kernel", "eulerian:2"],
    ["triangle", "--family", "catalan", "--n", "3"],
    ["triangle", "--family", "stirling2", "--n", "0"],
    ["triangle", "--family", "q_stirling2", "--n", "3"],
    ["geom", "--seq", "1,1"],
    ["geom", "--seq", "1,1", "--p", "3/2"],
    ["geom", "--seq", "0", "--p", "1/2"],
    ["roots", "--seq", "0"],
    ["roots", "--poly", "1,-1", "--seq", "1"],
    ["reproduce", "item-99"],
    ["--format", "xml", "check", "--seq", "1"],
    ["check", "--seq", "1", "--decimal", "-2"],
])
def test_malformed_inputs_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_bad_json_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{oops")
    assert run(capsys, "check", "--file", str(path))[0] == 2
    path.write_text(json.dumps({"nothing": 1}))
    assert run(capsys, "check", "--file", str(path))[0] == 2
    path.write_text(json.dumps("1,2"))
    assert run(capsys, "check", "--file", str(path))[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lcprop.cli", "check", "--seq", "1,2,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "log-concave: yes" in proc.stdout
