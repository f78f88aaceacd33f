from __future__ import annotations

import json
import subprocess
import sys

import pytest

from braidorder.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    data = json.loads(out)
    assert data["schema"] == 1
    return data


def test_lo_dim(capsys):
    assert run(capsys, "lo-dim", "2") == (0, "1\n", "")
    assert run(capsys, "lo-dim", "5")[1] == "9\n"
    assert run(capsys, "lo-dim", "1")[0] == 1


def test_sign(capsys):
    data = run_json(capsys, "sign", "--strands", "3", "1 -2")
    assert data["verdict"] == "Positive"
    data = run_json(capsys, "sign", "--strands", "3", "--", "-1 2 1")
    assert data == {"schema": 1, "verdict": "Positive", "witness": "2 1 -2"}


@pytest.mark.parametrize(
    "argv",
    [
        ["sign", "--strands", "2", "5"],
        ["sign", "--strands", "3", "1 x"],
        ["sign", "1"],
        ["nonsense"],
        ["cluster", "mutate", "--surface", "sphere-0"],
        ["cluster", "mutate", "--surface", "torus-1", "--seq", "1,4"],
        ["cluster", "mutate", "--surface", "torus-1", "--seq", "1,a"],
        ["cluster", "audit", "--surface", "torus-1", "--depth", "-1"],
        ["invariant", "--surface", "0,2", "--strands", "3", "1"],
        ["experiment", "order-positivity", "--strands", "4", "--max-len", "2"],
        [],
    ],
)
def test_usage_errors_exit_one(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert err


def test_cap_exceeded_exits_two(capsys):
    code, out, err = run(capsys, "homfly", "--strands", "2", " ".join(["1"] * 15))
    assert code == 2 and "cap" in err


def test_compare(capsys):
    assert run_json(capsys, "compare", "--strands", "3", "2", "1")["relation"] == "Less"
    assert run_json(capsys, "compare", "--strands", "3", "1 2 1", "2 1 2")["relation"] == "Equal"


def test_normal_form(capsys):
    data = run_json(capsys, "normal-form", "--strands", "3", "1 -2")
    assert data["delta_power"] == -1
    assert data["beta1"] == "1 2 1" and data["beta2"] == "2 2 1"


def test_invariants(capsys):
    data = run_json(capsys, "jones", "--strands", "2", "1 1 1")
    assert data == {"schema": 1, "kind": "jones", "poly": "t^1 + t^3 - t^4", "writhe": 3, "components": 1}
    data = run_json(capsys, "homfly", "--strands", "3", "1 -2 1 -2")
    assert data["poly"] == "a^-2 - 1 - z^2 + a^2"
    data = run_json(capsys, "invariant", "--surface", "1,1", "--strands", "3", "")
    assert data["kind"] == "homfly" and data["components"] == 3


def test_cluster(capsys):
    data = run_json(capsys, "cluster", "mutate", "--surface", "torus-1", "--seq", "1")
    assert data["matrix"] == [[0, -2, 2], [2, 0, -2], [-2, 2, 0]]
    assert data["variables"][1:] == ["x2^1", "x3^1"]
    data = run_json(capsys, "cluster", "audit", "--surface", "annulus-2", "--depth", "3", "--check", "positivity")
    assert data["failures"] == [] and data["distinct_variables"] == 8


def test_out_file(capsys, tmp_path):
    target = tmp_path / "lo.txt"
    assert run(capsys, "--out", str(target), "lo-dim", "4") == (0, "", "")
    assert target.read_text() == "7\n"
    target2 = tmp_path / "sign.json"
    assert run(capsys, "sign", "--strands", "2", "1", "--out", str(target2))[0] == 0
    assert json.loads(target2.read_text())["verdict"] == "Positive"


def test_module_entry_point_is_deterministic():
    argv = [sys.executable, "-m", "braidorder", "experiment", "order-positivity", "--strands", "2", "--max-len", "3"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["experiment"] == "order-positivity"
