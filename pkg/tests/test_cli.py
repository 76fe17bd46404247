import json

import numpy as np
import pytest

from cusphere import dynamics as dyn
from cusphere.cli import main, parse_angle
from cusphere.closed_form import group_matrix_u3
from cusphere.generators import generator
from cusphere.numerics import expm


@pytest.mark.parametrize(
    "text, value",
    [
        ("0.25", 0.25),
        ("pi", np.pi),
        ("pi/200", np.pi / 200),
        ("-pi/30000", -np.pi / 30000),
        ("3pi/4", 3 * np.pi / 4),
        ("2*pi", 2 * np.pi),
        ("-1e-3", -1e-3),
    ],
)
def test_parse_angle(text, value):
    assert parse_angle(text) == pytest.approx(value, rel=1e-15)


def test_cayley_text(capsys):
    assert main(["cayley"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[2].split() == ["b", "b", "-a", "f", "-e", "d", "-c"]


def test_cayley_audit(capsys):
    assert main(["cayley", "--audit"]) == 0
    out = capsys.readouterr().out
    assert "c^3 = -1: CONTRADICTED (actual +a)" in out
    assert "e^3 = -1: CONTRADICTED (actual +a)" in out
    assert "ce = 1: CONFIRMED (actual +a)" in out


def test_cayley_json(capsys):
    assert main(["cayley", "--format", "json", "--audit"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rows"][3] == ["d", "-c", "b", "-a", "f", "-e"]
    assert data["matches_printed"] is True
    assert {a["relation"] for a in data["audit"] if not a["holds"]} == {"c^3 = -1", "e^3 = -1"}


def test_eval_identity(capsys):
    assert main(["eval", "--x", "0", "--y", "0", "--z", "0", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert np.array(data["rows"])[..., 0].tolist() == np.eye(6).tolist()
    assert data["complex"] is False
    assert data["meta"]["angles"] == [[0, 0], [0, 0], [0, 0]]


def test_eval_matches_expm(capsys):
    assert main(["eval", "--x", "0.3", "--y", "-0.7", "--z", "1.1", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "row,col,re,im"
    m = np.zeros((6, 6))
    for line in lines[1:]:
        i, j, re_, im = line.split(",")
        m[int(i), int(j)] = float(re_)
        assert im == "0"
    assert np.abs(m - expm(generator((0.3, -0.7, 1.1)))).max() <= 1e-10


def test_eval_u3(capsys):
    assert main(["eval", "--x", "1", "--y", "2", "--z", "3", "--u3", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    rows = np.array(data["rows"])
    u = rows[..., 0] + 1j * rows[..., 1]
    assert np.abs(u - group_matrix_u3((1, 2, 3))).max() == 0
    assert abs(np.linalg.det(u) - np.exp(6j)) <= 1e-12
    assert data["complex"] is True


def test_eval_u3_text_reports_det(capsys):
    assert main(["eval", "--x", "1", "--y", "2", "--z", "3", "--u3"]) == 0
    out = capsys.readouterr().out
    d = np.exp(6j)
    assert f"det = {d.real:+.15f}{d.imag:+.15f}j" in out


def test_eval_ce(capsys):
    assert main(["eval", "--x", "pi/200", "--ce", "-pi/30000", "pi/10000", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["meta"]["kind"] == "ce"
    assert data["meta"]["scales"] == pytest.approx([-np.pi / 30000, np.pi / 10000])


def test_eval_u3_and_ce_conflict():
    assert main(["eval", "--u3", "--ce", "0.1", "0.1"]) == 2


def test_verify_suite_u3(capsys):
    assert main(["verify", "--suite", "u3", "--samples", "50"]) == 0
    out = capsys.readouterr().out
    assert "det=e^{i gamma}" in out


def test_verify_bad_samples():
    assert main(["verify", "--samples", "0"]) == 2


def test_verify_bad_flags():
    assert main(["verify", "--suite", "nonsense"]) == 2
    assert main(["verify", "--tol", "-1"]) == 2


def test_verify_fails_on_impossible_tolerance(capsys):
    assert main(["verify", "--suite", "closedform", "--samples", "20", "--tol", "1e-30"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_verify_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("CUSPHERE_SEED", "7")
    assert main(["verify", "--suite", "group", "--samples", "10", "--seed", "1"]) == 0
    assert "seed=7" in capsys.readouterr().out
    monkeypatch.setenv("CUSPHERE_SEED", "x")
    assert main(["verify", "--suite", "group", "--samples", "10"]) == 2


def test_verify_deterministic(capsys):
    args = ["verify", "--suite", "all", "--samples", "50", "--seed", "3"]
    main(args)
    first = capsys.readouterr().out
    main(args)
    assert capsys.readouterr().out == first


def test_verify_json(capsys):
    assert main(["verify", "--suite", "algebra", "--samples", "10", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["passed"] is True
    assert all(c["passed"] for c in data["checks"])


def test_rotate_circle(tmp_path):
    out = tmp_path / "circle.csv"
    assert main(["rotate", "--x", "pi/1000", "--steps", "5000", "--out", str(out)]) == 0
    states = dyn.read_trajectory_csv(out.read_text())
    assert states.shape == (5001, 6)
    k = np.arange(5001)
    theta = np.pi / 1000
    assert np.abs(states[:, 0].real - np.cos(k * theta)).max() <= 1e-6
    assert np.abs(states[:, 1].real - np.sin(k * theta)).max() <= 1e-6


def test_rotate_round_trip_exact(tmp_path):
    out = tmp_path / "run.csv"
    assert main(["rotate", "--x", "pi/200", "--y", "pi/300", "--z", "pi/500", "--steps", "200", "--out", str(out)]) == 0
    traj = dyn.trajectory((np.pi / 200, np.pi / 300, np.pi / 500), steps=200)
    assert np.array_equal(dyn.read_trajectory_csv(out.read_text()).real, traj.states)


def test_rotate_complex_angles(capsys):
    args = ["rotate", "--x", "pi/200", "--xi", "pi/10000", "--y", "pi/300", "--yi", "pi/20000",
            "--z", "pi/500", "--zi", "pi/30000", "--steps", "2000"]
    assert main(args) == 0
    states = dyn.read_trajectory_csv(capsys.readouterr().out)
    norms = np.linalg.norm(states, axis=1)
    assert norms[-1] > norms[0]
    assert np.any(states.imag)


def test_rotate_zero_steps(capsys):
    assert main(["rotate", "--x", "0.1", "--steps", "0"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert lines[1].startswith("0,1,0,0,")


def test_rotate_bad_input():
    assert main(["rotate", "--steps", "-1"]) == 2
    assert main(["rotate", "--v0", "1,0,0"]) == 2


@pytest.mark.parametrize("plane, first", [("c", ["-X_y", "-Y_z", "-Z_x"]), ("e", ["-X_z", "-Y_x", "-Z_y"])])
def test_orbit(capsys, plane, first):
    assert main(["orbit", "--plane", plane]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[2].split()[1:4] == first
    assert lines[7].split()[1:4] == ["X_x", "Y_y", "Z_z"]


def test_orbit_json(capsys):
    assert main(["orbit", "--plane", "c", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] is True
    assert data["steps"][2] == {"X": "-X_x", "Y": "-Y_y", "Z": "-Z_z"}


def test_integrate(capsys):
    assert main(["integrate", "--dim", "1", "--n", "256", "--tol", "1e-12"]) == 0
    assert main(["integrate", "--dim", "3", "--n", "32", "--tol", "1e-8"]) == 0
    assert "PASS" in capsys.readouterr().out
    assert main(["integrate", "--dim", "1", "--n", "4"]) == 2
