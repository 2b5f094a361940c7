import json
import subprocess
import sys

import mpmath
import pytest

from classical_mops import cli
from classical_mops.arith import working_precision

JP = ["--family", "jp", "--alpha", "0,1/2", "--beta", "1/4"]
HERMITE = ["--family", "hermite", "--c", "-1,1"]


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_coeffs_example(capsys):
    code, out, err = run(["coeffs", *JP, "--n", "1,0", "--kind", "ii"], capsys)
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert set(doc) == {"command", "params", "precision", "results"}
    assert doc["precision"] == 256
    c0, c1 = (mpmath.mpf(v) for v in doc["results"])
    assert abs(c0 + mpmath.mpf(4) / 9) < mpmath.mpf("1e-70") and c1 == 1


def test_at_violation_exits_2(capsys):
    code, out, err = run(["coeffs", "--family", "jp", "--alpha", "0,1", "--beta", "0", "--n", "1,1"], capsys)
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "InvalidParams"


@pytest.mark.parametrize(
    "argv",
    [
        ["coeffs", "--family", "jp", "--alpha", "0,1/2", "--n", "1,0"],
        ["coeffs", *JP, "--n", "1,0,0"],
        ["coeffs", *JP, "--n", "1,0", "--precision", "32"],
        ["coeffs", "--family", "hermite", "--c", "1,abc", "--n", "1,0"],
        ["recurrence", *HERMITE, "--n", "1,1", "--k", "3"],
        ["recurrence", *HERMITE, "--n", "1,1", "--k", "1", "--perm", "1,1"],
        ["hessenberg", *HERMITE],
    ],
)
def test_invalid_configuration(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2 and out == "" and err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["nonsense"])
    assert exc.value.code == 2


def test_numeric_failure_exits_3(capsys, monkeypatch):
    from classical_mops.errors import SingularSystem

    def boom(cfg, params):
        raise SingularSystem("pivot below threshold")

    monkeypatch.setitem(cli._HANDLERS, "coeffs", boom)
    code, out, err = run(["coeffs", *JP, "--n", "1,0"], capsys)
    assert code == 3 and out == "" and json.loads(err)["error"] == "SingularSystem"


def test_failed_check_exits_1(capsys):
    code, out, _ = run(["verify", *HERMITE, "--max-order", "2", "--tolerance", "0", "--workers", "1"], capsys)
    assert code == 1
    assert not all(r["passed"] for r in json.loads(out)["results"])


def test_verify_example(capsys):
    code, out, _ = run(["verify", *HERMITE, "--max-order", "4", "--precision", "256", "--workers", "1"], capsys)
    assert code == 0
    reports = json.loads(out)["results"]
    assert reports and all(r["passed"] for r in reports)
    assert {"polynomials_vs_oracle", "recurrence_residuals", "hessenberg_identity"} <= {r["name"] for r in reports}


def test_verify_parallel_matches_serial(capsys):
    base = ["verify", "--family", "laguerre2", "--alpha0", "1/2", "--c", "1,2", "--max-order", "2"]
    _, serial, _ = run(base + ["--workers", "1"], capsys)
    _, parallel, _ = run(base + ["--workers", "3"], capsys)
    assert serial == parallel


def test_recurrence_output(capsys):
    code, out, _ = run(["recurrence", *HERMITE, "--n", "1,1", "--k", "1"], capsys)
    res = json.loads(out)["results"]
    assert code == 0 and set(res) >= {"b0", "b"}
    assert mpmath.mpf(res["b0"]) == mpmath.mpf(-1) / 2 and len(res["b"]) == 2


def test_perm_flag(capsys):
    _, out, _ = run(["recurrence", *HERMITE, "--n", "2,1", "--k", "2", "--perm", "2,1"], capsys)
    assert json.loads(out)["results"]["perm"] == [2, 1]


def test_stepline_csv(capsys):
    code, out, _ = run(["stepline", *HERMITE, "--max-order", "3", "--format", "csv"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "# command: stepline" and all(l.startswith("#") for l in lines[:4])
    assert lines[4] == "n,b0,b1,b2"
    assert len(lines) == 5 + 4


def test_coeffs_table_csv(capsys):
    code, out, _ = run(["coeffs", *JP, "--max-order", "2", "--format", "csv"], capsys)
    rows = [l for l in out.splitlines() if not l.startswith("#")]
    assert code == 0 and rows[0] == "n,c0,c1,c2"
    assert len(rows) == 1 + 6
    assert rows[1].startswith("0;0,1")


def test_type_i_output(capsys):
    code, out, _ = run(["coeffs", *HERMITE, "--n", "1,0", "--kind", "i"], capsys)
    res = json.loads(out)["results"]
    assert code == 0 and [r["i"] for r in res] == [1, 2]
    assert [mpmath.mpf(v) for v in res[1]["coefficients"]] == [0]


def test_hessenberg_layouts(capsys):
    _, sparse, _ = run(["hessenberg", *HERMITE, "--size", "3"], capsys)
    _, dense, _ = run(["hessenberg", *HERMITE, "--size", "3", "--layout", "dense"], capsys)
    diag = json.loads(sparse)["results"]["diagonals"]["0"]
    matrix = json.loads(dense)["results"]["matrix"]
    assert [mpmath.mpf(v) for v in diag] == [-0.5, 0.5, -0.5]
    assert [mpmath.mpf(matrix[r][r]) for r in range(3)] == [-0.5, 0.5, -0.5]


def test_limits_single_relation(capsys):
    code, out, _ = run(["limits", "--relation", "jp-laguerre1-ii"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["precision"] == 384 and doc["results"][0]["passed"]


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(["coeffs", *JP, "--n", "1,1", "--output", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["command"] == "coeffs"


@pytest.mark.parametrize("bits", [64, 256, 512])
def test_json_round_trip(bits, capsys):
    from classical_mops import families as fm

    _, out, _ = run(["coeffs", *JP, "--n", "2,1", "--precision", str(bits)], capsys)
    with working_precision(bits):
        expected = fm.type_ii_coefficients(fm.JacobiPineiro((0, "1/2"), "1/4"), (2, 1)).coeffs
        assert [mpmath.mpf(v) for v in json.loads(out)["results"]] == list(expected)


def test_deterministic_output(capsys):
    argv = ["coeffs", "--family", "laguerre2", "--alpha0", "1/2", "--c", "1,2", "--max-order", "3", "--kind", "i"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "classical_mops", "coeffs", *HERMITE, "--n", "1,0", "--precision", "64"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["command"] == "coeffs"
