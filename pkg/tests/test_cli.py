import json
import subprocess
import sys

import pytest

from galoisrm import verify
from galoisrm.cli import EXIT_FAIL, EXIT_INVALID, EXIT_OK, main
from galoisrm.verify import FAIL, Check

Z4_CUBIC = ["--p", "2", "--s", "2", "--r", "1", "--m", "3"]
Z4_PLANE = ["--p", "2", "--s", "2", "--r", "1", "--m", "2"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tower_report(capsys):
    code, out, _ = run(capsys, "tower", *Z4_CUBIC)
    assert code == EXIT_OK
    assert "minpoly(xi): x^3 + [2]*x^2 + x + [3]" in out
    assert "n: 7" in out
    assert "rm>=s: true" in out


def test_tower_rejects_nonprime(capsys):
    code, _, err = run(capsys, "tower", "--p", "4", "--s", "2", "--r", "1", "--m", "2")
    assert code == EXIT_INVALID
    assert "not prime" in err


def test_tower_warns_rm_lt_s(capsys):
    code, out, _ = run(capsys, "tower", "--p", "2", "--s", "3", "--r", "1", "--m", "2")
    assert code == EXIT_OK
    assert "rm>=s: false" in out and "warning" in out


def test_tower_json(capsys):
    code, out, _ = run(capsys, "tower", *Z4_CUBIC, "--emit", "json")
    doc = json.loads(out)
    assert code == EXIT_OK
    assert doc["n"] == 7 and doc["rm_ge_s"] is True
    assert doc["minpoly"] == [[3], [1], [2], [1]]


def test_code_genmat(capsys):
    code, out, _ = run(capsys, "code", *Z4_PLANE, "--nu", "1", "--emit", "genmat")
    assert code == EXIT_OK
    assert out.splitlines() == ["[1] [1] [1] [1]", "[0] [1] [0] [3]", "[0] [0] [1] [3]"]


def test_code_shortened(capsys):
    _, out, _ = run(capsys, "code", *Z4_PLANE, "--nu", "1", "--shortened")
    assert out.splitlines() == ["[1] [1] [1]", "[1] [0] [3]", "[0] [1] [3]"]


def test_code_gr42_element_syntax(capsys):
    _, out, _ = run(capsys, "code", "--p", "2", "--s", "2", "--r", "2", "--m", "1", "--nu", "0")
    assert out.split()[0] == "[1,0]"


def test_code_json_schema(capsys):
    code, out, _ = run(capsys, "code", *Z4_PLANE, "--nu", "1", "--emit", "json")
    doc = json.loads(out)
    assert code == EXIT_OK
    assert set(doc) == {"params", "nu", "column_labels", "rows", "rank"}
    assert doc["params"] == {"p": 2, "s": 2, "r": 1, "m": 2}
    assert doc["column_labels"] == ["inf", "0", "1", "2"]
    assert doc["rows"][1] == [[0], [1], [0], [3]]
    assert doc["rank"] == 3


def test_cyclic(capsys):
    code, out, _ = run(capsys, "cyclic", *Z4_CUBIC, "--nu", "1")
    assert code == EXIT_OK
    assert "generator: x^3 + [2]*x^2 + x + [3]" in out
    assert "bch_designed_distance: 3" in out
    code, out, _ = run(capsys, "cyclic", *Z4_CUBIC, "--nu", "1", "--emit", "json")
    doc = json.loads(out)
    assert doc["generator_poly"] == [[3], [1], [2], [1]]
    assert doc["rank"] == 4


def test_kerdock(capsys):
    code, out, _ = run(capsys, "kerdock", *Z4_CUBIC, "--emit", "json")
    doc = json.loads(out)
    assert code == EXIT_OK
    assert doc["rank"] == 4 and len(doc["rows"]) == 4 and len(doc["rows"][0]) == 8


def test_dual(capsys):
    code, out, _ = run(capsys, "dual", *Z4_CUBIC, "--nu", "1")
    assert code == EXIT_OK
    assert out.splitlines() == ["mu=1", "verdict: PASS"]


def test_dual_rm_lt_s(capsys):
    code, _, _ = run(capsys, "dual", "--p", "2", "--s", "3", "--r", "1", "--m", "2", "--nu", "0")
    assert code == EXIT_INVALID


def test_mindist(capsys):
    code, out, _ = run(capsys, "mindist", *Z4_CUBIC, "--nu", "1", "--shortened", "--method", "brute")
    assert code == EXIT_OK and out.splitlines()[0] == "3"
    _, out, _ = run(capsys, "mindist", *Z4_CUBIC, "--nu", "1", "--method", "formula")
    assert out.strip() == "Q=2 rem=0 designed=3"
    _, out, _ = run(capsys, "mindist", *Z4_PLANE, "--nu", "1", "--emit", "json", "--distribution")
    doc = json.loads(out)
    assert doc["min_weight"] == 2 and doc["method"] == "exhaustive" and doc["enumerated"] == 64
    assert sum(doc["distribution"].values()) == 64


def test_mindist_guard(capsys):
    code, _, err = run(capsys, "mindist", *Z4_CUBIC, "--nu", "2", "--guard", "4")
    assert code == EXIT_INVALID and "guard" in err


@pytest.mark.parametrize("argv", [
    ["code", *Z4_PLANE],
    ["code", *Z4_PLANE, "--nu", "9"],
    ["cyclic", *Z4_PLANE, "--nu", "2"],
    ["code", "--p", "2"],
    ["bogus"],
    ["tower", *Z4_PLANE, "--emit", "xml"],
])
def test_invalid_arguments_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_INVALID


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", *Z4_CUBIC)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "# verify p=2 s=2 r=1 m=3"
    assert lines[-1].startswith("# summary PASS=") and "FAIL=0" in lines[-1]
    body = lines[1:-1]
    assert not any(line.startswith(("FAIL", "SKIPPED")) for line in body)
    info = [line for line in body if line.startswith("INFO")]
    assert info and all("distance.extended" in line for line in info)


def test_verify_basis(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "basis", *Z4_CUBIC)
    assert code == EXIT_OK
    assert out.splitlines()[1].startswith("PASS")


def test_verify_skips_on_rm_lt_s(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dual", "--p", "2", "--s", "3", "--r", "1", "--m", "2")
    assert code == EXIT_OK
    assert out.splitlines()[1].startswith("SKIPPED dual")


def test_verify_failure_exit_1(capsys, monkeypatch):
    monkeypatch.setitem(verify.SUITES, "basis", lambda t, codes, guard: [Check(FAIL, "basis", "forced")])
    code, out, _ = run(capsys, "verify", "--suite", "basis", *Z4_PLANE)
    assert code == EXIT_FAIL
    assert "FAIL    basis: forced" in out


def test_output_file(capsys, tmp_path):
    target = tmp_path / "g.txt"
    code, out, _ = run(capsys, "code", *Z4_PLANE, "--nu", "1", "--output", str(target))
    assert code == EXIT_OK and out == ""
    assert target.read_text().splitlines()[1] == "[0] [1] [0] [3]"


def test_byte_identical_runs():
    argv = [sys.executable, "-m", "galoisrm", "verify", "--suite", "all", *Z4_PLANE]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b"# verify")
    argv = [sys.executable, "-m", "galoisrm", "code", "--emit", "json", "--nu", "2", *Z4_CUBIC]
    assert subprocess.run(argv, capture_output=True).stdout == subprocess.run(argv, capture_output=True).stdout
