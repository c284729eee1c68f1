import csv
import io
import json
import subprocess
import sys

import pytest

from qmoments.cli import main
from qmoments.verify import IdentityCheck, load_all
from qmoments.verify.registry import REGISTRY, add_check


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_catalan_carlitz(capsys):
    code, out = run(capsys, "catalan", "--variant", "carlitz", "--n", "3")
    assert code == 0 and out == "1+2q+q^2+q^3\n"


def test_catalan_variants(capsys):
    _, out = run(capsys, "catalan", "--variant", "classical", "--n", "5", "--upto", "--format", "json")
    assert [v["value"] for v in json.loads(out)["values"]] == ["1", "1", "2", "5", "14", "42"]
    _, out = run(capsys, "catalan", "--variant", "fuss", "--m", "3", "--n", "4")
    assert out == "55\n"
    _, out = run(capsys, "catalan", "--variant", "andrews", "--n", "1")
    assert out.strip() == "q/((1+q)(1+q^2))"


def test_family_text(capsys):
    code, out = run(capsys, "family", "--name", "u", "--n", "2")
    assert code == 0 and out == "x^2 - q/((1+q)(1+q^2))\n"


def test_family_routes_and_formats(capsys):
    _, closed = run(capsys, "family", "--name", "F", "--n", "5", "--upto", "--format", "json")
    _, recur = run(capsys, "family", "--name", "F", "--n", "5", "--upto", "--format", "json", "--route", "recur")
    a, b = json.loads(closed), json.loads(recur)
    assert [p["poly"] for p in a["polynomials"]] == [p["poly"] for p in b["polynomials"]]
    _, out = run(capsys, "family", "--name", "fz", "--z=-q", "--n", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "poly"] and rows[1][0] == "3"


def test_family_parameters(capsys):
    _, out = run(capsys, "family", "--name", "fs", "--m", "3", "--s", "1/2", "--n", "3")
    assert out.strip() == "x^3 - 1/2"


def test_moments_all_routes(capsys):
    code, out = run(capsys, "moments", "--name", "f", "--n", "5", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["agree"]
    assert data["routes"] == ["triangle", "expand", "series"]
    assert [m["value"] for m in data["moments"]] == ["1", "1", "2", "5", "14", "42"]


def test_moments_non_orthogonal_family(capsys):
    code, out = run(capsys, "moments", "--family", "F", "--n", "2")
    assert code == 0
    assert out.splitlines()[1] == "x^2: q"


def test_series(capsys):
    _, out = run(capsys, "series", "--name", "carlitz", "--order", "3", "--format", "json")
    assert json.loads(out)["coefficients"] == ["1", "1", "1+q", "1+2q+q^2+q^3"]
    _, out = run(capsys, "series", "--name", "G", "--order", "1")
    assert out.splitlines()[1] == "u^1: 1/((1-q)(1-z))"


def test_usage_errors_exit_2(capsys):
    for argv in (
        ["family", "--name", "nope", "--n", "2"],
        ["family", "--name", "f"],
        ["family", "--name", "f", "--n", "-1"],
        ["moments", "--name", "F", "--n", "2", "--route", "triangle"],
        ["verify", "--ids", "eq-99.99"],
        ["catalan", "--variant", "fuss", "--m", "1", "--n", "2"],
        ["series", "--name", "E", "--format", "yaml"],
        ["frobnicate"],
    ):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2, argv
    capsys.readouterr()


def test_verify_exit_codes(capsys):
    code, out = run(capsys, "verify", "--ids", "eq-4.21,eq-1.3", "--order", "5")
    assert code == 0 and "2 passed, 0 failed" in out

    def bad(bound):
        yield ("n=0", 1, 2)

    load_all()
    add_check(IdentityCheck("cli-failing-probe", "poly-identity", "s1", bad, summary="probe"))
    try:
        code, out = run(capsys, "verify", "--ids", "cli-failing-probe", "--format", "json")
    finally:
        del REGISTRY["cli-failing-probe"]
    data = json.loads(out)
    assert code == 1
    assert data["checks"][0]["witness"] == {"at": "n=0", "lhs": "1", "rhs": "2"}


def test_verify_list(capsys):
    code, out = run(capsys, "verify", "--list")
    assert code == 0
    assert any(line.startswith("eq-4.21\t") for line in out.splitlines())


def test_verify_json_is_byte_identical(capsys):
    argv = ["verify", "--suite", "s4", "--order", "6", "--format", "json"]
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert first == second
    assert json.loads(first)["elapsed_ms"] is None


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qmoments", "catalan", "--variant", "carlitz", "--n", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "1+2q+q^2+q^3\n"
    proc = subprocess.run([sys.executable, "-m", "qmoments", "family"], capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and "usage" in proc.stderr
