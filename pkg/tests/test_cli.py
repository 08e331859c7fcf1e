import json
import subprocess
import sys

import pytest

from tlmarkov.cli import main
from tlmarkov.diagrams import from_json, rho
from tlmarkov.suites import EXAMPLE_W, EXAMPLE_Y


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mu_worked_pair(capsys):
    code, out, _ = run(capsys, "mu", "-n", "6", "--x", EXAMPLE_Y, "--y", EXAMPLE_W, "--json")
    data = json.loads(out)
    assert code == 0
    assert data["mu"] == 1 and data["content"] == 5 and data["delta_exponent"] == 0
    assert data["trace_exponent"] == -1


@pytest.mark.parametrize("x,y,mu", [("1", "1", 0), ("", "1", 1), ("1", "3", 0)])
def test_mu_small(capsys, x, y, mu):
    code, out, _ = run(capsys, "mu", "--x", x, "--y", y, "--json")
    assert code == 0 and json.loads(out)["mu"] == mu


def test_mu_single_method(capsys):
    code, out, _ = run(capsys, "mu", "--x", "", "--y", "2", "--method", "algebra")
    assert code == 0 and "mu=1" in out and "diagram" not in out


def test_trace(capsys):
    code, out, _ = run(capsys, "trace", "-n", "6", "--word", "2 3", "--json")
    data = json.loads(out)
    assert code == 0 and data["delta_exponent"] == -2
    assert json.loads(json.dumps(data)) == data


def test_mult(capsys):
    code, out, _ = run(capsys, "mult", "--x", "1", "--y", "1")
    assert code == 0 and out.strip() == "delta b[1]"


def test_enum_count(capsys):
    code, out, _ = run(capsys, "enum", "-n", "7", "--count")
    assert code == 0 and out.strip() == "2670"
    code, out, _ = run(capsys, "enum", "-n", "6", "--max-len", "1")
    assert code == 0 and len(out.splitlines()) == 7


def test_diagram_json_roundtrip(capsys):
    code, out, _ = run(capsys, "diagram", "--word", "1 2 4 0 5", "--json")
    assert code == 0
    assert from_json(out) == rho((1, 2, 4, 0, 5), 6)
    code, out, _ = run(capsys, "diagram", "--word", "1 0")
    assert "tau_bullet:      delta^4" in out


def test_pclasses(capsys):
    code, out, _ = run(capsys, "pclasses", "-n", "7", "--json")
    data = json.loads(out)
    assert code == 0 and len(data["classes"]) == 6 and data["one_rep_per_class"]
    reps = sorted(c["representative"] for c in data["classes"])
    assert reps == [[], [0, 2, 4, 6], [0, 4, 6], [2, 4, 6], [4, 6], [6]]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "thm811", "-n", "6", "--samples", "50")
    assert code == 0 and "bridge: pass" in out
    code, out, _ = run(capsys, "verify", "worked-pair", "--json")
    assert code == 0 and json.loads(out)["passed"]


@pytest.mark.parametrize("argv", [
    ["mu", "--x", "1 2 1", "--y", ""],
    ["mu", "--x", "1 1", "--y", ""],
    ["trace", "--word", "7"],
    ["trace", "-n", "5", "--word", "1"],
    ["verify", "no-such-suite"],
    ["enum", "-n", "9"],
    ["verify", "bridge", "--samples", "0"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["mu", "--x", "1"])
    assert exc.value.code == 2


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "tlmarkov.cli", "trace", "--word", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "delta^-1" in proc.stdout
