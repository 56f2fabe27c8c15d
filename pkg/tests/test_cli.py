import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

from cliffpin.cli import main, render

DATA = Path(__file__).parent / "data"
EXACT = re.compile(r"^-?\d+(/\d+)?([+-]\d+(/\d+)?\*i)?$")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def _entries(obj):
    if isinstance(obj, list):
        for x in obj:
            yield from _entries(x)
    elif isinstance(obj, str):
        yield obj


@pytest.mark.parametrize(
    "argv",
    [
        ("classify", "--p", "1", "--q", "3", "--basis", "spacetime"),
        ("classify", "--p", "2", "--q", "2"),
        ("classify", "--p", "0", "--q", "3"),
        ("quotient", "--p", "5", "--q", "0", "--field", "complex"),
        ("rep", "--p", "4", "--q", "1", "--basis", "dirac"),
        ("table", "--max-n", "4"),
    ],
)
def test_json_round_trip_and_determinism(capsys, argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == "1" and doc["command"] == argv[0]
    assert render(doc) + "\n" == out
    code2, out2, _ = run(capsys, *argv, "--json")
    assert out2 == out


def test_frozen_outputs(capsys):
    for name, argv in (
        ("classify_spacetime.json", ("classify", "--p", "1", "--q", "3", "--basis", "spacetime")),
        ("rep_dirac.json", ("rep", "--p", "4", "--q", "1", "--basis", "dirac")),
        ("table_real_max8.json", ("table", "--max-n", "8")),
    ):
        _, out, _ = run(capsys, *argv, "--json")
        assert out == (DATA / name).read_text()


def test_matrix_entries_are_exact_strings(capsys):
    _, out, _ = run(capsys, "rep", "--p", "1", "--q", "3", "--basis", "spacetime", "--json")
    payload = json.loads(out)["payload"]
    for key in ("W", "E", "C"):
        assert all(EXACT.match(v) for v in _entries(payload[key]))
    assert payload["c"] == 1 and payload["E_factors"] == [2, 4]


def test_spacetime_classification(capsys):
    _, out, _ = run(capsys, "classify", "--p", "1", "--q", "3", "--basis", "spacetime", "--json")
    p = json.loads(out)["payload"]
    assert p["abc_text"] == "-,-,+" and p["group_C_abc"] == "Z4xZ2" and not p["cliffordian"]


def test_w_prime_null_when_unavailable(capsys):
    _, out, _ = run(capsys, "rep", "--p", "2", "--q", "0", "--json")
    assert json.loads(out)["payload"]["W_prime"] is None


def test_text_table_layout(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "2")
    lines = out.splitlines()
    assert code == 0
    assert "a b c" in lines[0] and "C^{a,b,c}" in lines[0] and "PT=±TP" in lines[0]
    assert lines[3].split()[:5] == ["2", "0", "2", "-", "+"]


@pytest.mark.parametrize(
    "argv",
    [
        ("nonsense",),
        ("classify", "--p", "1"),
        ("classify", "--p", "3", "--q", "0"),  # omega^2 = -1 over the reals
        ("rep", "--p", "3", "--q", "0"),
        ("rep", "--p", "2", "--q", "2", "--basis", "dirac"),
        ("table", "--max-n", "0"),
        ("classify", "--p", "-1", "--q", "3"),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_exit_matches_report(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "2", "--json")
    report = json.loads(out)["payload"]
    assert code == (0 if report["passed"] else 1)
    conventions = {s["name"]: s["convention"] for s in report["suites"]}
    assert conventions["claim: transfer table"] == "minus_first"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cliffpin", "classify", "--p", "2", "--q", "0"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("Pin^{-,+,+}(2,0)")
