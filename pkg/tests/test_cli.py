import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from reductive_monoids.cli import main

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = [
    (["classify", "--cone", "tau_neg.json"], 0, "classify_tau_neg.out"),
    (["classify", "--cone", "tau_line.json"], 3, "classify_tau_line.out"),
    (["orbits", "--cone", "zero_monoid.json"], 0, "orbits_zero_monoid.out"),
    (["orbits", "--cone", "zero_monoid.json", "--format", "dot"], 0, "orbits_zero_monoid.dot"),
]


def run(args, group="a1z1.json"):
    out, err = io.StringIO(), io.StringIO()
    argv = [args[0], "--group", str(GOLDEN / group)] + [
        str(GOLDEN / a) if a.endswith(".json") else a for a in args[1:]
    ]
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("args,code,golden", GOLDEN_CASES)
def test_golden(args, code, golden):
    got_code, out, _ = run(args)
    assert got_code == code
    assert out == (GOLDEN / golden).read_text()


def test_console_script_matches_golden():
    proc = subprocess.run(
        [sys.executable, "-m", "reductive_monoids", "classify", "--group", "a1z1.json", "--cone", "tau_neg.json"],
        cwd=GOLDEN,
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "classify_tau_neg.out").read_text()


def test_classify_report_fields():
    _, out, _ = run(["classify", "--cone", "tau_neg.json"])
    report = json.loads(out)
    assert report["colored_cone"]["colors"] == [1]
    assert report["has_zero"] is True
    assert [o["dim"] for o in report["orbits"]] == [4, 3, 0]


def test_deterministic():
    assert run(["classify", "--cone", "tau_neg.json"]) == run(["classify", "--cone", "tau_neg.json"])


def test_classify_then_check_roundtrip(tmp_path):
    _, out, _ = run(["classify", "--cone", "tau_neg.json"])
    cc = json.loads(out)["colored_cone"]
    path = tmp_path / "cc.json"
    path.write_text(json.dumps(cc))
    code, out, _ = run(["check", "--cone", str(path)])
    assert code == 0
    report = json.loads(out)
    assert report["valid"] is True and report["colored_cone"] == cc


def test_check_refuses_non_affine(tmp_path):
    path = tmp_path / "dec.json"
    path.write_text(json.dumps({"cone": {"generators": [["-1", "-1"], ["0", "-1"]]}, "colors": []}))
    code, out, _ = run(["affine-check", "--cone", str(path)])
    assert code == 3
    assert json.loads(out)["refused"] is True


def test_colors_flag_overrides_file():
    code, out, _ = run(["check", "--cone", "zero_monoid.json", "--colors", ""])
    assert code == 3
    assert json.loads(out)["condition"] == "ii"


def test_bad_color_index_names_condition():
    code, out, _ = run(["check", "--cone", "zero_monoid.json", "--colors", "2"])
    assert code == 3 and json.loads(out)["condition"] == "i"


def test_other_subcommands():
    code, out, _ = run(["weights", "--cone", "zero_monoid.json", "--height-bound", "1"])
    assert code == 0
    report = json.loads(out)
    assert report["weight_monoid"]["hilbert_basis"] == [["0", "-1"], ["1", "-1"]]
    assert "characteristic 0" in report["note"]
    code, out, _ = run(["decolor", "--cone", "zero_monoid.json"])
    assert json.loads(out)["decoloration"]["cone"]["generators"] == [["-1", "-1"], ["0", "-1"]]
    code, out, _ = run(["witness", "--cone", "zero_monoid.json"])
    assert json.loads(out)["central_witness"] == ["0", "-2"]
    code, out, _ = run(["decompose", "--cone", "zero_monoid.json"])
    assert json.loads(out)["decomposition"]["gamma_index"] == 1


def test_text_format():
    code, out, _ = run(["orbits", "--cone", "zero_monoid.json", "--format", "text"])
    assert code == 0
    assert "dim: 4" in out and "closed: yes" in out


def test_errors_go_to_stderr_in_text_mode():
    code, out, err = run(["classify", "--cone", "tau_line.json", "--format", "text"])
    assert code == 3 and out == "" and "strictly convex" in err


@pytest.mark.parametrize(
    "args",
    [
        ["classify", "--cone", "missing.json"],
        ["classify"],
        ["nonsense"],
        ["check", "--cone", "zero_monoid.json", "--colors", "x"],
        ["classify", "--cone", "tau_neg.json", "--format", "dot"],
    ],
)
def test_malformed_input(args):
    code, out, _ = run(args)
    assert code == 2


def test_malformed_json_report(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out, _ = run(["classify", "--cone", str(bad)])
    assert code == 2 and json.loads(out)["error"] == "InputError"


def test_weyl_bound_exit_code(tmp_path, monkeypatch):
    g = tmp_path / "a3.json"
    g.write_text(json.dumps({"factors": [{"type": "A", "rank": 3}], "central_rank": 1}))
    c = tmp_path / "c.json"
    c.write_text(json.dumps({"generators": [["0", "0", "0", "1"]]}))
    monkeypatch.setenv("MONOID_WEYL_BOUND", "5")
    out = io.StringIO()
    code = main(["witness", "--group", str(g), "--cone", str(c)], out, io.StringIO())
    assert code == 4
    assert json.loads(out.getvalue())["error"] == "WeylBoundExceeded"
    assert os.environ["MONOID_WEYL_BOUND"] == "5"
