import json
import subprocess
import sys

import pytest

from coxan.cli import fixture_names, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_json_intro1(capsys):
    code, out, _ = run(capsys, "analyze", "fixtures/intro1.cox", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["theorem_B"] == ["v1", "v2"]
    assert report["surjection_targets"] == ["Z2*Z2"]


def test_analyze_gamma1(capsys):
    code, out, _ = run(capsys, "analyze", "fixtures/gamma1.cox", "--format", "json")
    assert code == 0
    assert json.loads(out)["group_status"] == {"kind": "finite", "order": 120}
    code, out, _ = run(capsys, "analyze", "fixtures/gamma1.cox")
    assert out.startswith("group: finite of order 120")


def test_missing_file(capsys):
    code, out, err = run(capsys, "analyze", "no/such/file.cox")
    assert code == 2 and out == "" and "no such file" in err


def test_parse_error_reports_line(tmp_path, capsys):
    p = tmp_path / "bad.cox"
    p.write_text("vertex a\nvertex b\nedge a b 1\n")
    code, out, err = run(capsys, "analyze", str(p))
    assert code == 2 and out == ""
    assert "line 3" in err


def test_unknown_flag_and_command(capsys):
    with pytest.raises(SystemExit) as e:
        main(["analyze", "fixtures/intro1.cox", "--bogus"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["verify", "nonsense", "fixtures/intro1.cox"])
    assert e.value.code == 2


@pytest.mark.parametrize(
    "argv, code, out",
    [
        (["enumerate", "fixtures/gamma2.cox", "--cap", "500"], 0, "384\n"),
        (["enumerate", "fixtures/i2_3.cox", "--cap", "10"], 0, "6\n"),
        (["enumerate", "fixtures/intro1.cox", "--cap", "100"], 3, ""),
    ],
)
def test_enumerate(capsys, argv, code, out):
    c, o, err = run(capsys, *argv)
    assert c == code and o == out
    if code == 3:
        assert "group exceeds cap (infinite or raise --cap)" in err


def test_enumerate_table(capsys):
    code, out, _ = run(capsys, "enumerate", "fixtures/i2_3.cox", "--table")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "6" and len(lines) == 8
    assert lines[2] == "0 [1]: 1 2"


def test_cap_environment(capsys, monkeypatch):
    monkeypatch.setenv("COXAN_CAP", "100")
    assert run(capsys, "enumerate", "fixtures/gamma2.cox")[0] == 3
    assert run(capsys, "enumerate", "fixtures/gamma2.cox", "--cap", "400")[0] == 0


def test_verify_center_table(capsys):
    code, out, _ = run(capsys, "verify", "center-table", "--rank", "4")
    assert code == 0
    assert out and all(line.startswith("verified") for line in out.splitlines())


def test_verify_retraction(capsys):
    code, out, _ = run(capsys, "verify", "retraction", "fixtures/intro1.cox", "--v", "v1", "--w", "v2")
    assert code == 0 and out.startswith("verified")
    code, out, err = run(capsys, "verify", "retraction", "fixtures/i2_3.cox", "--v", "v", "--w", "w")
    assert code == 2 and "HypothesisViolated" in err


def test_verify_refuted_exit_code(tmp_path, capsys):
    p = tmp_path / "odd.cox"
    p.write_text("vertex v\nvertex w\nvertex x\nedge v x 3\n")
    code, _, err = run(capsys, "verify", "retraction", str(p), "--v", "v", "--w", "w")
    assert code == 2  # hypothesis enforced on the command line
    assert "not an even vertex" in err


def test_verify_other_properties(capsys):
    assert run(capsys, "verify", "special-subgroup", "fixtures/gamma1.cox", "--subset", "v1,v2")[0] == 0
    assert run(capsys, "verify", "normalizer", "fixtures/a2xa1.cox")[0] == 0
    code, out, _ = run(capsys, "verify", "conjugacy", "fixtures/intro2.cox", "--radius", "4")
    assert code == 0 and "ball of radius 4" in out
    assert run(capsys, "verify", "normalizer")[0] == 2


def test_cliques_and_classify(capsys):
    code, out, _ = run(capsys, "cliques", "fixtures/graph_example.cox")
    assert out.splitlines() == ["{v1}", "{v2}", "{v3, v4}"]
    code, out, _ = run(capsys, "classify", "fixtures/intro3.cox", "--format", "json")
    doc = json.loads(out)
    assert [c["vertices"] for c in doc["components"]] == [["v1"], ["v2", "v3", "v4"]]
    assert doc["center"]["order"] == 2
    code, out, _ = run(capsys, "classify", "fixtures/gamma3.cox")
    assert "~A3" in out and "order: infinite" in out


def test_retract(capsys):
    code, out, _ = run(capsys, "retract", "fixtures/even_square.cox", "--v", "v1", "--w", "v3", "--word", "v1 v2 v3 v4 v3")
    assert code == 0 and out == "v1\n"
    code, out, _ = run(capsys, "retract", "fixtures/even_square.cox", "--v", "v1", "--w", "v3", "--word", "v2 v4")
    assert out == "1\n"
    assert run(capsys, "retract", "fixtures/intro2.cox", "--v", "v3", "--w", "v1", "--word", "v1")[0] == 2


def test_fixtures_command(capsys, tmp_path):
    code, out, _ = run(capsys, "fixtures")
    assert out.split() == fixture_names()
    code, out, _ = run(capsys, "fixtures", "--show", "intro1.cox")
    assert out.count("vertex") == 4
    code, out, _ = run(capsys, "fixtures", "--export", str(tmp_path))
    assert sorted(p.name for p in tmp_path.iterdir()) == fixture_names()
    assert run(capsys, "fixtures", "--show", "nope.cox")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "coxan", "enumerate", "fixtures/i2_3.cox"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "6\n"
