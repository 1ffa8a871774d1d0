import json
import subprocess
import sys

import pytest

from symbpow.cli import main

ROT3 = "vars: x y z\ngens:\n  x*y^2\n  y*z^2\n  z*x^2\n  x*y*z\n"


@pytest.fixture
def rot3_file(tmp_path):
    p = tmp_path / "rot3.ideal"
    p.write_text(ROT3)
    return str(p)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_text(rot3_file, capsys):
    code, out, _ = run_cli(capsys, "info", rot3_file)
    assert code == 0
    assert "waldschmidt: 2" in out
    assert "big_height: 2" in out
    assert "ass: ['(x,y)', '(x,z)', '(y,z)']" in out


def test_info_structured(rot3_file, capsys):
    code, out, _ = run_cli(capsys, "info", rot3_file, "--format", "structured")
    assert code == 0
    payload = json.loads(out)
    assert payload["waldschmidt"] == "2"
    assert payload["sigma"] == 2


def test_scalar_commands(rot3_file, capsys):
    for cmd, expect in (("alpha", "3"), ("beta", "3"), ("bigheight", "2"),
                        ("sigma", "2"), ("waldschmidt", "2")):
        code, out, _ = run_cli(capsys, cmd, rot3_file)
        assert code == 0
        assert out.strip() == expect


def test_ass_text(rot3_file, capsys):
    code, out, _ = run_cli(capsys, "ass", rot3_file)
    assert code == 0
    assert out.splitlines() == ["(x,y)", "(x,z)", "(y,z)"]


def test_maxass_structured(rot3_file, capsys):
    code, out, _ = run_cli(capsys, "maxass", rot3_file, "--format", "structured")
    assert json.loads(out) == {"maxass": [["x", "y"], ["x", "z"], ["y", "z"]]}


def test_symbolic_round_trips(rot3_file, capsys):
    from symbpow.parsing import parse_ideal
    from symbpow.symbolic import symbolic_power

    code, out, _ = run_cli(capsys, "symbolic", rot3_file, "-m", "2")
    assert code == 0
    doc = parse_ideal(out)
    assert doc.ideal == symbolic_power(parse_ideal(ROT3).ideal, 2)


def test_polyhedron_dump(rot3_file, capsys):
    code, out, _ = run_cli(capsys, "polyhedron", rot3_file, "--dump", "--vertices")
    assert code == 0
    lines = out.splitlines()
    assert "P x y" in lines
    assert "G 0 1 0" in lines
    assert "V 2/3 2/3 2/3" in lines


def test_polyhedron_summary(rot3_file, capsys):
    code, out, _ = run_cli(capsys, "polyhedron", rot3_file)
    assert "alpha: 2" in out
    assert "components: 3" in out


def test_containment_exploration(rot3_file, capsys):
    code, out, _ = run_cli(capsys, "containment", rot3_file,
                           "--m", "3", "--s", "1", "--r", "2")
    assert code == 0  # exploratory: a failing containment is a finding
    assert "fails" in out
    assert "x^2*y^2*z^2" in out


def test_suite_exit_zero(rot3_file, capsys):
    code, out, _ = run_cli(capsys, "suite", rot3_file,
                           "--checks", "refined_containment,chudnovsky")
    assert code == 0
    assert "candidate" in out


def test_suite_structured_jsonl(rot3_file, capsys):
    code, out, _ = run_cli(capsys, "suite", rot3_file, "--checks", "chudnovsky",
                           "--format", "structured")
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[0]["type"] == "ideal"
    assert rows[0]["vars"] == ["x", "y", "z"]


def test_parse_error_is_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.ideal"
    bad.write_text("vars: x\ngens:\n  y\n")
    code, _, err = run_cli(capsys, "info", str(bad))
    assert code == 2
    assert "unknown variable" in err


def test_missing_file_is_exit_2(capsys):
    code, _, err = run_cli(capsys, "info", "/no/such/file.ideal")
    assert code == 2


def test_resource_limit_is_exit_3(tmp_path, capsys):
    names = " ".join(f"x{i}" for i in range(7))
    gens = "\n".join(f"  x{i}" for i in range(7))
    p = tmp_path / "big.ideal"
    p.write_text(f"vars: {names}\ngens:\n{gens}\n")
    code, _, err = run_cli(capsys, "polyhedron", str(p), "--vertices")
    assert code == 3
    assert "resource limit" in err


def test_unknown_check_rejected(rot3_file, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["suite", rot3_file, "--checks", "bogus"])
    assert exc.value.code == 2


def test_output_flag(rot3_file, tmp_path, capsys):
    target = tmp_path / "out.txt"
    code, out, _ = run_cli(capsys, "alpha", rot3_file, "--output", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text().strip() == "3"


def test_scan_findings_file(tmp_path, capsys):
    findings = tmp_path / "findings.jsonl"
    code, out, _ = run_cli(capsys, "scan", "--count", "3", "--seed", "2",
                           "--vars", "3", "--findings", str(findings))
    assert code == 0
    assert findings.exists()
    assert "scan summary:" in out


def test_scan_structured_deterministic(tmp_path, capsys):
    args = ["scan", "--count", "4", "--seed", "9", "--format", "structured"]
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert main(args + ["--output", str(a)]) == 0
    assert main(args + ["--output", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_console_entry_point(rot3_file):
    proc = subprocess.run([sys.executable, "-m", "symbpow", "alpha", rot3_file],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "3"


def test_timings_flag(rot3_file, capsys):
    code, out, _ = run_cli(capsys, "suite", rot3_file, "--checks", "chudnovsky",
                           "--timings")
    assert code == 0
    assert "[" in out and "s]" in out
