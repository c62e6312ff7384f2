import json
import subprocess
import sys

import pytest

from amitsur_small.cli import main
from amitsur_small.serialize import ConfigError, check_report, parse_config
from conftest import CONFIGS

FIX3 = str(CONFIGS / "fix3.json")
FIX3S = str(CONFIGS / "fix3_split.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_fix3(tmp_path, capsys):
    out_path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "-c", FIX3, "--probes", "10", "--report", str(out_path))
    assert code == 0
    assert "verdict: NOT_AMITSUR_SMALL" in out
    data = json.loads(out_path.read_text())
    assert data["verdict"] == "NOT_AMITSUR_SMALL"
    assert data["probes"]["count"] == 10 and data["probes"]["contradiction"] == 0
    assert check_report(data) == []


def test_verify_split_exit_2(capsys):
    code, out, err = run(capsys, "verify", "-c", FIX3S, "--probes", "5")
    assert code == 2
    data = json.loads(out)
    z = data["division"]["zero_divisor"]
    assert z["identity"] == "(j - 1)*(j^2 + j + 1) = 0"
    assert z["verified"] and z["factors_nonzero"]
    assert "NOT certified" in err
    assert check_report(data) == []


def test_verify_traces_roundtrip(capsys):
    code, out, _ = run(capsys, "verify", "-c", FIX3, "--probes", "5", "--traces")
    data = json.loads(out)
    assert code == 0 and len(data["probes"]["traces"]) == 5
    assert check_report(data) == []
    data["probes"]["traces"][0]["outcome"] = "CONTRADICTION"
    assert check_report(data)


def test_tampered_report_detected(capsys):
    _, out, _ = run(capsys, "verify", "-c", FIX3, "--probes", "2")
    data = json.loads(out)
    data["contraction"]["h"][0][0] = ["1"]
    assert "contraction certificate does not recheck" in check_report(data)


def test_malformed_config(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"p": 3, "modulus": ["1", "2"], "sigma": [], "beta": "2"}')
    code, _, err = run(capsys, "verify", "-c", str(bad))
    assert code == 1 and "error" in err
    bad.write_text("{not json")
    assert run(capsys, "verify", "-c", str(bad))[0] == 1
    assert run(capsys, "verify", "-c", str(tmp_path / "missing.json"))[0] == 1


def test_unknown_config_field():
    data = json.loads((CONFIGS / "fix3.json").read_text())
    data["colour"] = "blue"
    with pytest.raises(ConfigError, match="unknown fields"):
        parse_config(data)


def test_non_automorphism_config(tmp_path, capsys):
    data = json.loads((CONFIGS / "fix3.json").read_text())
    data["sigma"] = ["1", "1"]
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps(data))
    assert run(capsys, "verify", "-c", str(cfg))[0] == 1


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 1


@pytest.mark.parametrize("element, outcome, chain", [
    ("y - i", "UNIT_IDEAL", None),
    ("y − i", "UNIT_IDEAL", None),
    ("f", "MEMBER", 0),
    ("y*f", "MEMBER", 0),
    ("x - i", "UNIT_IDEAL", 1),
])
def test_probe(capsys, element, outcome, chain):
    code, out, _ = run(capsys, "probe", "-c", FIX3, "--element", element)
    assert code == 0
    data = json.loads(out)
    assert data["outcome"] == outcome
    if chain is not None:
        assert len(data["gcd_chain"]) == chain


def test_probe_split_refused(capsys):
    code, _, err = run(capsys, "probe", "-c", FIX3S, "--element", "y - i")
    assert code == 2 and "division not certified" in err


def test_probe_parse_error(capsys):
    assert run(capsys, "probe", "-c", FIX3, "--element", "y - k")[0] == 1
    assert run(capsys, "probe", "-c", FIX3, "--element", "y +")[0] == 1


def test_factor_rational(capsys):
    code, out, _ = run(capsys, "factor", "--rational", "x^2-1")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "(x - 1)*(x + 1)"
    assert json.loads(lines[1])["irreducible"] is False
    code, out, _ = run(capsys, "factor", "--rational", "x^4+1")
    assert out.splitlines()[0] == "irreducible"
    assert run(capsys, "factor", "--rational", "x^")[0] == 1


def test_factor_over_fj(capsys):
    code, out, _ = run(capsys, "factor", "--over-fj", "-c", FIX3, "x^3 + x^2 - 2*x - 1")
    assert code == 0 and out.splitlines()[0] == "irreducible"
    code, out, _ = run(capsys, "factor", "--over-fj", "-c", FIX3, "x^3 - 2")
    assert out.splitlines()[0] == "(x - s)*(x^2 + s*x + s^2)"
    assert run(capsys, "factor", "--over-fj", "x^2")[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "amitsur_small", "factor", "--rational", "x^2-4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "(x - 2)*(x + 2)"
