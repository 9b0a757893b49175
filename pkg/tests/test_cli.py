import subprocess
import sys

import pytest

from ghz_turbulence.cli import main


def test_sweep_to_file(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["sweep", "--steps", "3", "--arms", "1,12", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("#") and len(lines) == 2 + 6


def test_sweep_to_stdout(capsys):
    assert main(["sweep", "--steps", "2", "--arms", "123", "--mode", "conjugate"]) == 0
    text = capsys.readouterr().out
    assert ",123,conjugate," in text


def test_config_file_and_flag_override(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text('{"steps": 4, "arm_sets": ["2"], "entropy_variant": "generalized"}')
    out = tmp_path / "s.csv"
    assert main(["sweep", "--config", str(cfg), "--steps", "2", "--out", str(out)]) == 0
    body = out.read_text().splitlines()
    assert '"entropy_variant": "generalized"' in body[0]
    assert len(body) == 4


@pytest.mark.parametrize("argv", [
    ["sweep", "--theta-max", "5"],
    ["sweep", "--arms", "4"],
    ["sweep", "--steps", "0"],
    ["sweep", "--config", "/nonexistent/cfg.json"],
    ["sweep", "--workers", "0"],
    ["werner-curve", "--steps", "1"],
])
def test_configuration_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert "configuration error" in capsys.readouterr().err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--mode", "nope"])
    assert exc.value.code == 2


def test_werner_curve(tmp_path):
    out = tmp_path / "w.csv"
    assert main(["werner-curve", "--qubits", "2", "--steps", "5", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[1] == "p,linear_entropy,tangle" and len(lines) == 7


def test_verify_passes(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    for name in ("wootters_closed_form", "ckw_monogamy_1000_random"):
        assert f"PASS  {name}" in out


def test_verify_failure_exits_1(monkeypatch):
    from ghz_turbulence import cli
    monkeypatch.setattr(cli, "verify", lambda stream=None: False)
    assert main(["verify"]) == 1


def test_module_entry_point(tmp_path):
    out = tmp_path / "w.csv"
    proc = subprocess.run([sys.executable, "-m", "ghz_turbulence", "werner-curve", "--qubits", "3",
                           "--steps", "3", "--out", str(out)], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert out.exists()
