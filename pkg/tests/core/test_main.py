import json

import pytest

from src.main import build_parser, main


def run(tmp_path, *argv):
    return main([*argv, "--out", str(tmp_path)])


def test_parser_lists_module_commands():
    parser = build_parser()
    args = parser.parse_args(["hyper", "validate", "chebyshev"])
    assert args.command == "hyper"
    assert args.action == "validate"
    assert args.carrier == "chebyshev"


def test_modules_command(tmp_path, capsys):
    assert run(tmp_path, "modules") == 0
    assert "counterexample" in capsys.readouterr().out


def test_validate_passes(tmp_path):
    assert run(tmp_path, "hyper", "validate", "chebyshev") == 0
    envelope = json.loads((tmp_path / "hyper_validate.json").read_text())
    assert envelope["passed"] is True
    assert envelope["command"] == "hyper"


def test_reports_are_byte_identical(tmp_path):
    first, second = tmp_path / "first", tmp_path / "second"
    for out in (first, second):
        assert run(out, "hyper", "validate", "chebyshev") == 0
        assert run(out, "norm", "luxemburg", "--support", "0", "1", "--values", "1", "-2") == 0
    for name in ("hyper_validate.json", "norm_luxemburg.json"):
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_no_aperiodic_element_exit_code(tmp_path):
    assert run(tmp_path, "cex", "build", "cyclic:5") == 6
    error = json.loads((tmp_path / "error.json").read_text())
    assert error["code"] == "no_aperiodic_element"


def test_failed_invariant_exit_code(tmp_path):
    assert run(tmp_path, "young", "seqcond", "--p1", "2", "--p2", "2", "--horizon", "1000") == 1
    assert json.loads((tmp_path / "young_seqcond.json").read_text())["passed"] is False


def test_config_error_exit_code(tmp_path):
    assert run(tmp_path, "hyper", "validate", "--config", str(tmp_path / "missing.json")) == 2
    assert json.loads((tmp_path / "error.json").read_text())["code"] == "config_error"


def test_profile_writes_csv(tmp_path):
    assert run(tmp_path, "opcrit", "profile", "integers", "--window", "8") == 0
    lines = (tmp_path / "opcrit_profile.csv").read_text().splitlines()
    assert lines[0] == "x,F_g"
    assert len(lines) == 1 + 17


def test_missing_subcommand_exits():
    with pytest.raises(SystemExit):
        main(["hyper"])
