import json
from pathlib import Path

from carrymul import kernels
from carrymul.cli import run

GOLDEN = Path(__file__).parent / "golden"


def test_mul_worked_example(capsys):
    assert run(["mul", "1234", "567"]) == 0
    out, err = capsys.readouterr()
    assert out == "699678\n"
    assert err == ""


def test_mul_hex(capsys):
    assert run(["mul", "ff", "ff", "--base", "16"]) == 0
    assert capsys.readouterr().out == "fe01\n"


def test_mul_schoolbook_algo(capsys):
    assert run(["mul", "1234", "567", "--algo", "schoolbook"]) == 0
    assert capsys.readouterr().out == "699678\n"


def test_trace_text(capsys):
    assert run(["trace", "1234", "567"]) == 0
    out = capsys.readouterr().out
    assert out == (GOLDEN / "trace_1234x567.txt").read_text()


def test_trace_json_matches_golden(capsys):
    assert run(["trace", "1234", "567", "--format", "json"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "trace_1234x567.json").read_text()


def test_trace_schoolbook_json(capsys):
    assert run(["trace", "12", "34", "--algo", "schoolbook", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["algorithm"] == "schoolbook"
    assert "rows" in doc


def test_verify_exhaustive(capsys):
    assert run(["verify", "--limit", "20"]) == 0
    out = capsys.readouterr().out
    assert "pairs checked: 400" in out
    assert "status: OK" in out


def test_verify_exhaustive_json(capsys):
    assert run(["verify", "--limit", "5", "--base", "16", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["pairs_checked"] == 25
    assert doc["params"]["base"] == 16


def test_verify_random(capsys):
    assert run(["verify", "--random", "--trials", "25", "--max-digits", "6", "--seed", "3"]) == 0
    out = capsys.readouterr().out
    assert "pairs checked: 25" in out


def test_verify_needs_exactly_one_mode(capsys):
    assert run(["verify"]) == 1
    assert run(["verify", "--limit", "5", "--random"]) == 1
    _, err = capsys.readouterr()
    assert "verify needs exactly one of" in err


def test_verify_random_rejects_base_flag(capsys):
    assert run(["verify", "--random", "--trials", "2", "--base", "12"]) == 1
    out, err = capsys.readouterr()
    assert out == ""
    assert "--limit mode only" in err


def test_verify_mismatch_exits_2(capsys, monkeypatch):
    real = kernels.impl

    class Stub:
        def __getattr__(self, name):
            return getattr(real, name)

        @staticmethod
        def incremental(a, b, base):
            steps, result, mults, adds = real.incremental(a, b, base)
            if a == [3] and b == [3]:
                result = [8]
            return steps, result, mults, adds

    monkeypatch.setattr(kernels, "impl", Stub())
    assert run(["verify", "--limit", "4"]) == 2
    out = capsys.readouterr().out
    assert "status: FAIL" in out
    assert "mismatches: 1" in out


def test_bench_text(capsys):
    assert run(["bench", "1234", "567", "--reps", "2"]) == 0
    out = capsys.readouterr().out
    assert "digit_mults" in out
    assert "incremental" in out and "schoolbook" in out


def test_bench_json(capsys):
    assert run(["bench", "1234", "567", "--reps", "2", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["counters"]["schoolbook"]["digit_mults"] == 12


def test_usage_error_exit_1(capsys):
    assert run([]) == 1
    assert run(["mul", "1"]) == 1
    assert run(["frobnicate"]) == 1
    out, _ = capsys.readouterr()
    assert out == ""  # diagnostics never land on stdout


def test_help_exits_0(capsys):
    assert run(["--help"]) == 0
    assert "mul" in capsys.readouterr().out


def test_operand_parse_error(capsys):
    assert run(["mul", "12x", "3"]) == 1
    out, err = capsys.readouterr()
    assert out == ""
    assert "invalid digit" in err


def test_bad_base_error(capsys):
    assert run(["mul", "1", "2", "--base", "99"]) == 1
    _, err = capsys.readouterr()
    assert "base" in err


def test_operand_invalid_for_base(capsys):
    assert run(["mul", "19", "1", "--base", "8"]) == 1
    _, err = capsys.readouterr()
    assert "position" in err
