import orjson
import pytest

from quartic_certify.main import run


@pytest.fixture(autouse=True)
def quick_oracle(monkeypatch):
    monkeypatch.setenv("QUARTIC_CIRCLE_SAMPLES", "512")


@pytest.mark.parametrize(
    "argv, code, verdict",
    [
        (["1", "0", "0", "1", "1"], 0, "positive-definite"),
        (["1", "-8", "26", "-40", "25"], 0, "positive-definite"),
        (["1", "1", "0", "1", "1"], 1, "positive-semidefinite-not-definite"),
        (["-1", "6", "-13", "24", "-36"], 1, "negative-semidefinite-not-definite"),
        (["1", "0", "-5", "0", "4"], 2, "indefinite"),
        (["-1", "0", "0", "0", "-1/4"], 0, "negative-definite"),
    ],
)
def test_json_reports_and_exit_codes(capsys, argv, code, verdict):
    assert run(["--json", *argv]) == code
    report = orjson.loads(capsys.readouterr().out)
    assert report["verdict"] == verdict
    assert report["exit_code"] == code


def test_flags_may_follow_negative_coefficients(capsys):
    assert run(["-1", "6", "-13", "24", "-36", "--json", "--no-crosscheck"]) == 1
    report = orjson.loads(capsys.readouterr().out)
    assert report["input"] == ["-1/1", "6/1", "-13/1", "24/1", "-36/1"]
    assert report["classical"] is None


def test_human_summary(capsys):
    assert run(["1", "0", "0", "1", "1"]) == 0
    out = capsys.readouterr().out
    assert "positive-definite" in out
    assert "lambda0" in out


def test_parse_error_names_the_argument(capsys):
    assert run(["1", "0", "abc", "1", "1"]) == 64
    err = capsys.readouterr().err
    assert "argument 3 (e2)" in err


def test_missing_coefficient(capsys):
    assert run(["1", "0", "0", "1"]) == 64
    assert "argument 5 (e0)" in capsys.readouterr().err


def test_precision_flag(capsys):
    assert run(["--json", "--precision", "5", "--no-crosscheck", "1", "0", "0", "1", "1"]) == 0
    assert orjson.loads(capsys.readouterr().out)["lambda0"]["decimal"] == "1.1547"


def test_no_case_flag(capsys):
    assert run(["--json", "--no-case", "1", "0", "2", "0", "1"]) == 0
    assert orjson.loads(capsys.readouterr().out)["case"] is None


def test_batch_file(tmp_path, capsys):
    batch = tmp_path / "forms.txt"
    batch.write_text("1 0 0 1 1\n# comment only\n1 0 -5 0 4\n1 0 zz 0 1\n", encoding="utf-8")
    assert run(["--batch", str(batch)]) == 64
    lines = [orjson.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [line.get("line") for line in lines[:3]] == [1, 3, 4]
    assert lines[0]["verdict"] == "positive-definite"
    assert lines[1]["verdict"] == "indefinite"
    assert lines[2]["position"] == 3
    assert lines[3]["summary"]["indefinite"] == 1
    assert lines[3]["errors"] == 1


def test_batch_rejects_extra_coefficients(tmp_path):
    batch = tmp_path / "forms.txt"
    batch.write_text("1 0 0 1 1\n", encoding="utf-8")
    assert run(["--batch", str(batch), "1"]) == 64


def test_invalid_settings_are_reported(monkeypatch, capsys):
    monkeypatch.setenv("QUARTIC_PRECISION", "0")
    assert run(["1", "0", "0", "1", "1"]) == 64
    assert "invalid settings" in capsys.readouterr().err


def test_unknown_log_level_is_a_usage_error(capsys):
    assert run(["--log-level", "bogus", "1", "0", "0", "1", "1"]) == 64
    assert "bogus" in capsys.readouterr().err


def test_unknown_log_level_in_the_environment(monkeypatch, capsys):
    monkeypatch.setenv("QUARTIC_LOG_LEVEL", "bogus")
    assert run(["1", "0", "0", "1", "1"]) == 64
    assert "invalid settings" in capsys.readouterr().err


def test_log_level_is_case_insensitive(capsys):
    assert run(["--json", "--log-level", "error", "1", "0", "0", "1", "1"]) == 0
    assert orjson.loads(capsys.readouterr().out)["verdict"] == "positive-definite"
