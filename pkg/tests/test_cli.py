import json
from fractions import Fraction
from pathlib import Path

import pytest

from app import cli
from app.models.outcome import EvalOutcome, Evaluation, Verdict

T1_ARGS = ["eval", "--id", "T1", "--param", "x=1", "--param", "y=1/2", "--param", "n=1"]


def test_list(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["list"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 33
    assert lines[0].startswith("S0 ")


def test_eval_text(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(T1_ARGS) == 0
    out = capsys.readouterr().out
    assert "lhs = -7/64 (≈ -0.109375)" in out
    assert "rhs = -7/64 (≈ -0.109375)" in out
    assert "verdict = equal" in out


def test_eval_json(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(T1_ARGS + ["--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["id"] == "T1"
    assert payload["params"] == {"x": "1", "y": "1/2", "n": "1"}
    assert payload["lhs"] == {"value": "-7/64", "pole": None}
    assert payload["verdict"] == "equal"


def test_eval_reports_constraint_violation(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["eval", "--id", "C1", "--param", "p=1", "--param", "q=2", "--param", "n=1"]) == 0
    out = capsys.readouterr().out
    assert "verdict = constraint-violation" in out
    assert "violated = p ≥ q" in out


def test_eval_unequal_exits_one(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    def fake(identity_id: str, params: dict) -> Evaluation:
        return Evaluation(
            identity_id,
            {"x": Fraction(1), "y": Fraction(0), "n": 1},
            EvalOutcome.of(1),
            EvalOutcome.of(2),
            Verdict.unequal,
        )

    monkeypatch.setattr(cli, "evaluate_identity", fake)
    assert cli.main(T1_ARGS) == 1
    assert "verdict = unequal" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["verify"],
        ["verify", "--all", "--samples", "0"],
        ["eval", "--id", "T1", "--param", "novalue"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_two(argv: list[str]) -> None:
    assert cli.main(argv) == 2


def test_unknown_id_exits_two(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["eval", "--id", "T99"]) == 2
    assert "Unknown identity id: T99" in capsys.readouterr().err


def test_bad_parameter_exits_two() -> None:
    assert cli.main(["eval", "--id", "T1", "--param", "x=1", "--param", "y=0", "--param", "n=1/2"]) == 2


def test_verify_max_n_below_minimum_exits_two() -> None:
    assert cli.main(["verify", "--id", "T7", "--max-n", "1"]) == 2


def test_verify_out_matches_stdout(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["verify", "--id", "T1", "--id", "C2", "--samples", "5", "--seed", "3", "--format", "csv"]
    assert cli.main(argv) == 0
    printed = capsys.readouterr().out

    target = tmp_path / "report.csv"
    assert cli.main(argv + ["--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert target.read_bytes() == printed.encode("utf-8")
    assert printed.splitlines()[0] == "id,attempted,passed,failures,poles_skipped,constraint_skipped"


def test_verify_json_report(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["verify", "--id", "S0", "--samples", "4", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "sweep"
    assert payload["identities"][0]["id"] == "S0"
    assert payload["identities"][0]["attempted"] == 4


@pytest.mark.parametrize(
    "argv, kind",
    [
        (["lemma", "--trials", "10", "--s-max", "3"], "lemma"),
        (["limits", "--samples", "2"], "limits"),
        (["chain", "--samples", "2"], "chain"),
    ],
)
def test_other_verifications(argv: list[str], kind: str, capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(argv + ["--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["kind"] == kind
