"""Report serialisation: JSON and CSV carry exact values only, text adds decimals."""

from __future__ import annotations

import csv
import io
import json
from enum import Enum
from typing import Iterable

from app.models.identity import IdentitySummary
from app.models.outcome import EvalOutcome, Evaluation
from app.models.report import VerificationReport
from app.services.exact import decimal_approximation, format_rational
from app.services.identities import format_params


class ReportFormat(str, Enum):
    json = "json"
    csv = "csv"
    text = "text"


CSV_COLUMNS = ("id", "attempted", "passed", "failures", "poles_skipped", "constraint_skipped")


def render_json(report: VerificationReport) -> str:
    payload = report.model_dump(mode="json")
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_csv(report: VerificationReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for entry in report.identities:
        writer.writerow(
            [
                entry.id,
                entry.attempted,
                entry.passed,
                len(entry.failures),
                entry.poles_skipped,
                entry.constraint_skipped,
            ]
        )
    return buffer.getvalue()


def render_text(report: VerificationReport) -> str:
    width = max([len(entry.id) for entry in report.identities] + [2])
    lines = [
        f"{report.kind} seed={report.seed} wall_time={report.wall_time:.3f}s",
        f"{'id':<{width}}  attempted  passed  failures  poles  constraint",
    ]
    for entry in report.identities:
        lines.append(
            f"{entry.id:<{width}}  {entry.attempted:>9}  {entry.passed:>6}  {len(entry.failures):>8}"
            f"  {entry.poles_skipped:>5}  {entry.constraint_skipped:>10}"
        )
        for failure in entry.failures:
            params = " ".join(f"{k}={v}" for k, v in failure.params.items())
            lines.append(f"    FAIL {params}: lhs={failure.lhs} rhs={failure.rhs}")
    lines.append(f"failures={report.total_failures}")
    return "\n".join(lines) + "\n"


def render_report(report: VerificationReport, fmt: ReportFormat | str) -> str:
    fmt = ReportFormat(fmt)
    if fmt is ReportFormat.json:
        return render_json(report)
    if fmt is ReportFormat.csv:
        return render_csv(report)
    return render_text(report)


def describe_side(outcome: EvalOutcome | None) -> str:
    """``p/q (≈ decimal)`` for values, the pole description otherwise."""

    if outcome is None:
        return "not evaluated"
    if outcome.pole is not None:
        return outcome.pole.describe()
    assert outcome.value is not None
    return f"{format_rational(outcome.value)} (≈ {decimal_approximation(outcome.value)})"


def render_evaluation_text(evaluation: Evaluation) -> str:
    params = " ".join(f"{k}={v}" for k, v in format_params(evaluation.params).items())
    lines = [
        f"{evaluation.identity_id} {params}",
        f"lhs = {describe_side(evaluation.lhs)}",
        f"rhs = {describe_side(evaluation.rhs)}",
        f"verdict = {evaluation.verdict.value}",
    ]
    if evaluation.violated:
        lines.append(f"violated = {', '.join(evaluation.violated)}")
    return "\n".join(lines) + "\n"


def evaluation_payload(evaluation: Evaluation) -> dict:
    def side(outcome: EvalOutcome | None) -> dict | None:
        if outcome is None:
            return None
        if outcome.pole is not None:
            return {"value": None, "pole": outcome.pole.describe()}
        return {"value": format_rational(outcome.value), "pole": None}  # type: ignore[arg-type]

    return {
        "id": evaluation.identity_id,
        "params": format_params(evaluation.params),
        "lhs": side(evaluation.lhs),
        "rhs": side(evaluation.rhs),
        "verdict": evaluation.verdict.value,
        "violated": list(evaluation.violated),
    }


def render_identity_table(summaries: Iterable[IdentitySummary]) -> str:
    rows = [
        (
            s.id,
            ", ".join(f"{p.name}:{p.kind.value}" for p in s.params),
            s.constraints or "-",
            s.anchor,
        )
        for s in summaries
    ]
    widths = [max(len(r[i]) for r in rows) for i in range(3)] if rows else [0, 0, 0]
    return "".join(
        f"{r[0]:<{widths[0]}}  {r[1]:<{widths[1]}}  {r[2]:<{widths[2]}}  {r[3]}\n" for r in rows
    )
