"""Command-line front end (``hid``).

Exit status: 0 on success, 1 when any verification fails (or ``eval`` finds
unequal sides), 2 on usage, parameter or unknown-id errors. Reports go to
stdout or ``--out``; logs go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from app.core.config import settings
from app.core.errors import IdentityEngineError
from app.core.logging import configure_logging, get_logger
from app.models.outcome import Verdict
from app.models.report import SweepConfig, VerificationReport
from app.services import verifier
from app.services.export import (
    ReportFormat,
    evaluation_payload,
    render_evaluation_text,
    render_identity_table,
    render_report,
)
from app.services.identities import evaluate_identity, list_identities

logger = get_logger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _param(text: str) -> tuple[str, str]:
    name, sep, value = text.partition("=")
    if not sep or not name.strip():
        raise argparse.ArgumentTypeError(f"expected name=value, got {text!r}")
    return name.strip(), value.strip()


def _add_report_flags(parser: argparse.ArgumentParser, default_format: str = "text") -> None:
    parser.add_argument("--seed", type=_nonnegative, default=settings.seed, help="sampling seed (env HID_SEED)")
    parser.add_argument(
        "--format", choices=[f.value for f in ReportFormat], default=default_format, help="report format"
    )
    parser.add_argument("--out", type=Path, default=None, help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hid", description="Exact verification of harmonic-number summation identities")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list registered identities")

    ev = sub.add_parser("eval", help="evaluate both sides of one identity")
    ev.add_argument("--id", dest="identity_id", required=True)
    ev.add_argument("--param", type=_param, action="append", default=[], metavar="NAME=VALUE")
    ev.add_argument("--format", choices=["text", "json"], default="text")

    vf = sub.add_parser("verify", help="seeded sweep over registry entries")
    target = vf.add_mutually_exclusive_group(required=True)
    target.add_argument("--id", dest="identity_ids", action="append", metavar="ID")
    target.add_argument("--all", action="store_true")
    vf.add_argument("--samples", type=_positive, default=settings.samples)
    vf.add_argument("--max-n", type=_positive, default=settings.max_n)
    vf.add_argument("--height", type=_positive, default=settings.rational_height_bound)
    vf.add_argument("--grid", action="store_true", help="enumerate integer-only schemas exhaustively")
    vf.add_argument("--grid-bound", type=_nonnegative, default=settings.grid_bound)
    vf.add_argument("--workers", type=_positive, default=settings.sweep_workers)
    _add_report_flags(vf)

    lm = sub.add_parser("lemma", help="product-derivative lemma on random factors")
    lm.add_argument("--s-max", type=_positive, default=5)
    lm.add_argument("--trials", type=_positive, default=100)
    _add_report_flags(lm)

    lt = sub.add_parser("limits", help="jet limits of the pre-limit identities")
    lt.add_argument("--samples", type=_positive, default=50)
    lt.add_argument("--order", type=_positive, default=settings.jet_order)
    _add_report_flags(lt)

    ch = sub.add_parser("chain", help="derivative relations and theorem chain")
    ch.add_argument("--samples", type=_positive, default=50)
    _add_report_flags(ch)
    return parser


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        out.write_text(text, encoding="utf-8")


def _finish_report(report: VerificationReport, args: argparse.Namespace) -> int:
    _emit(render_report(report, args.format), args.out)
    return EXIT_OK if report.ok else EXIT_FAILED


def _run(args: argparse.Namespace) -> int:
    if args.command == "list":
        _emit(render_identity_table(list_identities()), None)
        return EXIT_OK

    if args.command == "eval":
        evaluation = evaluate_identity(args.identity_id, dict(args.param))
        if args.format == "json":
            _emit(json.dumps(evaluation_payload(evaluation), indent=2, ensure_ascii=False) + "\n", None)
        else:
            _emit(render_evaluation_text(evaluation), None)
        return EXIT_FAILED if evaluation.verdict is Verdict.unequal else EXIT_OK

    if args.command == "verify":
        config = SweepConfig(
            identity_ids="all" if args.all else args.identity_ids,
            samples=args.samples,
            seed=args.seed,
            max_n=args.max_n,
            rational_height_bound=args.height,
            grid=args.grid,
            grid_bound=args.grid_bound,
            workers=args.workers,
        )
        return _finish_report(verifier.sweep(config), args)

    if args.command == "lemma":
        return _finish_report(verifier.verify_lemma(args.seed, args.trials, args.s_max), args)

    if args.command == "limits":
        return _finish_report(verifier.verify_limits(args.seed, args.samples, args.order), args)

    return _finish_report(verifier.verify_derivative_chain(args.seed, args.samples), args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    level = logging.INFO if args.verbose else (settings.log_level or logging.WARNING)
    configure_logging(level=level, stream=sys.stderr)
    try:
        return _run(args)
    except IdentityEngineError as exc:
        logger.error("cli_failed", command=args.command, error=str(exc))
        sys.stderr.write(f"hid: error: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        # pydantic validation of the sweep config
        sys.stderr.write(f"hid: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
