"""Seeded sweeps over the registry, the derivative chain and the limit extractions."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping, Optional

from app.core.config import settings
from app.core.errors import ParameterError, PoleError
from app.core.logging import get_logger
from app.models.outcome import EvalOutcome, Evaluation, Verdict
from app.models.report import FailureRecord, IdentityReport, SweepConfig, VerificationReport
from app.services.exact import format_rational, harmonic_number, outcome_of
from app.services.identities import format_params, registry
from app.services.identities import saalschutz as sz
from app.services.jet import Jet, LemmaVerdict, check_product_lemma, limit_via_jet
from app.services.sampling import (
    RationalSampler,
    draw_params,
    grid_params,
    sample_rng,
)

logger = get_logger(__name__)


def _side_text(outcome: Optional[EvalOutcome]) -> Optional[str]:
    if outcome is None:
        return None
    if outcome.pole is not None:
        return outcome.pole.describe()
    return format_rational(outcome.value)  # type: ignore[arg-type]


@dataclass
class Tally:
    """Per-entry counters; ``report()`` checks the attempted decomposition."""

    id: str
    attempted: int = 0
    passed: int = 0
    poles_skipped: int = 0
    constraint_skipped: int = 0
    failures: list[FailureRecord] = field(default_factory=list)

    def passed_one(self) -> None:
        self.attempted += 1
        self.passed += 1

    def pole(self) -> None:
        self.attempted += 1
        self.poles_skipped += 1

    def constraint(self) -> None:
        self.attempted += 1
        self.constraint_skipped += 1

    def failed(self, params: Mapping[str, Any], lhs: Any = None, rhs: Any = None, detail: str | None = None) -> None:
        self.attempted += 1
        record = FailureRecord(
            params=format_params(params),
            lhs=lhs if lhs is None or isinstance(lhs, str) else format_rational(lhs),
            rhs=rhs if rhs is None or isinstance(rhs, str) else format_rational(rhs),
            detail=detail,
        )
        self.failures.append(record)
        logger.warning("sample_failed", identity_id=self.id, params=record.params, detail=detail)

    def record(self, evaluation: Evaluation) -> None:
        if evaluation.verdict is Verdict.equal:
            self.passed_one()
        elif evaluation.verdict is Verdict.pole:
            self.pole()
        elif evaluation.verdict is Verdict.constraint_violation:
            self.constraint()
        else:
            self.failed(evaluation.params, _side_text(evaluation.lhs), _side_text(evaluation.rhs))

    def report(self) -> IdentityReport:
        return IdentityReport(
            id=self.id,
            attempted=self.attempted,
            passed=self.passed,
            poles_skipped=self.poles_skipped,
            constraint_skipped=self.constraint_skipped,
            failures=self.failures,
        )


# registry sweep -------------------------------------------------------------


def resolve_ids(config: SweepConfig) -> list[str]:
    ids = registry.ids() if config.identity_ids == "all" else list(config.identity_ids)
    for identity_id in ids:
        spec = registry.get(identity_id)
        if config.max_n < spec.index_minimum():
            raise ParameterError(
                f"max_n={config.max_n} is below the smallest n admitted by {identity_id} ({spec.index_minimum()})"
            )
    return ids


def sweep_identity(identity_id: str, config: SweepConfig) -> IdentityReport:
    """All samples for one entry; a pure function of (id, config)."""

    spec = registry.get(identity_id)
    tally = Tally(identity_id)
    if config.grid and spec.is_integer_schema:
        points: Iterable[dict[str, Any]] = grid_params(spec.params, config.grid_bound)
    else:
        sampler = RationalSampler(config.rational_height_bound, config.rational_denominators)
        points = (
            draw_params(spec.params, sample_rng(config.seed, identity_id, index), sampler, config.max_n, config.grid_bound)
            for index in range(config.samples)
        )
    for params in points:
        tally.record(registry.evaluate(identity_id, params))
    report = tally.report()
    logger.info(
        "identity_swept",
        identity_id=identity_id,
        attempted=report.attempted,
        passed=report.passed,
        failures=len(report.failures),
    )
    return report


def sweep(config: SweepConfig) -> VerificationReport:
    ids = resolve_ids(config)
    logger.info("sweep_started", identities=len(ids), seed=config.seed, samples=config.samples)
    started = time.perf_counter()
    if config.workers > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            entries = list(pool.map(sweep_identity, ids, [config] * len(ids)))
    else:
        entries = [sweep_identity(identity_id, config) for identity_id in ids]
    report = VerificationReport(
        kind="sweep",
        seed=config.seed,
        config=config.model_dump(mode="json"),
        wall_time=time.perf_counter() - started,
        identities=entries,
    )
    logger.info("sweep_completed", failures=report.total_failures, wall_time=report.wall_time)
    return report


# derivative chain -----------------------------------------------------------


@dataclass(frozen=True)
class ChainLink:
    """D_x^order of the source's sides equals factor times the target's sides."""

    source: str
    target: str
    factor: int
    order: int = 1

    @property
    def id(self) -> str:
        arrow = "->" if self.order == 1 else "=>"
        return f"{self.source}{arrow}{self.target}"


CHAIN_LINKS: tuple[ChainLink, ...] = (
    ChainLink("T4", "T3", -1),
    ChainLink("T3", "T5", -2),
    ChainLink("T5", "T6", -3),
    ChainLink("T3", "T6", 6, order=2),
    ChainLink("T8", "T7", -1),
    ChainLink("T7", "T9", -2),
    ChainLink("T9", "T10", -3),
    ChainLink("T7", "T10", 6, order=2),
)


@dataclass(frozen=True)
class LinkOutcome:
    verdict: Verdict
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    expected_lhs: Optional[Fraction] = None
    expected_rhs: Optional[Fraction] = None


def check_chain_link(link: ChainLink, x: Fraction, y: Fraction, n: int) -> LinkOutcome:
    """Differentiate both source sides by jets in x and compare with the target."""

    params = {"x": x, "y": y, "n": n}
    source_eval = registry.evaluate(link.source, params)
    target_eval = registry.evaluate(link.target, params)
    verdicts = {source_eval.verdict, target_eval.verdict}
    if Verdict.constraint_violation in verdicts:
        return LinkOutcome(Verdict.constraint_violation)
    if Verdict.pole in verdicts:
        return LinkOutcome(Verdict.pole)

    source = registry.get(link.source)
    assert target_eval.lhs and target_eval.rhs
    expected = (link.factor * target_eval.lhs.value, link.factor * target_eval.rhs.value)  # type: ignore[operator]
    try:
        jet_x = Jet.variable(x, link.order)
        derived = tuple(
            _as_jet(side(x=jet_x, y=y, n=n), link.order).derivative(link.order)
            for side in (source.lhs, source.rhs)
        )
    except PoleError:
        return LinkOutcome(Verdict.pole)
    verdict = Verdict.equal if derived == expected else Verdict.unequal
    return LinkOutcome(verdict, derived[0], derived[1], expected[0], expected[1])


def _as_jet(value: Any, order: int) -> Jet:
    return value if isinstance(value, Jet) else Jet.constant(value, order)


def _sampler(height: Optional[int], denominators: Optional[list[int]]) -> RationalSampler:
    return RationalSampler(
        height or settings.rational_height_bound,
        denominators or settings.rational_denominators,
    )


def _draw_n(rng: Any, minimum: int, maximum: int) -> int:
    return int(rng.integers(minimum, max(minimum, maximum), endpoint=True))


def _relation_tallies(seed: int, samples: int, sampler: RationalSampler) -> list[Tally]:
    d1, d2 = Tally("D1"), Tally("D2")
    for index in range(samples):
        rng = sample_rng(seed, "D1", index)
        x = sampler.draw(rng)
        for r in range(9):
            for s in range(r + 1):
                d1.record(registry.evaluate("D1", {"x": x, "r": r, "s": s}))
        rng = sample_rng(seed, "D2", index)
        x, n = sampler.draw(rng), _draw_n(rng, 0, 10)
        for ell in (1, 2, 3):
            d2.record(registry.evaluate("D2", {"x": x, "n": n, "ell": ell}))
    return [d1, d2]


def verify_derivative_chain(
    seed: int,
    samples: int,
    *,
    max_n: Optional[int] = None,
    height: Optional[int] = None,
    denominators: Optional[list[int]] = None,
) -> VerificationReport:
    max_n = max_n or settings.max_n
    sampler = _sampler(height, denominators)
    started = time.perf_counter()
    logger.info("chain_started", seed=seed, samples=samples)

    tallies = _relation_tallies(seed, samples, sampler)
    for link in CHAIN_LINKS:
        tally = Tally(link.id)
        minimum = max(registry.get(link.source).index_minimum(), registry.get(link.target).index_minimum())
        for index in range(samples):
            rng = sample_rng(seed, link.id, index)
            x, y = sampler.draw(rng), sampler.draw(rng)
            n = _draw_n(rng, minimum, max_n)
            outcome = check_chain_link(link, x, y, n)
            if outcome.verdict is Verdict.equal:
                tally.passed_one()
            elif outcome.verdict is Verdict.pole:
                tally.pole()
            elif outcome.verdict is Verdict.constraint_violation:
                tally.constraint()
            else:
                tally.failed(
                    {"x": x, "y": y, "n": n},
                    outcome.lhs,
                    outcome.rhs,
                    detail=f"expected {format_rational(outcome.expected_lhs)} / {format_rational(outcome.expected_rhs)}"
                    if outcome.expected_lhs is not None and outcome.expected_rhs is not None
                    else None,
                )
        tallies.append(tally)

    return _finish("chain", seed, {"samples": samples, "max_n": max_n}, started, tallies)


# limits ---------------------------------------------------------------------

Side = Callable[[Fraction, Fraction, Any, int], Any]


@dataclass(frozen=True)
class LimitCheck:
    """Jets in z at the limit point against a theorem, or against a closed target."""

    id: str
    lhs: Side
    rhs: Side
    point: Callable[[Fraction, Fraction, int], Fraction]
    min_n: int
    theorem: Optional[str] = None
    target: Optional[Callable[[Fraction, Fraction, int], Fraction]] = None


def _first_point(x: Fraction, y: Fraction, n: int) -> Fraction:
    return 2 * x - y + n


def _second_point(x: Fraction, y: Fraction, n: int) -> Fraction:
    return y - n


LIMIT_CHECKS: tuple[LimitCheck, ...] = (
    LimitCheck("P1->T1", sz.p1_lhs, sz.p1_rhs, _first_point, 0, theorem="T1"),
    LimitCheck("P2->T2", sz.p2_lhs, sz.p2_rhs, _first_point, 0, theorem="T2"),
    LimitCheck("P3->T3", sz.p3_lhs, sz.raw_p3_rhs, _second_point, 1, theorem="T3"),
    LimitCheck("P4->T7", sz.p4_lhs, sz.raw_p4_rhs, _second_point, 2, theorem="T7"),
    LimitCheck(
        "limit-a", sz.fragment_a, sz.fragment_a, _first_point, 1,
        target=lambda x, y, n: -harmonic_number(n, x - y, 2),
    ),
    LimitCheck(
        "limit-b", sz.fragment_b, sz.fragment_b, _first_point, 1,
        target=lambda x, y, n: -harmonic_number(n, x, 2),
    ),
)


@dataclass(frozen=True)
class LimitOutcome:
    verdict: Verdict
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    expected_lhs: Optional[Fraction] = None
    expected_rhs: Optional[Fraction] = None


def check_limit(check: LimitCheck, x: Fraction, y: Fraction, n: int, order: int) -> LimitOutcome:
    if n < check.min_n:
        return LimitOutcome(Verdict.constraint_violation)
    if check.theorem is not None:
        theorem = registry.evaluate(check.theorem, {"x": x, "y": y, "n": n})
        if theorem.verdict in (Verdict.pole, Verdict.constraint_violation):
            return LimitOutcome(theorem.verdict)
        assert theorem.lhs and theorem.rhs
        expected = (theorem.lhs.value, theorem.rhs.value)
    else:
        assert check.target is not None
        target = outcome_of(lambda: check.target(x, y, n))  # type: ignore[misc]
        if target.is_pole:
            return LimitOutcome(Verdict.pole)
        expected = (target.value, target.value)

    result = limit_via_jet(
        lambda z: check.lhs(x, y, z, n),
        lambda z: check.rhs(x, y, z, n),
        check.point(x, y, n),
        order,
    )
    if result.lhs.is_pole or result.rhs.is_pole:
        return LimitOutcome(Verdict.pole)
    observed = (result.lhs.value, result.rhs.value)
    verdict = Verdict.equal if observed == expected else Verdict.unequal
    return LimitOutcome(verdict, observed[0], observed[1], expected[0], expected[1])


def verify_limits(
    seed: int,
    samples: int,
    order: Optional[int] = None,
    *,
    max_n: Optional[int] = None,
    height: Optional[int] = None,
    denominators: Optional[list[int]] = None,
) -> VerificationReport:
    order = order or settings.jet_order
    max_n = max_n or settings.max_n
    sampler = _sampler(height, denominators)
    started = time.perf_counter()
    logger.info("limits_started", seed=seed, samples=samples, order=order)

    tallies = []
    for check in LIMIT_CHECKS:
        tally = Tally(check.id)
        for index in range(samples):
            rng = sample_rng(seed, check.id, index)
            x, y = sampler.draw(rng), sampler.draw(rng)
            n = _draw_n(rng, check.min_n, max_n)
            outcome = check_limit(check, x, y, n, order)
            if outcome.verdict is Verdict.equal:
                tally.passed_one()
            elif outcome.verdict is Verdict.pole:
                tally.pole()
            elif outcome.verdict is Verdict.constraint_violation:
                tally.constraint()
            else:
                tally.failed({"x": x, "y": y, "n": n}, outcome.lhs, outcome.rhs)
        tallies.append(tally)

    return _finish("limits", seed, {"samples": samples, "order": order, "max_n": max_n}, started, tallies)


# lemma ----------------------------------------------------------------------


def verify_lemma(
    seed: int,
    trials: int,
    s_max: int = 5,
    *,
    height: Optional[int] = None,
    denominators: Optional[list[int]] = None,
) -> VerificationReport:
    if s_max < 1:
        raise ParameterError(f"s_max must be positive, got {s_max}")
    sampler = _sampler(height, denominators)
    started = time.perf_counter()
    tally = Tally("L1")
    for index in range(trials):
        rng = sample_rng(seed, "L1", index)
        x = sampler.draw(rng)
        factors = tuple(sampler.draw_factor(rng) for _ in range(_draw_n(rng, 1, s_max)))
        check = check_product_lemma(factors, x)
        if check.verdict is LemmaVerdict.passed:
            tally.passed_one()
        elif check.verdict is LemmaVerdict.skipped:
            tally.pole()
        else:
            tally.failed({"x": x, "factors": factors}, check.derivative, check.expected)
    return _finish("lemma", seed, {"trials": trials, "s_max": s_max}, started, [tally])


def _finish(
    kind: str, seed: int, config: dict[str, Any], started: float, tallies: list[Tally]
) -> VerificationReport:
    report = VerificationReport(
        kind=kind,  # type: ignore[arg-type]
        seed=seed,
        config=config,
        wall_time=time.perf_counter() - started,
        identities=[t.report() for t in tallies],
    )
    logger.info(f"{kind}_completed", failures=report.total_failures, wall_time=report.wall_time)
    return report
