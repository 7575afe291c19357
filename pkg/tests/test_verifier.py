"""Sweeps, derivative chain, limit extraction and the product lemma."""

from fractions import Fraction

import pytest

from app.core.errors import ParameterError
from app.models.outcome import Verdict
from app.models.report import IdentityReport, SweepConfig
from app.services import verifier
from app.services.identities import registry
from app.services.verifier import CHAIN_LINKS, LIMIT_CHECKS, ChainLink, check_chain_link, check_limit

SMALL_IDS = ["S0", "S2", "P1", "P4", "T1", "T2", "T6", "T10", "C3", "C8", "D1", "D2", "L1"]


def _config(**overrides) -> SweepConfig:
    values = {"identity_ids": SMALL_IDS, "samples": 12, "seed": 7, "max_n": 4}
    values.update(overrides)
    return SweepConfig(**values)


def _limit(check_id: str):
    return next(check for check in LIMIT_CHECKS if check.id == check_id)


def test_small_sweep_has_no_failures() -> None:
    report = verifier.sweep(_config())
    assert report.kind == "sweep"
    assert report.ok
    assert [entry.id for entry in report.identities] == SMALL_IDS
    for entry in report.identities:
        assert entry.attempted == 12
        assert entry.passed + entry.poles_skipped + entry.constraint_skipped == 12


def test_sweep_is_deterministic() -> None:
    first = verifier.sweep(_config(seed=11))
    second = verifier.sweep(_config(seed=11))
    assert first.model_dump(exclude={"wall_time"}) == second.model_dump(exclude={"wall_time"})


def test_worker_pool_matches_serial_sweep() -> None:
    serial = verifier.sweep(_config(identity_ids=["T3", "T7", "C1"], workers=1))
    pooled = verifier.sweep(_config(identity_ids=["T3", "T7", "C1"], workers=2))
    assert serial.identities == pooled.identities


def test_grid_sweep_enumerates_integer_schemas() -> None:
    report = verifier.sweep(_config(identity_ids=["C1", "C7"], grid=True, grid_bound=3))
    assert report.ok
    c1, c7 = report.entry("C1"), report.entry("C7")
    assert c1.attempted == 4**3
    assert c7.attempted == 4 * 4 * 2
    assert c7.constraint_skipped > 0


class RecordingLogger:
    def __init__(self) -> None:
        self.events: list[str] = []

    def _record(self, event: str, **_: object) -> None:
        self.events.append(event)

    debug = info = warning = error = _record


def test_sweep_logs_per_identity_not_per_sample(monkeypatch: pytest.MonkeyPatch) -> None:
    recorder = RecordingLogger()
    monkeypatch.setattr(verifier, "logger", recorder)

    verifier.sweep(_config(identity_ids=["T1", "C2"], samples=3))
    few = list(recorder.events)
    recorder.events.clear()
    verifier.sweep(_config(identity_ids=["T1", "C2"], samples=40))

    assert recorder.events == few
    assert few.count("identity_swept") == 2


def test_max_n_below_index_minimum_is_rejected() -> None:
    with pytest.raises(ParameterError):
        verifier.sweep(_config(identity_ids=["T7"], max_n=1))


def test_report_counts_must_add_up() -> None:
    with pytest.raises(ValueError):
        IdentityReport(id="T1", attempted=3, passed=1)


def test_chain_link_spot_value() -> None:
    outcome = check_chain_link(ChainLink("T4", "T3", -1), Fraction(2), Fraction(1), 1)
    assert outcome.verdict is Verdict.equal
    assert outcome.lhs == outcome.expected_lhs == Fraction(1, 9)


def test_second_order_chain_link() -> None:
    link = next(link for link in CHAIN_LINKS if link.id == "T3=>T6")
    outcome = check_chain_link(link, Fraction(1, 2), Fraction(3, 5), 2)
    assert outcome.verdict in (Verdict.equal, Verdict.pole)


def test_chain_report() -> None:
    report = verifier.verify_derivative_chain(3, 4, max_n=3)
    assert report.kind == "chain"
    assert report.ok
    ids = [entry.id for entry in report.identities]
    assert ids[:2] == ["D1", "D2"]
    assert ids[2:] == [link.id for link in CHAIN_LINKS]


@pytest.mark.parametrize(
    "check_id, x, y, n, expected",
    [
        ("P1->T1", Fraction(1), Fraction(1, 2), 1, Fraction(-7, 64)),
        ("limit-a", Fraction(1), Fraction(1, 2), 1, Fraction(-4, 9)),
        ("P3->T3", Fraction(2), Fraction(1), 1, Fraction(-1, 9)),
        ("limit-b", Fraction(1), Fraction(1, 2), 1, Fraction(-1, 4)),
    ],
)
def test_limit_spot_values(check_id: str, x: Fraction, y: Fraction, n: int, expected: Fraction) -> None:
    outcome = check_limit(_limit(check_id), x, y, n, 5)
    assert outcome.verdict is Verdict.equal
    assert outcome.lhs == outcome.rhs == expected


def test_limit_below_minimum_index() -> None:
    assert check_limit(_limit("P4->T7"), Fraction(1), Fraction(1), 1, 5).verdict is Verdict.constraint_violation


def test_limits_report() -> None:
    report = verifier.verify_limits(5, 5, max_n=3)
    assert report.kind == "limits"
    assert report.ok
    assert [entry.id for entry in report.identities] == [check.id for check in LIMIT_CHECKS]


def test_lemma_report() -> None:
    report = verifier.verify_lemma(9, 30, s_max=4)
    assert report.ok
    assert report.entry("L1").attempted == 30


def test_lemma_rejects_empty_products() -> None:
    with pytest.raises(ParameterError):
        verifier.verify_lemma(9, 3, s_max=0)


@pytest.mark.slow
def test_full_registry_sweep() -> None:
    report = verifier.sweep(SweepConfig(identity_ids="all", samples=200, seed=42, max_n=6))
    assert report.ok
    assert len(report.identities) == 33


@pytest.mark.slow
def test_full_chain_and_limits() -> None:
    assert verifier.verify_derivative_chain(42, 50).ok
    assert verifier.verify_limits(42, 50).ok
    assert verifier.verify_lemma(42, 200).ok


@pytest.mark.slow
def test_saalschutz_acceptance_sweep() -> None:
    config = SweepConfig(identity_ids=["S0"], samples=500, seed=42, max_n=8, rational_height_bound=20)
    report = verifier.sweep(config)
    entry = report.entry("S0")
    assert entry.attempted == 500
    assert not entry.failures
    assert entry.passed + entry.poles_skipped == 500
    assert entry.passed > 250


@pytest.mark.slow
def test_corollary_grid_acceptance() -> None:
    ids = [f"C{i}" for i in range(1, 11)]
    report = verifier.sweep(SweepConfig(identity_ids=ids, grid=True, grid_bound=8, max_n=8))
    assert report.ok
    for entry in report.identities:
        assert entry.attempted == 9 * 9 * (9 - registry.get(entry.id).index_minimum())
        assert entry.passed > 0
