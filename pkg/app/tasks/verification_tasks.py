"""Celery tasks running verification sweeps."""

from __future__ import annotations

from typing import Callable

from app.core.logging import get_logger
from app.models.job import VerificationKind, VerificationRequest
from app.models.report import VerificationReport
from app.services import job_store, verifier
from app.worker.celery_app import celery_app

logger = get_logger(__name__)


def execute(request: VerificationRequest) -> VerificationReport:
    if request.kind is VerificationKind.sweep:
        return verifier.sweep(request.sweep_config())
    if request.kind is VerificationKind.chain:
        return verifier.verify_derivative_chain(request.seed, request.samples, max_n=request.max_n)
    if request.kind is VerificationKind.limits:
        return verifier.verify_limits(request.seed, request.samples, request.order, max_n=request.max_n)
    return verifier.verify_lemma(request.seed, request.samples, request.s_max)


def _track(update: Callable[..., object], job_id: str, *args: object) -> None:
    # a worker process only sees jobs created in its own memory
    try:
        update(job_id, *args)
    except KeyError:
        logger.debug("verification_job_untracked", job_id=job_id)


@celery_app.task(name="verification.run")
def run_verification(job_id: str, payload: dict) -> dict:
    """Run one verification request; the report is the task result."""

    logger.info("verification_task_started", job_id=job_id)
    try:
        _track(job_store.mark_processing, job_id)
        report = execute(VerificationRequest(**payload))
        result = report.model_dump(mode="json")
        _track(job_store.mark_completed, job_id, result)
        logger.info("verification_task_completed", job_id=job_id, failures=report.total_failures)
        return result
    except Exception as exc:
        logger.exception("verification_task_failed", job_id=job_id, error=str(exc))
        _track(job_store.mark_failed, job_id, str(exc))
        raise
