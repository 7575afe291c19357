"""Routes for background verification sweeps."""

from __future__ import annotations

import uuid

from fastapi import APIRouter, Depends, HTTPException, status

from app.api.dependencies import get_auth_dependency
from app.core.config import settings
from app.core.errors import UnknownIdentityError
from app.models.job import JobMetadata, JobStatus, VerificationJobStatus, VerificationRequest
from app.models.report import VerificationReport
from app.services import job_store
from app.services.identities import registry
from app.tasks.verification_tasks import run_verification

router = APIRouter(prefix="/verifications", tags=["verifications"], dependencies=[Depends(get_auth_dependency)])


def _sync_with_backend(job: JobMetadata) -> JobMetadata:
    """Pick up results from a worker process; eager runs update the store directly."""

    if settings.debug or job.status in (JobStatus.completed, JobStatus.failed):
        return job
    result = run_verification.AsyncResult(job.job_id)
    if result.successful():
        return job_store.mark_completed(job.job_id, result.result)
    if result.failed():
        return job_store.mark_failed(job.job_id, str(result.result))
    return job


@router.post(
    "",
    status_code=status.HTTP_202_ACCEPTED,
    summary="Enqueue a verification job",
)
def enqueue_verification(payload: VerificationRequest) -> dict:
    if payload.identity_ids != "all":
        try:
            for identity_id in payload.identity_ids:
                registry.get(identity_id)
        except UnknownIdentityError as exc:
            raise HTTPException(status_code=status.HTTP_404_NOT_FOUND, detail=str(exc)) from exc

    job_id = f"ver_{uuid.uuid4().hex}"
    serialized_payload = payload.model_dump(mode="json")
    job_store.create_job(job_id=job_id, kind=payload.kind, payload=serialized_payload)
    run_verification.apply_async(kwargs={"job_id": job_id, "payload": serialized_payload}, task_id=job_id)
    return {"job_id": job_id, "status": JobStatus.queued}


@router.get(
    "/{job_id}",
    response_model=VerificationJobStatus,
    summary="Retrieve verification job status",
)
def get_verification_job(job_id: str) -> VerificationJobStatus:
    job = job_store.job_store.get_job(job_id)
    if job is None:
        raise HTTPException(status_code=status.HTTP_404_NOT_FOUND, detail="Job not found")
    job = _sync_with_backend(job)

    report = VerificationReport.model_validate(job.result) if job.result else None
    return VerificationJobStatus(
        job_id=job.job_id,
        kind=job.kind,
        status=job.status,
        created_at=job.created_at,
        updated_at=job.updated_at,
        report=report,
        error=job.error,
    )
