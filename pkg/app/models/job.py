"""Background verification job models."""

from __future__ import annotations

from datetime import datetime, timezone
from enum import Enum
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field, PositiveInt

from app.core.config import settings
from app.models.report import SweepConfig, VerificationReport


def _now() -> datetime:
    return datetime.now(timezone.utc)


class JobStatus(str, Enum):
    """Possible states for asynchronous jobs."""

    queued = "queued"
    processing = "processing"
    completed = "completed"
    failed = "failed"


class VerificationKind(str, Enum):
    sweep = "sweep"
    chain = "chain"
    limits = "limits"
    lemma = "lemma"


class JobMetadata(BaseModel):
    """Immutable snapshot of a job; state changes produce a new copy."""

    job_id: str
    kind: VerificationKind
    status: JobStatus
    created_at: datetime = Field(default_factory=_now)
    updated_at: datetime = Field(default_factory=_now)
    error: Optional[str] = None
    payload: Dict[str, Any] = Field(default_factory=dict)
    result: Optional[Dict[str, Any]] = None

    model_config = {"frozen": True}

    def with_status(self, status: JobStatus) -> "JobMetadata":
        return self.model_copy(update={"status": status, "updated_at": _now()})

    def with_result(self, result: Dict[str, Any]) -> "JobMetadata":
        return self.model_copy(update={"result": result, "status": JobStatus.completed, "updated_at": _now()})

    def with_error(self, message: str) -> "JobMetadata":
        return self.model_copy(update={"error": message, "status": JobStatus.failed, "updated_at": _now()})


class VerificationRequest(BaseModel):
    """Payload for ``POST /verifications``; unset fields fall back to settings."""

    kind: VerificationKind = VerificationKind.sweep
    identity_ids: Union[Literal["all"], List[str]] = "all"
    samples: PositiveInt = Field(default_factory=lambda: settings.samples)
    seed: int = Field(default_factory=lambda: settings.seed, ge=0, lt=2**64)
    max_n: PositiveInt = Field(default_factory=lambda: settings.max_n)
    grid: bool = False
    grid_bound: int = Field(default_factory=lambda: settings.grid_bound, ge=0)
    order: PositiveInt = Field(default_factory=lambda: settings.jet_order, description="Jet order for limit checks.")
    s_max: PositiveInt = Field(default=5, description="Largest factor count for lemma trials.")

    def sweep_config(self) -> SweepConfig:
        return SweepConfig(
            identity_ids=self.identity_ids,
            samples=self.samples,
            seed=self.seed,
            max_n=self.max_n,
            grid=self.grid,
            grid_bound=self.grid_bound,
        )


class VerificationJobStatus(BaseModel):
    job_id: str
    kind: VerificationKind
    status: JobStatus
    created_at: datetime
    updated_at: datetime
    report: Optional[VerificationReport] = None
    error: Optional[str] = None
