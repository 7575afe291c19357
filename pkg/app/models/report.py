"""Verification sweep configuration and report schemas."""

from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field, PositiveInt, field_validator, model_validator

from app.core.config import settings


class SweepConfig(BaseModel):
    """What to sweep and how; defaults come from application settings."""

    identity_ids: Union[Literal["all"], List[str]] = "all"
    samples: PositiveInt = Field(default_factory=lambda: settings.samples)
    seed: int = Field(default_factory=lambda: settings.seed, ge=0, lt=2**64)
    max_n: PositiveInt = Field(default_factory=lambda: settings.max_n)
    rational_height_bound: PositiveInt = Field(default_factory=lambda: settings.rational_height_bound)
    rational_denominators: List[PositiveInt] = Field(
        default_factory=lambda: list(settings.rational_denominators)
    )
    grid: bool = False
    grid_bound: int = Field(default_factory=lambda: settings.grid_bound, ge=0)
    workers: PositiveInt = Field(default_factory=lambda: settings.sweep_workers)

    @field_validator("identity_ids")
    @classmethod
    def _non_empty(cls, value: Union[str, List[str]]) -> Union[str, List[str]]:
        if isinstance(value, list) and not value:
            raise ValueError("identity_ids must name at least one identity or be 'all'")
        return value

    @field_validator("rational_denominators")
    @classmethod
    def _has_denominators(cls, value: List[int]) -> List[int]:
        if not value:
            raise ValueError("rational_denominators must not be empty")
        return value


class FailureRecord(BaseModel):
    """A sample whose two sides disagreed; values stay exact."""

    params: Dict[str, str]
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    detail: Optional[str] = None


class IdentityReport(BaseModel):
    id: str
    attempted: int = 0
    passed: int = 0
    poles_skipped: int = 0
    constraint_skipped: int = 0
    failures: List[FailureRecord] = Field(default_factory=list)

    @model_validator(mode="after")
    def _counts_add_up(self) -> "IdentityReport":
        accounted = self.passed + len(self.failures) + self.poles_skipped + self.constraint_skipped
        if accounted != self.attempted:
            raise ValueError(
                f"{self.id}: attempted={self.attempted} but outcomes account for {accounted}"
            )
        return self


class VerificationReport(BaseModel):
    kind: Literal["sweep", "chain", "limits", "lemma"] = "sweep"
    seed: int
    config: Dict[str, Any] = Field(default_factory=dict)
    wall_time: float = 0.0
    identities: List[IdentityReport] = Field(default_factory=list)

    @property
    def total_failures(self) -> int:
        return sum(len(entry.failures) for entry in self.identities)

    @property
    def ok(self) -> bool:
        return self.total_failures == 0

    def entry(self, identity_id: str) -> IdentityReport:
        for item in self.identities:
            if item.id == identity_id:
                return item
        raise KeyError(identity_id)
