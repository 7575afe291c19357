"""Schemas describing registry entries."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, List, Mapping, Optional

from pydantic import BaseModel, Field


class ParamKind(str, Enum):
    """Admissible parameter kinds."""

    nonneg_int = "nonneg-int"
    pos_int = "pos-int"
    rational = "rational"
    factor_list = "factor-list"


class IdentityFamily(str, Enum):
    saalschutz = "saalschutz"
    pre_limit = "pre-limit"
    theorem = "theorem"
    corollary = "corollary"
    relation = "relation"


@dataclass(frozen=True)
class ParamSpec:
    """One schema slot.

    ``is_index`` marks summation indices bounded by ``max_n`` when sampled;
    other integers are bounded by ``maximum`` or the grid bound.
    """

    name: str
    kind: ParamKind
    minimum: int = 0
    maximum: Optional[int] = None
    is_index: bool = False

    @property
    def is_integer(self) -> bool:
        return self.kind in (ParamKind.nonneg_int, ParamKind.pos_int)


@dataclass(frozen=True)
class Constraint:
    description: str
    predicate: Callable[[Mapping[str, Any]], bool]

    def holds(self, params: Mapping[str, Any]) -> bool:
        return bool(self.predicate(params))


class ParamSummary(BaseModel):
    name: str
    kind: ParamKind


class IdentitySummary(BaseModel):
    """Public listing row for one registry entry."""

    id: str
    title: str
    family: IdentityFamily
    params: List[ParamSummary]
    constraints: str = Field(default="", description="Human readable constraint conjunction.")
    anchor: str


class EvaluationRequest(BaseModel):
    """Payload for evaluating one identity instance; values use the ``p/q`` text form."""

    params: Dict[str, str]


class SideOutcome(BaseModel):
    value: Optional[str] = None
    pole: Optional[str] = None


class EvaluationResponse(BaseModel):
    id: str
    params: Dict[str, str]
    lhs: Optional[SideOutcome] = None
    rhs: Optional[SideOutcome] = None
    verdict: str
    violated: List[str] = Field(default_factory=list)
