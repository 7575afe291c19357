"""Routes for browsing and evaluating registered identities."""

from __future__ import annotations

from typing import List

from fastapi import APIRouter, Depends, HTTPException, status

from app.api.dependencies import get_auth_dependency
from app.core.errors import ParameterError, UnknownIdentityError
from app.models.identity import EvaluationRequest, EvaluationResponse, IdentitySummary
from app.services.export import evaluation_payload
from app.services.identities import registry

router = APIRouter(prefix="/identities", tags=["identities"], dependencies=[Depends(get_auth_dependency)])


def _lookup(identity_id: str):
    try:
        return registry.get(identity_id)
    except UnknownIdentityError as exc:
        raise HTTPException(status_code=status.HTTP_404_NOT_FOUND, detail=str(exc)) from exc


@router.get("", response_model=List[IdentitySummary], summary="List registered identities")
def list_identities() -> List[IdentitySummary]:
    return registry.list_identities()


@router.get("/{identity_id}", response_model=IdentitySummary, summary="Describe one identity")
def get_identity(identity_id: str) -> IdentitySummary:
    return _lookup(identity_id).summary()


@router.post(
    "/{identity_id}/evaluate",
    response_model=EvaluationResponse,
    summary="Evaluate both sides of one identity exactly",
)
def evaluate(identity_id: str, payload: EvaluationRequest) -> EvaluationResponse:
    """Parameters travel as ``p/q`` strings; values come back the same way."""

    _lookup(identity_id)
    try:
        evaluation = registry.evaluate(identity_id, payload.params)
    except ParameterError as exc:
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(exc)) from exc
    return EvaluationResponse.model_validate(evaluation_payload(evaluation))
