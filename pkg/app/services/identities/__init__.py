"""Identity registry: every catalogued summation as an exact LHS/RHS pair."""

from __future__ import annotations

from typing import Any, Mapping

from app.models.identity import IdentitySummary
from app.models.outcome import Evaluation

from .base import (
    IdentityRegistry,
    IdentitySpec,
    coerce_params,
    evaluate_spec,
    format_factor_list,
    format_params,
    parse_factor_list,
)
from .catalogue import build_registry
from .consistency import COROLLARY_LINKS, ConsistencyResult, CorollaryLink, corollary_consistency

registry = build_registry()


def list_identities() -> list[IdentitySummary]:
    return registry.list_identities()


def evaluate_identity(identity_id: str, params: Mapping[str, Any]) -> Evaluation:
    return registry.evaluate(identity_id, params)


__all__ = [
    "COROLLARY_LINKS",
    "ConsistencyResult",
    "CorollaryLink",
    "IdentityRegistry",
    "IdentitySpec",
    "build_registry",
    "coerce_params",
    "corollary_consistency",
    "evaluate_identity",
    "evaluate_spec",
    "format_factor_list",
    "format_params",
    "list_identities",
    "parse_factor_list",
    "registry",
]
