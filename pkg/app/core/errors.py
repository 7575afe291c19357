"""Error types shared across the engine."""

from __future__ import annotations


class IdentityEngineError(Exception):
    """Base class for engine failures."""


class PoleError(IdentityEngineError):
    """A denominator factor vanished during exact evaluation."""

    def __init__(self, factor: str, index: int | None = None) -> None:
        self.factor = factor
        self.index = index
        where = f" at index {index}" if index is not None else ""
        super().__init__(f"vanishing factor {factor}{where}")


class UnknownIdentityError(IdentityEngineError, KeyError):
    """Requested identity id is not in the registry."""

    def __init__(self, identity_id: str) -> None:
        self.identity_id = identity_id
        super().__init__(f"Unknown identity id: {identity_id}")

    def __str__(self) -> str:
        return f"Unknown identity id: {self.identity_id}"


class ParameterError(IdentityEngineError, ValueError):
    """Parameters do not match an identity schema or fail to parse."""


class UnsupportedWeightError(ParameterError):
    """Generic binomial weight requested for an order without a closed form."""

    def __init__(self, t: int) -> None:
        self.t = t
        super().__init__(f"weight C(y,t)/C(y+k,t) is only available for t in (1, 2), got t={t}")
