"""Exact evaluation outcomes."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

Rational = Fraction


@dataclass(frozen=True)
class Pole:
    """A vanishing denominator factor met while evaluating an expression."""

    factor: str
    index: Optional[int] = None

    def describe(self) -> str:
        if self.index is None:
            return f"pole: {self.factor}"
        return f"pole: {self.factor} (k={self.index})"


@dataclass(frozen=True)
class EvalOutcome:
    """Either an exact value or a pole report, never both."""

    value: Optional[Rational] = None
    pole: Optional[Pole] = None

    def __post_init__(self) -> None:
        if (self.value is None) == (self.pole is None):
            raise ValueError("EvalOutcome needs exactly one of value/pole")

    @classmethod
    def of(cls, value: Rational | int) -> "EvalOutcome":
        return cls(value=Fraction(value))

    @classmethod
    def at_pole(cls, factor: str, index: Optional[int] = None) -> "EvalOutcome":
        return cls(pole=Pole(factor=factor, index=index))

    @property
    def is_pole(self) -> bool:
        return self.pole is not None


class Verdict(str, Enum):
    """Outcome of comparing the two sides of an identity."""

    equal = "equal"
    unequal = "unequal"
    pole = "pole"
    constraint_violation = "constraint-violation"


@dataclass(frozen=True)
class Evaluation:
    """Both sides of one identity instance and the comparison verdict."""

    identity_id: str
    params: dict
    lhs: Optional[EvalOutcome]
    rhs: Optional[EvalOutcome]
    verdict: Verdict
    violated: tuple[str, ...] = ()
