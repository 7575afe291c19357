"""Registry entries, parameter coercion and side-by-side evaluation."""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

from app.core.errors import ParameterError, UnknownIdentityError
from app.models.identity import (
    Constraint,
    IdentityFamily,
    IdentitySummary,
    ParamKind,
    ParamSpec,
    ParamSummary,
)
from app.models.outcome import EvalOutcome, Evaluation, Verdict
from app.services.exact import format_rational, outcome_of, parse_rational
from app.services.jet import LinearFractionalFactor


Evaluator = Callable[..., Any]


@dataclass(frozen=True)
class IdentitySpec:
    """One catalogued identity: schema, constraints and both evaluators.

    Evaluators take the parameters as keyword arguments and raise
    ``PoleError`` on a vanishing denominator.
    """

    id: str
    title: str
    family: IdentityFamily
    anchor: str
    params: tuple[ParamSpec, ...]
    lhs: Evaluator
    rhs: Evaluator
    constraints: tuple[Constraint, ...] = field(default=())

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params)

    @property
    def constraint_text(self) -> str:
        return ", ".join(c.description for c in self.constraints)

    @property
    def is_integer_schema(self) -> bool:
        return all(p.is_integer for p in self.params)

    def index_minimum(self) -> int:
        """Smallest admissible summation index; 0 when the entry has none."""

        return max((p.minimum for p in self.params if p.is_index), default=0)

    def violated(self, params: Mapping[str, Any]) -> tuple[str, ...]:
        return tuple(c.description for c in self.constraints if not c.holds(params))

    def evaluate_lhs(self, params: Mapping[str, Any]) -> EvalOutcome:
        return outcome_of(lambda: self.lhs(**params))

    def evaluate_rhs(self, params: Mapping[str, Any]) -> EvalOutcome:
        return outcome_of(lambda: self.rhs(**params))

    def summary(self) -> IdentitySummary:
        return IdentitySummary(
            id=self.id,
            title=self.title,
            family=self.family,
            params=[ParamSummary(name=p.name, kind=p.kind) for p in self.params],
            constraints=self.constraint_text,
            anchor=self.anchor,
        )


def parse_factor_list(text: str) -> tuple[LinearFractionalFactor, ...]:
    """``"a:b:c:d,a:b:c:d"`` into linear fractional factors."""

    factors = []
    for chunk in str(text).split(","):
        if not chunk.strip():
            continue
        parts = chunk.split(":")
        if len(parts) != 4:
            raise ParameterError(f"factor needs four fields a:b:c:d, got {chunk!r}")
        a, b, c, d = (parse_rational(part) for part in parts)
        if c == 0 and d == 0:
            raise ParameterError(f"factor denominator vanishes identically: {chunk!r}")
        factors.append(LinearFractionalFactor(a, b, c, d))
    return tuple(factors)


def format_factor_list(factors: Sequence[LinearFractionalFactor]) -> str:
    return ",".join(
        ":".join(format_rational(v) for v in (f.a, f.b, f.c, f.d)) for f in factors
    )


def _coerce_value(spec: ParamSpec, raw: Any) -> Any:
    if spec.kind is ParamKind.factor_list:
        if isinstance(raw, str):
            factors = parse_factor_list(raw)
        else:
            factors = tuple(raw)
        if not all(isinstance(f, LinearFractionalFactor) for f in factors):
            raise ParameterError(f"{spec.name} expects linear fractional factors")
        if not spec.minimum <= len(factors) <= (spec.maximum or len(factors)):
            raise ParameterError(f"{spec.name} takes {spec.minimum} to {spec.maximum} factors, got {len(factors)}")
        return factors

    if isinstance(raw, bool):
        raise ParameterError(f"{spec.name} must be a number, got a boolean")
    value = Fraction(raw) if isinstance(raw, (int, Fraction)) else parse_rational(raw)
    if spec.kind is ParamKind.rational:
        return value
    if value.denominator != 1:
        raise ParameterError(f"{spec.name} must be an integer, got {format_rational(value)}")
    integer = value.numerator
    floor = 1 if spec.kind is ParamKind.pos_int else 0
    if integer < floor:
        raise ParameterError(f"{spec.name} must be >= {floor}, got {integer}")
    return integer


def coerce_params(spec: IdentitySpec, raw: Mapping[str, Any]) -> dict[str, Any]:
    """Validate names against the schema and convert text values.

    Kind-level checks (integrality, sign) raise ``ParameterError``; the
    entry's own constraints are left to :func:`evaluate_spec`.
    """

    expected, given = set(spec.param_names), set(raw)
    if expected != given:
        missing = sorted(expected - given)
        unknown = sorted(given - expected)
        raise ParameterError(
            f"{spec.id} expects parameters {', '.join(spec.param_names)}"
            + (f"; missing {', '.join(missing)}" if missing else "")
            + (f"; unknown {', '.join(unknown)}" if unknown else "")
        )
    return {p.name: _coerce_value(p, raw[p.name]) for p in spec.params}


def evaluate_spec(spec: IdentitySpec, params: Mapping[str, Any]) -> Evaluation:
    """Check constraints, then evaluate both sides exactly."""

    violated = spec.violated(params)
    if violated:
        return Evaluation(spec.id, dict(params), None, None, Verdict.constraint_violation, violated)

    lhs = spec.evaluate_lhs(params)
    rhs = spec.evaluate_rhs(params)
    if lhs.is_pole or rhs.is_pole:
        verdict = Verdict.pole
    elif lhs.value == rhs.value:
        verdict = Verdict.equal
    else:
        verdict = Verdict.unequal
    return Evaluation(spec.id, dict(params), lhs, rhs, verdict)


class IdentityRegistry:
    """Immutable, ordered catalogue keyed by identity id."""

    def __init__(self, specs: Iterable[IdentitySpec]) -> None:
        entries: OrderedDict[str, IdentitySpec] = OrderedDict()
        for spec in specs:
            if spec.id in entries:
                raise ValueError(f"duplicate identity id {spec.id}")
            entries[spec.id] = spec
        self._entries = entries

    def __iter__(self) -> Iterator[IdentitySpec]:
        return iter(self._entries.values())

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, identity_id: object) -> bool:
        return identity_id in self._entries

    def ids(self) -> list[str]:
        return list(self._entries)

    def get(self, identity_id: str) -> IdentitySpec:
        try:
            return self._entries[identity_id]
        except KeyError:
            raise UnknownIdentityError(identity_id) from None

    def list_identities(self) -> list[IdentitySummary]:
        return [spec.summary() for spec in self]

    def evaluate(self, identity_id: str, params: Mapping[str, Any]) -> Evaluation:
        spec = self.get(identity_id)
        return evaluate_spec(spec, coerce_params(spec, params))


def format_param(value: Any) -> str:
    if isinstance(value, tuple):
        return format_factor_list(value)
    return format_rational(value)


def format_params(params: Mapping[str, Any]) -> dict[str, str]:
    """Text form of coerced parameters, in schema order."""

    return {name: format_param(value) for name, value in params.items()}
