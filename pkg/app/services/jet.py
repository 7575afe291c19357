"""Truncated Taylor expansions (jets) with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Iterable, Sequence

from app.core.errors import ParameterError, PoleError
from app.models.outcome import EvalOutcome, Rational
from app.services.exact import gen_binomial, harmonic_number, outcome_of


class Jet:
    """Coefficient i multiplies t**i; everything past ``order`` is dropped.

    Binary operations on jets of different order keep the lower order. A
    division whose divisor has a zero constant term cancels the common
    leading zeros first, and the quotient loses that many coefficients.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Rational | int]) -> None:
        coefficients = tuple(Fraction(c) for c in coefficients)
        if not coefficients:
            raise ParameterError("a jet needs at least one coefficient")
        self.coefficients: tuple[Fraction, ...] = coefficients

    @classmethod
    def constant(cls, value: Rational | int, order: int) -> "Jet":
        return cls([value] + [0] * order)

    @classmethod
    def variable(cls, value: Rational | int, order: int) -> "Jet":
        if order == 0:
            return cls([value])
        return cls([value, 1] + [0] * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def value(self) -> Fraction:
        return self.coefficients[0]

    def coefficient(self, index: int) -> Fraction:
        if index > self.order:
            raise ParameterError(f"coefficient {index} exceeds jet order {self.order}")
        return self.coefficients[index]

    def derivative(self, k: int) -> Fraction:
        """k-th derivative at the expansion point: k! times coefficient k."""

        return self.coefficient(k) * factorial(k)

    def valuation(self) -> int:
        """Number of leading zero coefficients (order+1 for the zero jet)."""

        for index, c in enumerate(self.coefficients):
            if c != 0:
                return index
        return len(self.coefficients)

    def truncate(self, order: int) -> "Jet":
        if order >= self.order:
            return self
        return Jet(self.coefficients[: order + 1])

    def _coerce(self, other: Any) -> "Jet | None":
        if isinstance(other, Jet):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Jet.constant(other, self.order)
        return None

    def __add__(self, other: Any) -> "Jet":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        m = min(self.order, rhs.order)
        return Jet(a + b for a, b in zip(self.coefficients[: m + 1], rhs.coefficients[: m + 1]))

    __radd__ = __add__

    def __neg__(self) -> "Jet":
        return Jet(-c for c in self.coefficients)

    def __sub__(self, other: Any) -> "Jet":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> "Jet":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Any) -> "Jet":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Jet(c * other for c in self.coefficients)
        if not isinstance(other, Jet):
            return NotImplemented
        m = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        return Jet(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(m + 1))

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet":
        a0 = self.coefficients[0]
        if a0 == 0:
            raise PoleError("jet with zero constant term")
        a = self.coefficients
        inverse = [1 / a0]
        for k in range(1, len(a)):
            acc = sum((a[j] * inverse[k - j] for j in range(1, k + 1)), Fraction(0))
            inverse.append(-acc / a0)
        return Jet(inverse)

    def __truediv__(self, other: Any) -> "Jet":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise PoleError("zero scalar divisor")
            return Jet(c / other for c in self.coefficients)
        if not isinstance(other, Jet):
            return NotImplemented
        m = min(self.order, other.order)
        numerator, divisor = self.truncate(m), other.truncate(m)
        if divisor.coefficients[0] != 0:
            return numerator * divisor.reciprocal()
        shift = divisor.valuation()
        if shift > m:
            raise PoleError("jet divisor vanishes at every retained order")
        if numerator.valuation() < shift:
            raise PoleError("leading zeros of numerator and divisor do not cancel", shift)
        reduced = Jet(numerator.coefficients[shift:])
        return reduced * Jet(divisor.coefficients[shift:]).reciprocal()

    def __rtruediv__(self, other: Any) -> "Jet":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    def __pow__(self, exponent: int) -> "Jet":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        result = Jet.constant(1, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Jet):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return "Jet([" + ", ".join(str(c) for c in self.coefficients) + "])"


class JetOp(str, Enum):
    add = "add"
    sub = "sub"
    mul = "mul"
    div = "div"
    int_pow = "int-pow"


def jet_lift(value: Rational | int, order: int, is_variable: bool = False) -> Jet:
    """Constant jet ``[value, 0, ...]`` or variable jet ``[value, 1, 0, ...]``."""

    if order < 0:
        raise ParameterError(f"jet order must be >= 0, got {order}")
    return Jet.variable(value, order) if is_variable else Jet.constant(value, order)


def jet_arith(lhs: Jet, rhs: Jet | int, op: JetOp | str) -> Jet:
    """Exact truncated arithmetic; raises PoleError for unresolvable division."""

    op = JetOp(op)
    if op is JetOp.int_pow:
        if not isinstance(rhs, int):
            raise ParameterError("int-pow expects an integer exponent")
        return lhs**rhs
    if not isinstance(rhs, Jet):
        raise ParameterError(f"{op.value} expects a jet operand")
    if lhs.order != rhs.order:
        raise ParameterError(f"jet orders differ: {lhs.order} != {rhs.order}")
    if op is JetOp.add:
        return lhs + rhs
    if op is JetOp.sub:
        return lhs - rhs
    if op is JetOp.mul:
        return lhs * rhs
    return lhs / rhs


def jet_harmonic(shift0: Rational | int, n: int, ell: int, order: int) -> Jet:
    """Expansion of t -> H_n^<ell>(shift0 + t)."""

    if n == 0:
        return Jet.constant(0, order)
    return harmonic_number(n, Jet.variable(shift0, order), ell)


def jet_gen_binomial(x0: Rational | int, r: int, s: int, order: int) -> Jet:
    """Expansion of t -> C(x0 + t + r, s)."""

    result = gen_binomial(Jet.variable(x0, order) + r, s)
    if not isinstance(result, Jet):
        return Jet.constant(result, order)
    return result


@dataclass(frozen=True)
class LinearFractionalFactor:
    """(a x + b) / (c x + d)."""

    a: Rational
    b: Rational
    c: Rational
    d: Rational

    def numerator_at(self, x: Any) -> Any:
        return self.a * x + self.b

    def denominator_at(self, x: Any) -> Any:
        return self.c * x + self.d


LinearFractionalFactors = Sequence[LinearFractionalFactor]


class LemmaVerdict(str, Enum):
    passed = "pass"
    failed = "fail"
    skipped = "skipped"


@dataclass(frozen=True)
class LemmaCheck:
    verdict: LemmaVerdict
    derivative: Fraction | None = None
    expected: Fraction | None = None
    reason: str | None = None


def lemma_product(factors: LinearFractionalFactors, x: Any) -> Any:
    result: Any = Fraction(1)
    for j, factor in enumerate(factors, start=1):
        denominator = factor.denominator_at(x)
        if isinstance(denominator, Jet):
            if denominator.value == 0:
                raise PoleError("c_j x + d_j", j)
        elif denominator == 0:
            raise PoleError("c_j x + d_j", j)
        result = result * (factor.numerator_at(x) / denominator)
    return result


def lemma_rhs(factors: LinearFractionalFactors, x0: Rational) -> Fraction:
    """prod (a_j x+b_j)/(c_j x+d_j) * sum (a_j d_j - b_j c_j)/((a_j x+b_j)(c_j x+d_j))."""

    total = Fraction(0)
    for j, factor in enumerate(factors, start=1):
        numerator, denominator = factor.numerator_at(x0), factor.denominator_at(x0)
        if numerator == 0:
            raise PoleError("a_j x + b_j", j)
        if denominator == 0:
            raise PoleError("c_j x + d_j", j)
        total += (factor.a * factor.d - factor.b * factor.c) / (numerator * denominator)
    return lemma_product(factors, x0) * total


def check_product_lemma(factors: LinearFractionalFactors, x0: Rational | int) -> LemmaCheck:
    """Compare the jet derivative of the product with the closed-form derivative."""

    x0 = Fraction(x0)
    for j, factor in enumerate(factors, start=1):
        if factor.numerator_at(x0) == 0 or factor.denominator_at(x0) == 0:
            return LemmaCheck(LemmaVerdict.skipped, reason=f"factor {j} vanishes at x0")
    derivative = lemma_product(factors, Jet.variable(x0, 1))
    if not isinstance(derivative, Jet):
        derivative = Jet.constant(derivative, 1)
    observed = derivative.derivative(1)
    expected = lemma_rhs(factors, x0)
    verdict = LemmaVerdict.passed if observed == expected else LemmaVerdict.failed
    return LemmaCheck(verdict, derivative=observed, expected=expected)


@dataclass(frozen=True)
class LimitResult:
    lhs: EvalOutcome
    rhs: EvalOutcome


def limit_via_jet(
    f_lhs: Callable[[Jet], Any],
    f_rhs: Callable[[Jet], Any],
    point: Rational | int,
    expansion_order: int,
) -> LimitResult:
    """Constant terms of both sides expanded around ``point``.

    0/0 quotients inside the expressions resolve through prefix cancellation;
    a quotient that does not resolve within ``expansion_order`` is a pole.
    """

    if expansion_order < 1:
        raise ParameterError(f"expansion order must be positive, got {expansion_order}")

    def constant_term(f: Callable[[Jet], Any]) -> EvalOutcome:
        def compute() -> Fraction:
            result = f(Jet.variable(point, expansion_order))
            return result.value if isinstance(result, Jet) else Fraction(result)

        return outcome_of(compute)

    return LimitResult(lhs=constant_term(f_lhs), rhs=constant_term(f_rhs))
