"""Exact rational building blocks: shifted factorials, binomials, harmonic numbers, 3F2 sums.

Every helper is written against the small arithmetic surface shared by
``Fraction`` and :class:`app.services.jet.Jet`, so the identity evaluators can
be fed either plain rationals or truncated Taylor expansions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Sequence

from app.core.errors import ParameterError, PoleError
from app.models.outcome import EvalOutcome, Rational

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Rational:
    """Parse the ``p/q`` (or bare ``p``) text form."""

    match = _RATIONAL_PATTERN.match(str(text))
    if not match:
        raise ParameterError(f"not a rational literal: {text!r}")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ParameterError(f"zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Rational | int) -> str:
    """Canonical text form; ``parse_rational`` inverts it exactly."""

    return str(Fraction(value))


def decimal_approximation(value: Rational, digits: int = 12) -> str:
    """Human-facing decimal rendering. Never used in machine output."""

    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
    return format(quotient, "g")


def as_scalar(value: Any) -> Any:
    """Promote Python ints so that powers and divisions stay exact."""

    if isinstance(value, bool):
        raise ParameterError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    return value


def is_zero_scalar(value: Any) -> bool:
    return isinstance(value, (int, Fraction)) and value == 0


def quotient(numerator: Any, denominator: Any, factor: str, index: int | None = None) -> Any:
    """Divide, reporting a vanishing denominator as a named pole."""

    if is_zero_scalar(denominator):
        raise PoleError(factor, index)
    try:
        return as_scalar(numerator) / denominator
    except PoleError:
        raise PoleError(factor, index) from None


def outcome_of(compute: Callable[[], Any]) -> EvalOutcome:
    """Run a raising evaluator and fold poles into an :class:`EvalOutcome`."""

    try:
        value = compute()
    except PoleError as exc:
        return EvalOutcome.at_pole(exc.factor, exc.index)
    except ZeroDivisionError:
        return EvalOutcome.at_pole("division by zero")
    return EvalOutcome.of(value)


def shifted_factorial(x: Any, n: int) -> Any:
    """Rising product (x)_n = x(x+1)...(x+n-1), with (x)_0 = 1."""

    if n < 0:
        raise ParameterError(f"shifted factorial needs n >= 0, got {n}")
    x = as_scalar(x)
    result: Any = Fraction(1)
    for i in range(n):
        result = result * (x + i)
    return result


def gen_binomial(x: Any, n: int) -> Any:
    """Generalized binomial C(x, n) = (x-n+1)_n / n!."""

    if n < 0:
        raise ParameterError(f"binomial needs n >= 0, got {n}")
    return shifted_factorial(as_scalar(x) - n + 1, n) / factorial(n)


def harmonic_number(n: int, shift: Any = 0, ell: int = 1) -> Any:
    """H_n^<ell>(shift) = sum_{k=1}^n 1/(shift+k)^ell; raises PoleError when shift+k = 0."""

    if ell < 1:
        raise ParameterError(f"harmonic order must be positive, got {ell}")
    if n < 0:
        raise ParameterError(f"harmonic upper index must be >= 0, got {n}")
    shift = as_scalar(shift)
    total: Any = Fraction(0)
    for k in range(1, n + 1):
        base = shift + k
        if is_zero_scalar(base):
            raise PoleError(f"x+{k}", k)
        try:
            total = total + base ** (-ell)
        except PoleError:
            raise PoleError(f"x+{k}", k) from None
    return total


@dataclass(frozen=True)
class HarmonicOrder:
    """Index data for H_n^<ell>(x)."""

    ell: int
    n: int
    shift: Rational = Fraction(0)

    def __post_init__(self) -> None:
        if self.ell < 1:
            raise ParameterError(f"ell must be >= 1, got {self.ell}")
        if self.n < 0:
            raise ParameterError(f"n must be >= 0, got {self.n}")


def harmonic(order: HarmonicOrder) -> EvalOutcome:
    """Exact generalized harmonic number, or the offending k as a pole."""

    return outcome_of(lambda: harmonic_number(order.n, order.shift, order.ell))


def _terminating_sum(upper: Sequence[Rational], lower: Sequence[Rational], n: int) -> Rational:
    upper = [Fraction(u) for u in upper]
    lower = [Fraction(v) for v in lower]
    term = Fraction(1)
    total = Fraction(1)
    for k in range(n):
        numerator = Fraction(k - n)
        for u in upper:
            numerator *= u + k
        if numerator == 0:
            break
        denominator = Fraction(k + 1)
        for i, v in enumerate(lower):
            if v + k == 0:
                raise PoleError(f"lower[{i}]+{k}", k + 1)
            denominator *= v + k
        term = term * numerator / denominator
        total += term
    return total


def hypergeom_terminating(
    upper: Sequence[Rational], lower: Sequence[Rational], n: int
) -> EvalOutcome:
    """Unit-argument series with -n among the upper parameters.

    ``upper`` and ``lower`` exclude the implicit ``-n`` and ``1``. Terms after
    the numerator first vanishes are zero and do not raise poles.
    """

    if n < 0:
        raise ParameterError(f"termination index must be >= 0, got {n}")
    return outcome_of(lambda: _terminating_sum(upper, lower, n))


def _saalschutz_closed(a: Rational, b: Rational, c: Rational, n: int) -> Rational:
    numerator = shifted_factorial(c - a, n) * shifted_factorial(c - b, n)
    denominator_c = shifted_factorial(c, n)
    if denominator_c == 0:
        raise PoleError("(c)_n", n)
    denominator_cab = shifted_factorial(c - a - b, n)
    if denominator_cab == 0:
        raise PoleError("(c-a-b)_n", n)
    return numerator / (denominator_c * denominator_cab)


def saalschutz_lhs(a: Rational, b: Rational, c: Rational, n: int) -> EvalOutcome:
    """Balanced 3F2(a, b, -n; c, 1+a+b-c-n; 1)."""

    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    return hypergeom_terminating([a, b], [c, 1 + a + b - c - n], n)


def saalschutz_rhs(a: Rational, b: Rational, c: Rational, n: int) -> EvalOutcome:
    """(c-a)_n (c-b)_n / [(c)_n (c-a-b)_n]."""

    return outcome_of(lambda: _saalschutz_closed(Fraction(a), Fraction(b), Fraction(c), n))


def _contiguous_closed(a: Rational, b: Rational, c: Rational, n: int) -> Rational:
    if n == 0:
        return Fraction(1)
    # {1 + n(c-a-b)/((c-a)(c-b))} (c-a)_n (c-b)_n with (c-a)(c-b) cancelled
    head = (c - a) * (c - b) + n * (c - a - b)
    numerator = head * shifted_factorial(c - a + 1, n - 1) * shifted_factorial(c - b + 1, n - 1)
    denominator_c = shifted_factorial(1 + c, n)
    if denominator_c == 0:
        raise PoleError("(1+c)_n", n)
    denominator_cab = shifted_factorial(c - a - b, n)
    if denominator_cab == 0:
        raise PoleError("(c-a-b)_n", n)
    return numerator / (denominator_c * denominator_cab)


def contiguous_saalschutz_lhs(a: Rational, b: Rational, c: Rational, n: int) -> EvalOutcome:
    """3F2(a, b, -n; 1+c, 1+a+b-c-n; 1)."""

    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    return hypergeom_terminating([a, b], [1 + c, 1 + a + b - c - n], n)


def contiguous_saalschutz_rhs(a: Rational, b: Rational, c: Rational, n: int) -> EvalOutcome:
    """Closed form of the series with lower parameters 1+c and 1+a+b-c-n."""

    return outcome_of(lambda: _contiguous_closed(Fraction(a), Fraction(b), Fraction(c), n))


def _combination(a: Rational, b: Rational, c: Rational, n: int) -> Rational:
    d = a + b - c - n
    if c == d:
        raise PoleError("c-(a+b-c-n)")
    plain = _saalschutz_closed(a, b, c, n)
    shifted = _saalschutz_closed(a, b, 1 + c, n)
    return (c * plain - d * shifted) / (c - d)


def contiguous_combination(a: Rational, b: Rational, c: Rational, n: int) -> EvalOutcome:
    """The contiguous series assembled from two plain Saalschütz closed forms.

    With d = a+b-c-n, termwise
    1/((1+c)_k (1+d)_k) = [c/((c)_k (1+d)_k) - d/((1+c)_k (d)_k)] / (c-d),
    and the two right-hand series are Saalschütz at c and at 1+c.
    """

    return outcome_of(lambda: _combination(Fraction(a), Fraction(b), Fraction(c), n))
