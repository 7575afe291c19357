"""Saalschütz summation, its substituted forms and the pre-limit identities.

S1/S3/P1/P2 belong to the first family (limit z -> 2x-y+n), S4/S5/P3/P4 to
the second family (limit z -> y-n).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from app.core.errors import PoleError
from app.models.outcome import EvalOutcome
from app.services.exact import (
    as_scalar,
    contiguous_saalschutz_lhs,
    contiguous_saalschutz_rhs,
    gen_binomial,
    harmonic_number,
    quotient,
    saalschutz_lhs,
    saalschutz_rhs,
)

from .common import alternating_binomial, binomial_weight, paired_harmonic, weighted_sum


def _unwrap(outcome: EvalOutcome) -> Fraction:
    if outcome.pole is not None:
        raise PoleError(outcome.pole.factor, outcome.pole.index)
    assert outcome.value is not None
    return outcome.value


# S0 / S2 --------------------------------------------------------------------


def s0_lhs(a: Any, b: Any, c: Any, n: int) -> Fraction:
    return _unwrap(saalschutz_lhs(a, b, c, n))


def s0_rhs(a: Any, b: Any, c: Any, n: int) -> Fraction:
    return _unwrap(saalschutz_rhs(a, b, c, n))


def s2_lhs(a: Any, b: Any, c: Any, n: int) -> Fraction:
    return _unwrap(contiguous_saalschutz_lhs(a, b, c, n))


def s2_rhs(a: Any, b: Any, c: Any, n: int) -> Fraction:
    return _unwrap(contiguous_saalschutz_rhs(a, b, c, n))


# first family ---------------------------------------------------------------


def first_substituted_weight(x: Any, y: Any, z: Any, n: int, k: int, t: int) -> Any:
    """(-1)^k C(n,k) C(z+k,k) C(y+k,k) / (C(x+k,k) C(y+z-x-n+k,k)) * C(y,t)/C(y+k,t)."""

    numerator = gen_binomial(z + k, k) * gen_binomial(y + k, k)
    denominator = gen_binomial(x + k, k) * gen_binomial(y + z - x - n + k, k)
    ratio = quotient(numerator, denominator, "C(x+k,k)C(y+z-x-n+k,k)", k)
    return alternating_binomial(n, k) * ratio * binomial_weight(y, k, t)


def first_substituted_closed(x: Any, y: Any, z: Any, n: int) -> Any:
    x, y = as_scalar(x), as_scalar(y)
    numerator = gen_binomial(x - y + n, n) * gen_binomial(x - z - 1 + n, n)
    denominator = gen_binomial(x + n, n) * gen_binomial(x - y - z - 1 + n, n)
    return quotient(numerator, denominator, "C(x+n,n)C(x-y-z-1+n,n)")


def contiguous_factor_first(x: Any, y: Any, z: Any, n: int) -> Any:
    """[(x-y+1)(x-z-1) + n(x-y-z)] / [(x-y+1)(x-z-1+n)]."""

    x, y = as_scalar(x), as_scalar(y)
    numerator = (x - y + 1) * (x - z - 1) + n * (x - y - z)
    return quotient(numerator, (x - y + 1) * (x - z - 1 + n), "(x-y+1)(x-z-1+n)")


def s1_lhs(x: Any, y: Any, z: Any, n: int) -> Any:
    return weighted_sum(n, lambda k: first_substituted_weight(x, y, z, n, k, 1), lambda k: 1)


def s1_rhs(x: Any, y: Any, z: Any, n: int) -> Any:
    return first_substituted_closed(x, y, z, n)


def s3_lhs(x: Any, y: Any, z: Any, n: int) -> Any:
    return weighted_sum(n, lambda k: first_substituted_weight(x, y, z, n, k, 2), lambda k: 1)


def s3_rhs(x: Any, y: Any, z: Any, n: int) -> Any:
    return contiguous_factor_first(x, y, z, n) * first_substituted_closed(x, y, z, n)


def fragment_a(x: Any, y: Any, z: Any, n: int) -> Any:
    """[H_n(x-y) + H_n(x-z-1)] / (2x-y-z+n); tends to -H_n^<2>(x-y) at z = 2x-y+n."""

    x, y = as_scalar(x), as_scalar(y)
    numerator = harmonic_number(n, x - y) + harmonic_number(n, x - z - 1)
    return quotient(numerator, 2 * x - y - z + n, "2x-y-z+n")


def fragment_b(x: Any, y: Any, z: Any, n: int) -> Any:
    """[H_n(x) + H_n(x-y-z-1)] / (2x-y-z+n); tends to -H_n^<2>(x) at z = 2x-y+n."""

    x, y = as_scalar(x), as_scalar(y)
    numerator = harmonic_number(n, x) + harmonic_number(n, x - y - z - 1)
    return quotient(numerator, 2 * x - y - z + n, "2x-y-z+n")


def _first_pre_limit_lhs(x: Any, y: Any, z: Any, n: int, t: int) -> Any:
    x, y = as_scalar(x), as_scalar(y)
    return weighted_sum(
        n,
        lambda k: first_substituted_weight(x, y, z, n, k, t),
        lambda k: paired_harmonic(x, y + z - x - n, k),
        start=1,
    )


def p1_lhs(x: Any, y: Any, z: Any, n: int) -> Any:
    return _first_pre_limit_lhs(x, y, z, n, 1)


def p1_rhs(x: Any, y: Any, z: Any, n: int) -> Any:
    return first_substituted_closed(x, y, z, n) * (fragment_a(x, y, z, n) - fragment_b(x, y, z, n))


def p2_lhs(x: Any, y: Any, z: Any, n: int) -> Any:
    return _first_pre_limit_lhs(x, y, z, n, 2)


def p2_rhs(x: Any, y: Any, z: Any, n: int) -> Any:
    x, y = as_scalar(x), as_scalar(y)
    closed = first_substituted_closed(x, y, z, n)
    braces = fragment_a(x, y, z, n) - fragment_b(x, y, z, n)
    tail = quotient(
        n * (z + 1), (x - y + 1) ** 2 * (x - z - 1 + n) ** 2, "(x-y+1)^2(x-z-1+n)^2"
    )
    return contiguous_factor_first(x, y, z, n) * closed * braces + tail * closed


# second family --------------------------------------------------------------


def second_substituted_weight(x: Any, y: Any, z: Any, n: int, k: int, t: int) -> Any:
    """(-1)^k C(n,k) C(x+k,k) C(y+k,k) / (C(z+k,k) C(x+y-z-n+k,k)) * C(y,t)/C(y+k,t)."""

    numerator = gen_binomial(x + k, k) * gen_binomial(y + k, k)
    denominator = gen_binomial(z + k, k) * gen_binomial(x + y - z - n + k, k)
    ratio = quotient(numerator, denominator, "C(z+k,k)C(x+y-z-n+k,k)", k)
    return alternating_binomial(n, k) * ratio * binomial_weight(y, k, t)


def second_substituted_closed(x: Any, y: Any, z: Any, n: int) -> Any:
    x, y = as_scalar(x), as_scalar(y)
    numerator = gen_binomial(z - x - 1 + n, n) * gen_binomial(z - y + n, n)
    denominator = gen_binomial(z - x - y - 1 + n, n) * gen_binomial(z + n, n)
    return quotient(numerator, denominator, "C(z-x-y-1+n,n)C(z+n,n)")


def _second_shifted_closed(x: Any, y: Any, z: Any, n: int) -> Any:
    # C(z-y+n,n)/(y-z-n) rewritten as C(z-y-1+n,n)/(y-z)
    x, y = as_scalar(x), as_scalar(y)
    numerator = gen_binomial(z - x - 1 + n, n) * gen_binomial(z - y - 1 + n, n)
    denominator = gen_binomial(z - x - y - 1 + n, n) * gen_binomial(z + n, n)
    return quotient(numerator, denominator, "C(z-x-y-1+n,n)C(z+n,n)")


def contiguous_factor_second(x: Any, y: Any, z: Any, n: int) -> Any:
    """[(z-x-1)(z-y+1) + n(z-x-y)] / [(z-x-1+n)(z-y+1)]."""

    x, y = as_scalar(x), as_scalar(y)
    numerator = (z - x - 1) * (z - y + 1) + n * (z - x - y)
    return quotient(numerator, (z - x - 1 + n) * (z - y + 1), "(z-x-1+n)(z-y+1)")


def _second_brace(x: Any, y: Any, z: Any, n: int) -> Any:
    x, y = as_scalar(x), as_scalar(y)
    return harmonic_number(n, z - x - y - 1) - harmonic_number(n, z - x - 1)


def _second_tail(x: Any, y: Any, z: Any, n: int) -> Any:
    x, y = as_scalar(x), as_scalar(y)
    return quotient(n * (z + n), (z - x - 1 + n) ** 2 * (z - y + 1), "(z-x-1+n)^2(z-y+1)")


def s4_lhs(x: Any, y: Any, z: Any, n: int) -> Any:
    return weighted_sum(n, lambda k: second_substituted_weight(x, y, z, n, k, 1), lambda k: 1)


def s4_rhs(x: Any, y: Any, z: Any, n: int) -> Any:
    return second_substituted_closed(x, y, z, n)


def s5_lhs(x: Any, y: Any, z: Any, n: int) -> Any:
    return weighted_sum(n, lambda k: second_substituted_weight(x, y, z, n, k, 2), lambda k: 1)


def s5_rhs(x: Any, y: Any, z: Any, n: int) -> Any:
    return contiguous_factor_second(x, y, z, n) * second_substituted_closed(x, y, z, n)


def _second_pre_limit_lhs(x: Any, y: Any, z: Any, n: int, t: int) -> Any:
    x, y = as_scalar(x), as_scalar(y)
    return weighted_sum(
        n,
        lambda k: second_substituted_weight(x, y, z, n, k, t),
        lambda k: paired_harmonic(x, x + y - z - n, k),
        start=1,
    )


def p3_lhs(x: Any, y: Any, z: Any, n: int) -> Any:
    return _second_pre_limit_lhs(x, y, z, n, 1)


def p3_rhs(x: Any, y: Any, z: Any, n: int) -> Any:
    y = as_scalar(y)
    braces = quotient(_second_brace(x, y, z, n), y - z, "y-z")
    return _second_shifted_closed(x, y, z, n) * braces


def p4_lhs(x: Any, y: Any, z: Any, n: int) -> Any:
    return _second_pre_limit_lhs(x, y, z, n, 2)


def p4_rhs(x: Any, y: Any, z: Any, n: int) -> Any:
    y = as_scalar(y)
    shifted = _second_shifted_closed(x, y, z, n)
    head = quotient(contiguous_factor_second(x, y, z, n), y - z, "y-z")
    tail = quotient(_second_tail(x, y, z, n), y - z, "y-z")
    return head * shifted * _second_brace(x, y, z, n) - tail * shifted


def raw_p3_rhs(x: Any, y: Any, z: Any, n: int) -> Any:
    """P3's right side divided by y-z-n directly; 0/0 at z = y-n."""

    y = as_scalar(y)
    derivative = second_substituted_closed(x, y, z, n) * _second_brace(x, y, z, n)
    return quotient(derivative, y - z - n, "y-z-n")


def raw_p4_rhs(x: Any, y: Any, z: Any, n: int) -> Any:
    """P4's right side divided by y-z-n directly; 0/0 at z = y-n."""

    y = as_scalar(y)
    closed = second_substituted_closed(x, y, z, n)
    derivative = contiguous_factor_second(x, y, z, n) * closed * _second_brace(x, y, z, n)
    derivative = derivative - _second_tail(x, y, z, n) * closed
    return quotient(derivative, y - z - n, "y-z-n")
