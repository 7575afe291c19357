"""Summand weights and harmonic combinations shared by both families.

All helpers accept ``Fraction`` or :class:`~app.services.jet.Jet` scalars for
the continuous parameters; indices are plain ints.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Any, Callable

from app.core.errors import UnsupportedWeightError
from app.services.exact import as_scalar, gen_binomial, harmonic_number, quotient

SUPPORTED_WEIGHT_ORDERS = (1, 2)


def alternating_binomial(n: int, k: int) -> int:
    """(-1)^k C(n, k)."""

    return -comb(n, k) if k % 2 else comb(n, k)


def binomial_weight(y: Any, k: int, t: int) -> Any:
    """C(y, t) / C(y+k, t) with the common factors cancelled.

    The quotient reduces to prod_{i=max(0,t-k)}^{t-1} (y-i) / prod_{i=0}^{min(k,t)-1} (y+k-i),
    so k = 0 gives exactly 1 for every y.
    """

    if t not in SUPPORTED_WEIGHT_ORDERS:
        raise UnsupportedWeightError(t)
    y = as_scalar(y)
    numerator: Any = Fraction(1)
    for i in range(max(0, t - k), t):
        numerator = numerator * (y - i)
    denominator: Any = Fraction(1)
    for i in range(min(k, t)):
        denominator = denominator * (y + k - i)
    return quotient(numerator, denominator, "C(y+k,t)", k)


def first_family_weight(x: Any, y: Any, n: int, k: int, t: int) -> Any:
    """(-1)^k C(n,k) C(2x-y+n+k,k) C(y+k,k) / C(x+k,k)^2 * C(y,t)/C(y+k,t)."""

    x, y = as_scalar(x), as_scalar(y)
    numerator = gen_binomial(2 * x - y + n + k, k) * gen_binomial(y + k, k)
    ratio = quotient(numerator, gen_binomial(x + k, k) ** 2, "C(x+k,k)", k)
    return alternating_binomial(n, k) * ratio * binomial_weight(y, k, t)


def second_family_weight(y: Any, n: int, k: int, t: int) -> Any:
    """(-1)^k C(n,k) C(y+k,k) / C(y-n+k,k) * C(y,t)/C(y+k,t)."""

    y = as_scalar(y)
    ratio = quotient(gen_binomial(y + k, k), gen_binomial(y - n + k, k), "C(y-n+k,k)", k)
    return alternating_binomial(n, k) * ratio * binomial_weight(y, k, t)


def weighted_sum(n: int, weight: Callable[[int], Any], term: Callable[[int], Any], start: int = 0) -> Any:
    total: Any = Fraction(0)
    for k in range(start, n + 1):
        total = total + weight(k) * term(k)
    return total


def paired_harmonic(x: Any, w: Any, k: int) -> Any:
    """sum_{i=1}^k 1/((x+i)(w+i)), the difference quotient of H_k(w) - H_k(x)."""

    total: Any = Fraction(0)
    for i in range(1, k + 1):
        total = total + quotient(1, (x + i) * (w + i), "(x+i)(w+i)", i)
    return total


def binomial_ratio(x: Any, y: Any, n: int) -> Any:
    """C(x-y+n, n) / C(x+n, n)."""

    x, y = as_scalar(x), as_scalar(y)
    return quotient(gen_binomial(x - y + n, n), gen_binomial(x + n, n), "C(x+n,n)")


def harmonic_gap(x: Any, y: Any, n: int, ell: int) -> Any:
    """H_n^<ell>(x-y) - H_n^<ell>(x)."""

    x, y = as_scalar(x), as_scalar(y)
    return harmonic_number(n, x - y, ell) - harmonic_number(n, x, ell)


def classical_gap(p: int, q: int, n: int, ell: int) -> Fraction:
    """H_{p-q+n} - H_{p+n} - H_{p-q} + H_p at order ell; equals harmonic_gap at x=p, y=q."""

    return (
        harmonic_number(p - q + n, 0, ell)
        - harmonic_number(p + n, 0, ell)
        - harmonic_number(p - q, 0, ell)
        + harmonic_number(p, 0, ell)
    )


def classical(m: int, ell: int = 1) -> Fraction:
    return harmonic_number(m, 0, ell)
