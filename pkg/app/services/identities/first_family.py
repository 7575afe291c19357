"""Second-order harmonic sums weighted by C(2x-y+n+k,k) C(y+k,k) / C(x+k,k)^2."""

from __future__ import annotations

from typing import Any

from app.services.exact import as_scalar, harmonic_number, quotient

from .common import (
    binomial_ratio,
    classical,
    first_family_weight,
    harmonic_gap,
    weighted_sum,
)


def _theorem_sum(x: Any, y: Any, n: int, t: int) -> Any:
    # k = 0 contributes H_0 = 0
    return weighted_sum(
        n,
        lambda k: first_family_weight(x, y, n, k, t),
        lambda k: harmonic_number(k, x, 2),
        start=1,
    )


def _corollary_sum(p: int, q: int, n: int, t: int) -> Any:
    return weighted_sum(n, lambda k: first_family_weight(p, q, n, k, t), lambda k: classical(p + k, 2))


def _contiguous_weights(x: Any, y: Any, n: int) -> tuple[Any, Any]:
    u = 1 + x - y
    linear = n * n + n * (1 + 2 * x - y)
    return (
        quotient(linear + u * u, u * u, "(1+x-y)^2"),
        quotient(linear, u**4, "(1+x-y)^4"),
    )


def t1_lhs(x: Any, y: Any, n: int) -> Any:
    return _theorem_sum(x, y, n, 1)


def t1_rhs(x: Any, y: Any, n: int) -> Any:
    return binomial_ratio(x, y, n) ** 2 * -harmonic_gap(x, y, n, 2)


def t2_lhs(x: Any, y: Any, n: int) -> Any:
    return _theorem_sum(x, y, n, 2)


def t2_rhs(x: Any, y: Any, n: int) -> Any:
    x, y = as_scalar(x), as_scalar(y)
    squared = binomial_ratio(x, y, n) ** 2
    head, tail = _contiguous_weights(x, y, n)
    return head * squared * -harmonic_gap(x, y, n, 2) + tail * squared


def c1_lhs(p: int, q: int, n: int) -> Any:
    return _corollary_sum(p, q, n, 1)


def c1_rhs(p: int, q: int, n: int) -> Any:
    return binomial_ratio(p, q, n) ** 2 * _corollary_brace(p, q, n)


def c2_lhs(p: int, q: int, n: int) -> Any:
    return _corollary_sum(p, q, n, 2)


def c2_rhs(p: int, q: int, n: int) -> Any:
    squared = binomial_ratio(p, q, n) ** 2
    head, tail = _contiguous_weights(as_scalar(p), as_scalar(q), n)
    return head * squared * _corollary_brace(p, q, n) + tail * squared


def _corollary_brace(p: int, q: int, n: int) -> Any:
    """H_{p-q}^<2> + H_{p+n}^<2> - H_{p-q+n}^<2>."""

    return classical(p - q, 2) + classical(p + n, 2) - classical(p - q + n, 2)
