"""Harmonic sums of orders one to four weighted by C(y+k,k)/C(y-n+k,k).

The right-hand sides are written in terms of the harmonic differences
``d_ell = H_n^<ell>(x) - H_n^<ell>(x-y)``. At ``x = p, y = q`` these become
``H_{p+n} - H_{p-q+n} - H_p + H_{p-q}``, which is how the corollaries read; their
C_n, D_n and U_n, V_n, W_n are A_n, B_n and E_n, F_n, G_n at (p, q).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from app.services.exact import as_scalar, gen_binomial, harmonic_number, quotient

from .common import (
    binomial_ratio,
    classical,
    classical_gap,
    harmonic_gap,
    second_family_weight,
    weighted_sum,
)


@dataclass(frozen=True)
class HarmonicDifferences:
    d1: Any
    d2: Any
    d3: Any

    @classmethod
    def at(cls, x: Any, y: Any, n: int) -> "HarmonicDifferences":
        return cls(*(-harmonic_gap(x, y, n, ell) for ell in (1, 2, 3)))

    @classmethod
    def at_integers(cls, p: int, q: int, n: int) -> "HarmonicDifferences":
        return cls(*(-classical_gap(p, q, n, ell) for ell in (1, 2, 3)))


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def single_scale(y: Any, n: int) -> Any:
    """(-1)^n / (n C(y,n))."""

    return quotient(_sign(n), n * gen_binomial(y, n), "n C(y,n)")


def double_scale(y: Any, n: int) -> Any:
    """(-1)^n / (n(n-1) C(y,n))."""

    return quotient(_sign(n), n * (n - 1) * gen_binomial(y, n), "n(n-1) C(y,n)")


def _theorem_sum(x: Any, y: Any, n: int, t: int, ell: int) -> Any:
    return weighted_sum(
        n,
        lambda k: second_family_weight(y, n, k, t),
        lambda k: harmonic_number(k, x, ell),
        start=1,
    )


def _corollary_sum(p: int, q: int, n: int, t: int, ell: int) -> Any:
    return weighted_sum(n, lambda k: second_family_weight(q, n, k, t), lambda k: classical(p + k, ell))


# t = 1 ----------------------------------------------------------------------


def _order_two(x: Any, y: Any, n: int, d: HarmonicDifferences) -> Any:
    return single_scale(y, n) * binomial_ratio(x, y, n) * -d.d1


def _order_one(x: Any, y: Any, n: int) -> Any:
    return single_scale(y, n) * (1 - binomial_ratio(x, y, n))


def _order_three(x: Any, y: Any, n: int, d: HarmonicDifferences) -> Any:
    return single_scale(y, n) / 2 * binomial_ratio(x, y, n) * (-d.d2 - d.d1**2)


def _order_four(x: Any, y: Any, n: int, d: HarmonicDifferences) -> Any:
    brace = -(d.d1**3) - 2 * d.d3 - 3 * d.d1 * d.d2
    return single_scale(y, n) / 6 * binomial_ratio(x, y, n) * brace


def t3_lhs(x: Any, y: Any, n: int) -> Any:
    return _theorem_sum(x, y, n, 1, 2)


def t3_rhs(x: Any, y: Any, n: int) -> Any:
    return _order_two(x, y, n, HarmonicDifferences.at(x, y, n))


def t4_lhs(x: Any, y: Any, n: int) -> Any:
    return _theorem_sum(x, y, n, 1, 1)


def t4_rhs(x: Any, y: Any, n: int) -> Any:
    return _order_one(x, y, n)


def t5_lhs(x: Any, y: Any, n: int) -> Any:
    return _theorem_sum(x, y, n, 1, 3)


def t5_rhs(x: Any, y: Any, n: int) -> Any:
    return _order_three(x, y, n, HarmonicDifferences.at(x, y, n))


def t6_lhs(x: Any, y: Any, n: int) -> Any:
    return _theorem_sum(x, y, n, 1, 4)


def t6_rhs(x: Any, y: Any, n: int) -> Any:
    return _order_four(x, y, n, HarmonicDifferences.at(x, y, n))


def c3_lhs(p: int, q: int, n: int) -> Any:
    return _corollary_sum(p, q, n, 1, 2)


def c3_rhs(p: int, q: int, n: int) -> Any:
    return _order_two(p, q, n, HarmonicDifferences.at_integers(p, q, n))


def c4_lhs(p: int, q: int, n: int) -> Any:
    return _corollary_sum(p, q, n, 1, 1)


def c4_rhs(p: int, q: int, n: int) -> Any:
    return _order_one(p, q, n)


def c5_lhs(p: int, q: int, n: int) -> Any:
    return _corollary_sum(p, q, n, 1, 3)


def c5_rhs(p: int, q: int, n: int) -> Any:
    return _order_three(p, q, n, HarmonicDifferences.at_integers(p, q, n))


def c6_lhs(p: int, q: int, n: int) -> Any:
    return _corollary_sum(p, q, n, 1, 4)


def c6_rhs(p: int, q: int, n: int) -> Any:
    return _order_four(p, q, n, HarmonicDifferences.at_integers(p, q, n))


# t = 2 ----------------------------------------------------------------------


@dataclass(frozen=True)
class _Contiguous:
    """u = 1+x-y and v = 1+x-y+ny, the recurring linear forms."""

    u: Any
    v: Any
    ny: Any

    @classmethod
    def at(cls, x: Any, y: Any, n: int) -> "_Contiguous":
        x, y = as_scalar(x), as_scalar(y)
        u = 1 + x - y
        return cls(u=u, v=u + n * y, ny=n * y)

    def over_u(self, value: Any, power: int = 1) -> Any:
        return quotient(value, self.u**power, f"(1+x-y)^{power}" if power > 1 else "1+x-y")

    def over_uv(self, value: Any, power: int = 1) -> Any:
        label = "(1+x-y)(1+x-y+ny)" if power == 1 else f"(1+x-y)^{power}(1+x-y+ny)"
        return quotient(value, self.u**power * self.v, label)


def a_term(d: HarmonicDifferences, lf: _Contiguous) -> Any:
    """A_n(x,y) = d2 + 2ny/((1+x-y)^2 (1+x-y+ny))."""

    return d.d2 + lf.over_uv(2 * lf.ny, 2)


def b_term(d: HarmonicDifferences, lf: _Contiguous) -> Any:
    """B_n(x,y) = d1 [d1 + 2ny/((1+x-y)(1+x-y+ny))]."""

    return d.d1 * (d.d1 + lf.over_uv(2 * lf.ny))


def e_term(d: HarmonicDifferences) -> Any:
    """E_n(x,y) = d1^3 + 2 d3 + 3 d1 d2."""

    return d.d1**3 + 2 * d.d3 + 3 * d.d1 * d.d2


def f_term(d: HarmonicDifferences) -> Any:
    """F_n(x,y) = d1^2 + d2."""

    return d.d1**2 + d.d2


def g_term(d: HarmonicDifferences, lf: _Contiguous) -> Any:
    """G_n(x,y) = 6ny/(1+x-y)^2 d1 + 6ny/(1+x-y)^3."""

    return lf.over_u(6 * lf.ny, 2) * d.d1 + lf.over_u(6 * lf.ny, 3)


def _contiguous_two(x: Any, y: Any, n: int, d: HarmonicDifferences) -> Any:
    lf = _Contiguous.at(x, y, n)
    lead = double_scale(y, n) * lf.over_u(lf.v) * binomial_ratio(x, y, n)
    return lead * (d.d1 + lf.over_uv(lf.ny))


def _contiguous_one(x: Any, y: Any, n: int) -> Any:
    lf = _Contiguous.at(x, y, n)
    scale = double_scale(y, n)
    return scale * lf.over_u(lf.v) * binomial_ratio(x, y, n) - scale


def _contiguous_three(x: Any, y: Any, n: int, d: HarmonicDifferences) -> Any:
    lf = _Contiguous.at(x, y, n)
    lead = double_scale(y, n) / 2 * lf.over_u(lf.v) * binomial_ratio(x, y, n)
    return lead * (a_term(d, lf) + b_term(d, lf))


def _contiguous_four(x: Any, y: Any, n: int, d: HarmonicDifferences) -> Any:
    lf = _Contiguous.at(x, y, n)
    lead = double_scale(y, n) / 6 * lf.over_u(binomial_ratio(x, y, n))
    brace = lf.v * e_term(d) + lf.over_u(3 * lf.ny) * f_term(d) + g_term(d, lf)
    return lead * brace


def t7_lhs(x: Any, y: Any, n: int) -> Any:
    return _theorem_sum(x, y, n, 2, 2)


def t7_rhs(x: Any, y: Any, n: int) -> Any:
    return _contiguous_two(x, y, n, HarmonicDifferences.at(x, y, n))


def t8_lhs(x: Any, y: Any, n: int) -> Any:
    return _theorem_sum(x, y, n, 2, 1)


def t8_rhs(x: Any, y: Any, n: int) -> Any:
    return _contiguous_one(x, y, n)


def t9_lhs(x: Any, y: Any, n: int) -> Any:
    return _theorem_sum(x, y, n, 2, 3)


def t9_rhs(x: Any, y: Any, n: int) -> Any:
    return _contiguous_three(x, y, n, HarmonicDifferences.at(x, y, n))


def t10_lhs(x: Any, y: Any, n: int) -> Any:
    return _theorem_sum(x, y, n, 2, 4)


def t10_rhs(x: Any, y: Any, n: int) -> Any:
    return _contiguous_four(x, y, n, HarmonicDifferences.at(x, y, n))


def c7_lhs(p: int, q: int, n: int) -> Any:
    return _corollary_sum(p, q, n, 2, 2)


def c7_rhs(p: int, q: int, n: int) -> Any:
    return _contiguous_two(p, q, n, HarmonicDifferences.at_integers(p, q, n))


def c8_lhs(p: int, q: int, n: int) -> Any:
    return _corollary_sum(p, q, n, 2, 1)


def c8_rhs(p: int, q: int, n: int) -> Any:
    return _contiguous_one(p, q, n)


def c9_lhs(p: int, q: int, n: int) -> Any:
    return _corollary_sum(p, q, n, 2, 3)


def c9_rhs(p: int, q: int, n: int) -> Any:
    return _contiguous_three(p, q, n, HarmonicDifferences.at_integers(p, q, n))


def c10_lhs(p: int, q: int, n: int) -> Any:
    return _corollary_sum(p, q, n, 2, 4)


def c10_rhs(p: int, q: int, n: int) -> Any:
    return _contiguous_four(p, q, n, HarmonicDifferences.at_integers(p, q, n))
