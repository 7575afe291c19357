"""Derivative relations checked by first-order jets."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from app.services.exact import gen_binomial, harmonic_number
from app.services.jet import (
    Jet,
    LinearFractionalFactors,
    jet_gen_binomial,
    jet_harmonic,
    lemma_product,
    lemma_rhs,
)


def d1_lhs(x: Fraction, r: int, s: int) -> Fraction:
    return jet_gen_binomial(x, r, s, 1).derivative(1)


def d1_rhs(x: Fraction, r: int, s: int) -> Fraction:
    """C(x+r,s) (H_r(x) - H_{r-s}(x))."""

    return gen_binomial(x + r, s) * (harmonic_number(r, x) - harmonic_number(r - s, x))


def d2_lhs(x: Fraction, n: int, ell: int) -> Fraction:
    return jet_harmonic(x, n, ell, 1).derivative(1)


def d2_rhs(x: Fraction, n: int, ell: int) -> Fraction:
    return -ell * harmonic_number(n, x, ell + 1)


def l1_lhs(x: Fraction, factors: LinearFractionalFactors) -> Fraction:
    product: Any = lemma_product(factors, Jet.variable(x, 1))
    if not isinstance(product, Jet):
        return Fraction(0)
    return product.derivative(1)


def l1_rhs(x: Fraction, factors: LinearFractionalFactors) -> Fraction:
    return lemma_rhs(factors, x)
