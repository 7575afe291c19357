"""Exact rational helpers."""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from app.core.errors import ParameterError, PoleError
from app.services.exact import (
    HarmonicOrder,
    contiguous_combination,
    contiguous_saalschutz_lhs,
    contiguous_saalschutz_rhs,
    decimal_approximation,
    format_rational,
    gen_binomial,
    harmonic,
    harmonic_number,
    hypergeom_terminating,
    parse_rational,
    saalschutz_lhs,
    saalschutz_rhs,
    shifted_factorial,
)

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=7)


def test_parse_rational_forms() -> None:
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational(" -2 ") == Fraction(-2)
    assert parse_rational("6/8") == Fraction(3, 4)


@pytest.mark.parametrize("text", ["", "a/b", "1/0", "1.5", "2/-3"])
def test_parse_rational_rejects(text: str) -> None:
    with pytest.raises(ParameterError):
        parse_rational(text)


@given(rationals)
def test_format_rational_is_inverted_by_parse(value: Fraction) -> None:
    assert parse_rational(format_rational(value)) == value


def test_decimal_approximation() -> None:
    assert decimal_approximation(Fraction(1, 4)) == "0.25"
    assert decimal_approximation(Fraction(-7, 64)) == "-0.109375"


def test_shifted_factorial_and_binomial() -> None:
    assert shifted_factorial(Fraction(1, 2), 3) == Fraction(15, 8)
    assert shifted_factorial(5, 0) == 1
    assert gen_binomial(5, 2) == 10
    assert gen_binomial(-1, 3) == -1
    assert gen_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    with pytest.raises(ParameterError):
        shifted_factorial(1, -1)


def test_harmonic_numbers() -> None:
    assert harmonic_number(3) == Fraction(11, 6)
    assert harmonic_number(2, 0, 2) == Fraction(5, 4)
    assert harmonic_number(0, Fraction(-1)) == 0
    assert harmonic_number(1, Fraction(1, 2), 2) == Fraction(4, 9)


def test_harmonic_order_spot_value() -> None:
    assert harmonic(HarmonicOrder(ell=2, n=2, shift=Fraction(1, 2))).value == Fraction(136, 225)


def test_classical_harmonic_numbers_match_direct_sum() -> None:
    running = Fraction(0)
    for n in range(1, 51):
        running += Fraction(1, n)
        assert harmonic(HarmonicOrder(ell=1, n=n)).value == running


@given(rationals, st.integers(min_value=0, max_value=8))
def test_shifted_factorial_recurrence(x: Fraction, n: int) -> None:
    assert shifted_factorial(x, n + 1) == shifted_factorial(x, n) * (x + n)


@given(rationals, st.integers(min_value=0, max_value=8))
def test_binomial_times_factorial_is_falling_product(x: Fraction, n: int) -> None:
    assert gen_binomial(x, n) * factorial(n) == shifted_factorial(x - n + 1, n)


@given(rationals, st.integers(min_value=1, max_value=8), st.integers(min_value=1, max_value=4))
def test_harmonic_recurrence(x: Fraction, n: int, ell: int) -> None:
    current = harmonic(HarmonicOrder(ell=ell, n=n, shift=x))
    previous = harmonic(HarmonicOrder(ell=ell, n=n - 1, shift=x))
    assume(not current.is_pole and not previous.is_pole)
    assert current.value == previous.value + 1 / (x + n) ** ell


def test_harmonic_pole_names_the_index() -> None:
    with pytest.raises(PoleError) as exc:
        harmonic_number(3, -2)
    assert exc.value.index == 2

    outcome = harmonic(HarmonicOrder(ell=1, n=3, shift=Fraction(-2)))
    assert outcome.is_pole
    assert outcome.pole is not None and outcome.pole.index == 2


def test_harmonic_order_validation() -> None:
    with pytest.raises(ParameterError):
        HarmonicOrder(ell=0, n=1)
    with pytest.raises(ParameterError):
        HarmonicOrder(ell=1, n=-1)


@pytest.mark.parametrize(
    "upper, lower, n, expected",
    [
        ([1, 1], [3, -2], 2, Fraction(3, 2)),
        ([2, 1], [2, 1], 1, Fraction(0)),
        ([Fraction(1, 3), 5], [Fraction(-7, 2), 2], 0, Fraction(1)),
    ],
)
def test_hypergeom_terminating_values(upper: list, lower: list, n: int, expected: Fraction) -> None:
    assert hypergeom_terminating(upper, lower, n).value == expected


def test_hypergeom_terminating_names_vanishing_lower_factor() -> None:
    outcome = hypergeom_terminating([1], [Fraction(2), Fraction(-1)], 3)
    assert outcome.is_pole
    assert outcome.pole is not None
    assert outcome.pole.factor == "lower[1]+1"
    assert outcome.pole.index == 2


def test_saalschutz_spot_value() -> None:
    a, b, c = Fraction(1), Fraction(1), Fraction(3)
    assert saalschutz_lhs(a, b, c, 2).value == Fraction(3, 2)
    assert saalschutz_rhs(a, b, c, 2).value == Fraction(3, 2)


@settings(max_examples=60, deadline=None)
@given(rationals, rationals, rationals, st.integers(min_value=0, max_value=5))
def test_saalschutz_holds_away_from_poles(a: Fraction, b: Fraction, c: Fraction, n: int) -> None:
    lhs, rhs = saalschutz_lhs(a, b, c, n), saalschutz_rhs(a, b, c, n)
    assume(not lhs.is_pole and not rhs.is_pole)
    assert lhs.value == rhs.value


@settings(max_examples=60, deadline=None)
@given(rationals, rationals, rationals, st.integers(min_value=0, max_value=5))
def test_contiguous_saalschutz_holds_away_from_poles(a: Fraction, b: Fraction, c: Fraction, n: int) -> None:
    lhs, rhs = contiguous_saalschutz_lhs(a, b, c, n), contiguous_saalschutz_rhs(a, b, c, n)
    assume(not lhs.is_pole and not rhs.is_pole)
    assert lhs.value == rhs.value


@settings(max_examples=40, deadline=None)
@given(rationals, rationals, rationals, st.integers(min_value=0, max_value=4))
def test_contiguous_combination_matches_direct_sum(a: Fraction, b: Fraction, c: Fraction, n: int) -> None:
    combined, direct = contiguous_combination(a, b, c, n), contiguous_saalschutz_lhs(a, b, c, n)
    assume(not combined.is_pole and not direct.is_pole)
    assert combined.value == direct.value
