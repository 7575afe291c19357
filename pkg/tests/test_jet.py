from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from app.core.errors import ParameterError, PoleError
from app.models.outcome import Verdict
from app.services.identities import registry
from app.services.jet import (
    Jet,
    JetOp,
    LemmaVerdict,
    LinearFractionalFactor,
    check_product_lemma,
    jet_arith,
    jet_gen_binomial,
    jet_harmonic,
    jet_lift,
    limit_via_jet,
)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def _jets(order: int) -> st.SearchStrategy[Jet]:
    return st.lists(rationals, min_size=order + 1, max_size=order + 1).map(Jet)


jet_triples = st.integers(min_value=0, max_value=5).flatmap(
    lambda order: st.tuples(_jets(order), _jets(order), _jets(order))
)


def test_lift_and_arithmetic() -> None:
    x = jet_lift(2, 3, is_variable=True)
    assert x.coefficients == (2, 1, 0, 0)
    assert jet_lift(5, 2).coefficients == (5, 0, 0)

    square = jet_arith(x, x, JetOp.mul)
    assert square.coefficients == (4, 4, 1, 0)
    assert jet_arith(x, 3, "int-pow").coefficients == (8, 12, 6, 1)


def test_reciprocal_series() -> None:
    inverse = 1 / Jet.variable(2, 3)
    assert inverse.coefficients == (
        Fraction(1, 2),
        Fraction(-1, 4),
        Fraction(1, 8),
        Fraction(-1, 16),
    )
    assert inverse.derivative(1) == Fraction(-1, 4)
    assert inverse.derivative(2) == Fraction(1, 4)


def test_division_cancels_common_leading_zeros() -> None:
    t = Jet.variable(0, 3)
    quotient = (t * (t + 3)) / (t * 2)
    assert quotient.order == 2
    assert quotient.coefficients == (Fraction(3, 2), Fraction(1, 2), 0)


def test_division_without_cancellation_is_a_pole() -> None:
    t = Jet.variable(0, 2)
    with pytest.raises(PoleError):
        (t + 1) / t
    with pytest.raises(PoleError):
        Jet.constant(1, 2) / Jet.constant(0, 2)


def test_mixed_orders_keep_the_lower() -> None:
    assert (Jet.variable(1, 4) + Jet.variable(1, 2)).order == 2


def test_jet_arith_rejects_mismatched_orders() -> None:
    with pytest.raises(ParameterError):
        jet_arith(Jet.variable(1, 2), Jet.variable(1, 3), JetOp.add)


def test_coefficient_past_order() -> None:
    with pytest.raises(ParameterError):
        Jet.variable(1, 1).coefficient(2)


@given(rationals, st.integers(min_value=1, max_value=5), st.integers(min_value=1, max_value=3))
def test_harmonic_jet_derivative(x0: Fraction, n: int, ell: int) -> None:
    assume(all(x0 + k != 0 for k in range(1, n + 1)))
    jet = jet_harmonic(x0, n, ell, 2)
    expected = -ell * sum(Fraction(1) / (x0 + k) ** (ell + 1) for k in range(1, n + 1))
    assert jet.derivative(1) == expected


def test_binomial_jet() -> None:
    # C(x+2, 2) = (x+2)(x+1)/2, derivative (2x+3)/2
    jet = jet_gen_binomial(1, 2, 2, 1)
    assert jet.value == 3
    assert jet.derivative(1) == Fraction(5, 2)
    assert jet_gen_binomial(1, 2, 0, 1) == Jet.constant(1, 1)


def test_lemma_on_known_product() -> None:
    # (x+1)/(x+2) * 2x/(x-1) at x = 3
    factors = (LinearFractionalFactor(1, 1, 1, 2), LinearFractionalFactor(2, 0, 1, -1))
    check = check_product_lemma(factors, 3)
    assert check.verdict is LemmaVerdict.passed
    assert check.derivative == check.expected == Fraction(-7, 25)


def test_lemma_skips_vanishing_factor() -> None:
    factors = (LinearFractionalFactor(1, -3, 1, 1),)
    assert check_product_lemma(factors, 3).verdict is LemmaVerdict.skipped


def test_limit_of_removable_singularity() -> None:
    # (z^2 - 4)/(z - 2) -> 4 as z -> 2
    result = limit_via_jet(lambda z: (z * z - 4) / (z - 2), lambda z: z + 2, 2, 3)
    assert result.lhs.value == 4
    assert result.rhs.value == 4


def test_limit_reports_genuine_pole() -> None:
    result = limit_via_jet(lambda z: 1 / (z - 2), lambda z: z, 2, 3)
    assert result.lhs.is_pole
    assert not result.rhs.is_pole


def test_limit_needs_positive_order() -> None:
    with pytest.raises(ParameterError):
        limit_via_jet(lambda z: z, lambda z: z, 0, 0)


@given(jet_triples)
def test_jet_arithmetic_is_associative_and_distributive(triple: tuple[Jet, Jet, Jet]) -> None:
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from([f"T{i}" for i in range(1, 11)]),
    rationals,
    rationals,
    st.integers(min_value=0, max_value=4),
)
def test_lifted_theorem_sides_match_plain_evaluation(identity_id: str, x: Fraction, y: Fraction, n: int) -> None:
    evaluation = registry.evaluate(identity_id, {"x": x, "y": y, "n": n})
    assume(evaluation.verdict is Verdict.equal)
    spec = registry.get(identity_id)
    for side, plain in ((spec.lhs, evaluation.lhs), (spec.rhs, evaluation.rhs)):
        assert plain is not None
        try:
            lifted = side(x=Jet.variable(x, 2), y=y, n=n)
        except (PoleError, ZeroDivisionError):
            continue
        value = lifted.value if isinstance(lifted, Jet) else lifted
        assert value == plain.value
