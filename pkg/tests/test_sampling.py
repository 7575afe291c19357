from fractions import Fraction

import pytest

from app.models.identity import ParamKind, ParamSpec
from app.services.identities import registry
from app.services.sampling import (
    RationalSampler,
    draw_params,
    grid_params,
    identity_key,
    sample_rng,
)


def _draws(seed: int, identity_id: str, index: int) -> dict:
    sampler = RationalSampler(12, [1, 2, 3, 5, 7])
    spec = registry.get(identity_id)
    return draw_params(spec.params, sample_rng(seed, identity_id, index), sampler, 6, 8)


def test_identity_key_is_stable() -> None:
    assert identity_key("T1") == identity_key("T1")
    assert identity_key("T1") != identity_key("T2")


def test_draws_depend_only_on_seed_id_and_index() -> None:
    assert _draws(42, "T3", 7) == _draws(42, "T3", 7)
    assert [_draws(42, "T3", i) for i in range(20)] != [_draws(43, "T3", i) for i in range(20)]
    assert [_draws(42, "T3", i) for i in range(20)] != [_draws(42, "T4", i) for i in range(20)]


def test_draws_respect_schema() -> None:
    for index in range(50):
        drawn = _draws(1, "T7", index)
        assert set(drawn) == {"x", "y", "n"}
        assert isinstance(drawn["x"], Fraction)
        assert abs(drawn["x"].numerator) <= 12
        assert 2 <= drawn["n"] <= 6

        d1 = _draws(1, "D1", index)
        assert 0 <= d1["r"] <= 8 and 0 <= d1["s"] <= 8

        lemma = _draws(1, "L1", index)
        assert 1 <= len(lemma["factors"]) <= 5


def test_factor_denominator_never_identically_zero() -> None:
    sampler = RationalSampler(1, [1])
    for index in range(200):
        factor = sampler.draw_factor(sample_rng(0, "L1", index))
        assert factor.c != 0 or factor.d != 0


def test_grid_is_lexicographic_and_bounded() -> None:
    params = (
        ParamSpec("p", ParamKind.nonneg_int),
        ParamSpec("n", ParamKind.nonneg_int, minimum=1, is_index=True),
    )
    points = list(grid_params(params, 2))
    assert points[0] == {"p": 0, "n": 1}
    assert points[-1] == {"p": 2, "n": 2}
    assert len(points) == 6


def test_grid_rejects_rational_schema() -> None:
    with pytest.raises(ValueError):
        list(grid_params(registry.get("T1").params, 2))


def test_sampler_validation() -> None:
    with pytest.raises(ValueError):
        RationalSampler(0, [1])
    with pytest.raises(ValueError):
        RationalSampler(3, [])
