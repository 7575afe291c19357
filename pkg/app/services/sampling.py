"""Deterministic parameter sampling keyed by (seed, identity id, sample index)."""

from __future__ import annotations

import hashlib
import itertools
from fractions import Fraction
from typing import Any, Iterator, Sequence

import numpy as np

from app.models.identity import ParamKind, ParamSpec
from app.services.jet import LinearFractionalFactor


def identity_key(identity_id: str) -> int:
    """Stable 64-bit key for an id; Python's ``hash`` is salted per process."""

    digest = hashlib.blake2b(identity_id.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def sample_rng(seed: int, identity_id: str, index: int) -> np.random.Generator:
    """Counter-based generator; draws never depend on other ids or other samples."""

    entropy = np.random.SeedSequence([seed, identity_key(identity_id), index])
    return np.random.Generator(np.random.Philox(entropy))


class RationalSampler:
    """Numerators uniform in [-height, height], denominators from a fixed set."""

    def __init__(self, height: int, denominators: Sequence[int]) -> None:
        if height < 1:
            raise ValueError(f"height bound must be positive, got {height}")
        if not denominators or any(d < 1 for d in denominators):
            raise ValueError("denominators must be positive integers")
        self.height = height
        self.denominators = tuple(denominators)

    def draw(self, rng: np.random.Generator) -> Fraction:
        numerator = int(rng.integers(-self.height, self.height, endpoint=True))
        denominator = self.denominators[int(rng.integers(len(self.denominators)))]
        return Fraction(numerator, denominator)

    def draw_factor(self, rng: np.random.Generator) -> LinearFractionalFactor:
        a, b = self.draw(rng), self.draw(rng)
        c, d = self.draw(rng), self.draw(rng)
        while c == 0 and d == 0:
            d = self.draw(rng)
        return LinearFractionalFactor(a, b, c, d)


def integer_upper(spec: ParamSpec, max_n: int, grid_bound: int) -> int:
    if spec.is_index:
        return max_n
    if spec.maximum is not None:
        return spec.maximum
    return grid_bound


def draw_params(
    params: Sequence[ParamSpec],
    rng: np.random.Generator,
    sampler: RationalSampler,
    max_n: int,
    grid_bound: int,
) -> dict[str, Any]:
    """One random instance of a schema, in schema order."""

    drawn: dict[str, Any] = {}
    for spec in params:
        if spec.kind is ParamKind.rational:
            drawn[spec.name] = sampler.draw(rng)
        elif spec.kind is ParamKind.factor_list:
            count = int(rng.integers(max(spec.minimum, 1), (spec.maximum or 5), endpoint=True))
            drawn[spec.name] = tuple(sampler.draw_factor(rng) for _ in range(count))
        else:
            upper = integer_upper(spec, max_n, grid_bound)
            drawn[spec.name] = int(rng.integers(spec.minimum, max(spec.minimum, upper), endpoint=True))
    return drawn


def grid_params(params: Sequence[ParamSpec], grid_bound: int) -> Iterator[dict[str, int]]:
    """Every integer point of an integer-only schema, lexicographic in schema order.

    All integers, the summation index included, range over [minimum, grid_bound]
    unless the slot declares its own maximum.
    """

    ranges = []
    for spec in params:
        if not spec.is_integer:
            raise ValueError(f"grid enumeration needs integer parameters, {spec.name} is {spec.kind.value}")
        upper = spec.maximum if spec.maximum is not None else grid_bound
        ranges.append(range(spec.minimum, upper + 1))
    names = [spec.name for spec in params]
    for point in itertools.product(*ranges):
        yield dict(zip(names, point))
