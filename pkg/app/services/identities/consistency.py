"""Cross-check a corollary against its theorem at x = p, y = q.

With H_k^<ell>(p) = H_(p+k)^<ell> - H_p^<ell>, the corollary sum splits into
the theorem sum plus H_p^<ell> times the substituted Saalschütz sum taken at
the theorem's limit point. Both routes are evaluated and compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from app.core.errors import ParameterError
from app.models.outcome import Evaluation, Verdict
from app.services.exact import harmonic_number

from .base import IdentityRegistry


@dataclass(frozen=True)
class CorollaryLink:
    theorem_id: str
    corollary_id: str
    substituted_id: str
    ell: int
    limit_point: Callable[[Fraction, Fraction, int], Fraction]


def _first_point(x: Fraction, y: Fraction, n: int) -> Fraction:
    return 2 * x - y + n


def _second_point(x: Fraction, y: Fraction, n: int) -> Fraction:
    return y - n


def _links() -> dict[tuple[str, str], CorollaryLink]:
    rows = [
        (1, "S1", 2, _first_point),
        (2, "S3", 2, _first_point),
        (3, "S4", 2, _second_point),
        (4, "S4", 1, _second_point),
        (5, "S4", 3, _second_point),
        (6, "S4", 4, _second_point),
        (7, "S5", 2, _second_point),
        (8, "S5", 1, _second_point),
        (9, "S5", 3, _second_point),
        (10, "S5", 4, _second_point),
    ]
    return {
        (f"T{i}", f"C{i}"): CorollaryLink(f"T{i}", f"C{i}", s_id, ell, point)
        for i, s_id, ell, point in rows
    }


COROLLARY_LINKS = _links()


@dataclass(frozen=True)
class ConsistencyResult:
    """``verdict`` is ``equal`` when the corollary holds and both routes agree."""

    link: CorollaryLink
    verdict: Verdict
    corollary: Evaluation
    theorem: Optional[Evaluation] = None
    substituted: Optional[Evaluation] = None
    routed_lhs: Optional[Fraction] = None
    routed_rhs: Optional[Fraction] = None

    @property
    def consistent(self) -> bool:
        return self.verdict is Verdict.equal


def corollary_consistency(
    registry: IdentityRegistry, theorem_id: str, corollary_id: str, p: int, q: int, n: int
) -> ConsistencyResult:
    link = COROLLARY_LINKS.get((theorem_id, corollary_id))
    if link is None:
        raise ParameterError(f"no corollary link between {theorem_id} and {corollary_id}")

    corollary = registry.evaluate(corollary_id, {"p": p, "q": q, "n": n})
    if corollary.verdict is not Verdict.equal:
        return ConsistencyResult(link, corollary.verdict, corollary)

    x, y = Fraction(p), Fraction(q)
    theorem = registry.evaluate(theorem_id, {"x": x, "y": y, "n": n})
    substituted = registry.evaluate(
        link.substituted_id, {"x": x, "y": y, "z": link.limit_point(x, y, n), "n": n}
    )
    for part in (theorem, substituted):
        if part.verdict is not Verdict.equal:
            return ConsistencyResult(link, part.verdict, corollary, theorem, substituted)

    assert theorem.lhs and theorem.rhs and substituted.lhs and substituted.rhs
    shift = harmonic_number(p, 0, link.ell)
    routed_lhs = theorem.lhs.value + shift * substituted.lhs.value
    routed_rhs = theorem.rhs.value + shift * substituted.rhs.value
    agrees = corollary.lhs.value == routed_lhs and corollary.rhs.value == routed_rhs  # type: ignore[union-attr]
    return ConsistencyResult(
        link,
        Verdict.equal if agrees else Verdict.unequal,
        corollary,
        theorem,
        substituted,
        routed_lhs,
        routed_rhs,
    )
