import pytest

from app.core.errors import ParameterError
from app.models.outcome import Verdict
from app.services.identities import registry
from app.services.identities.consistency import COROLLARY_LINKS, corollary_consistency


@pytest.mark.parametrize(
    "theorem_id, corollary_id, p, q, n",
    [
        ("T1", "C1", 3, 2, 2),
        ("T4", "C4", 0, 2, 2),
        ("T7", "C7", 2, 2, 2),
    ],
)
def test_corollary_splits_into_theorem_plus_substituted_sum(
    theorem_id: str, corollary_id: str, p: int, q: int, n: int
) -> None:
    result = corollary_consistency(registry, theorem_id, corollary_id, p, q, n)
    assert result.consistent
    assert result.corollary.lhs is not None
    assert result.routed_lhs == result.corollary.lhs.value


@pytest.mark.parametrize("link", sorted(COROLLARY_LINKS), ids="-".join)
def test_links_never_disagree_on_small_grid(link: tuple[str, str]) -> None:
    theorem_id, corollary_id = link
    for p in range(5):
        for q in range(5):
            for n in range(4):
                result = corollary_consistency(registry, theorem_id, corollary_id, p, q, n)
                assert result.verdict is not Verdict.unequal, (p, q, n)


def test_constraint_violation_is_passed_through() -> None:
    result = corollary_consistency(registry, "T1", "C1", 1, 3, 1)
    assert result.verdict is Verdict.constraint_violation
    assert result.theorem is None


def test_unlinked_pair() -> None:
    with pytest.raises(ParameterError):
        corollary_consistency(registry, "T1", "C2", 1, 1, 1)


@pytest.mark.slow
@pytest.mark.parametrize("link", sorted(COROLLARY_LINKS), ids="-".join)
def test_links_on_full_grid(link: tuple[str, str]) -> None:
    theorem_id, corollary_id = link
    for p in range(9):
        for q in range(p + 1):
            for n in range(q + 1):
                result = corollary_consistency(registry, theorem_id, corollary_id, p, q, n)
                assert result.verdict is not Verdict.unequal, (p, q, n)
