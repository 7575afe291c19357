"""The fixed catalogue, in listing order."""

from __future__ import annotations

from typing import Any, Mapping

from app.models.identity import Constraint, IdentityFamily, ParamKind, ParamSpec

from . import first_family as first
from . import relations
from . import saalschutz as sz
from . import second_family as second
from .base import IdentityRegistry, IdentitySpec


def _rational(name: str) -> ParamSpec:
    return ParamSpec(name, ParamKind.rational)


def _integer(name: str, minimum: int = 0, maximum: int | None = None) -> ParamSpec:
    return ParamSpec(name, ParamKind.nonneg_int, minimum=minimum, maximum=maximum)


def _index(minimum: int = 0) -> ParamSpec:
    return ParamSpec("n", ParamKind.nonneg_int, minimum=minimum, is_index=True)


def at_least(name: str, bound: int) -> Constraint:
    return Constraint(f"{name} ≥ {bound}", lambda p: p[name] >= bound)


def ordered(*names: str) -> Constraint:
    def holds(p: Mapping[str, Any]) -> bool:
        return all(p[a] >= p[b] for a, b in zip(names, names[1:]))

    return Constraint(" ≥ ".join(names), holds)


def at_most(name: str, other: str) -> Constraint:
    return Constraint(f"{name} ≤ {other}", lambda p: p[name] <= p[other])


ABC = (_rational("a"), _rational("b"), _rational("c"), _index())
XYZ = (_rational("x"), _rational("y"), _rational("z"), _index())


def _xy(minimum: int = 0) -> tuple[ParamSpec, ...]:
    return (_rational("x"), _rational("y"), _index(minimum))


def _pq(minimum: int = 0) -> tuple[ParamSpec, ...]:
    return (_integer("p"), _integer("q"), _index(minimum))


def _saalschutz_entries() -> list[IdentitySpec]:
    family = IdentityFamily.saalschutz
    pre = IdentityFamily.pre_limit
    return [
        IdentitySpec(
            "S0",
            "balanced 3F2(a,b,-n; c,1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)",
            family, '§1, "Then Saalschütz\'s theorem"',
            ABC, sz.s0_lhs, sz.s0_rhs,
        ),
        IdentitySpec(
            "S1", "S0 at a=1+z, b=y, c=1+x in binomial form, t=1", family,
            'proof of Theorem A, "Perform the replacements"',
            XYZ, sz.s1_lhs, sz.s1_rhs,
        ),
        IdentitySpec(
            "P1", "x-derivative of S1 as a difference quotient; z -> 2x-y+n gives T1", pre,
            'proof of Theorem A, "The equivalent form of it reads"',
            XYZ, sz.p1_lhs, sz.p1_rhs,
        ),
        IdentitySpec(
            "S2", "3F2(a,b,-n; 1+c,1+a+b-c-n; 1), S0 at c and at 1+c combined", family,
            'proof of Theorem B, "Replace c by 1+c"',
            ABC, sz.s2_lhs, sz.s2_rhs,
        ),
        IdentitySpec(
            "S3", "S2 at a=1+z, b=y-1, c=x in binomial form, t=2", family,
            'proof of Theorem B, "Employ the substitutions"',
            XYZ, sz.s3_lhs, sz.s3_rhs,
        ),
        IdentitySpec(
            "P2", "x-derivative of S3 as a difference quotient; z -> 2x-y+n gives T2", pre,
            'proof of Theorem B, second "equivalent form"',
            XYZ, sz.p2_lhs, sz.p2_rhs,
        ),
        IdentitySpec(
            "S4", "S0 at a=1+x, b=y, c=1+z in binomial form, t=1", family,
            'proof of Theorem C, "the replacements a→1+x"',
            XYZ, sz.s4_lhs, sz.s4_rhs,
        ),
        IdentitySpec(
            "P3", "x-derivative of S4 as a difference quotient; z -> y-n gives T3", pre,
            "proof of Theorem C, pre-limit form",
            XYZ, sz.p3_lhs, sz.p3_rhs,
        ),
        IdentitySpec(
            "S5", "S2 at a=1+x, b=y-1, c=z in binomial form, t=2", family,
            'proof of Theorem G, "Employ the substitutions"',
            XYZ, sz.s5_lhs, sz.s5_rhs,
        ),
        IdentitySpec(
            "P4", "x-derivative of S5 as a difference quotient; z -> y-n gives T7", pre,
            "proof of Theorem G, pre-limit form",
            XYZ, sz.p4_lhs, sz.p4_rhs,
        ),
    ]


THEOREM_LETTERS = "ABCDEFGHIJ"


def _theorem_entries() -> list[IdentitySpec]:
    family = IdentityFamily.theorem
    one, two = (at_least("n", 1),), (at_least("n", 2),)

    def entry(number: int, title: str, minimum: int, constraints: tuple[Constraint, ...], module: Any) -> IdentitySpec:
        return IdentitySpec(
            f"T{number}", title, family, f"Theorem {THEOREM_LETTERS[number - 1]}", _xy(minimum),
            getattr(module, f"t{number}_lhs"), getattr(module, f"t{number}_rhs"), constraints,
        )

    return [
        entry(1, "first family, t=1, H^<2>_k(x): limit of P1 at z = 2x-y+n", 0, (), first),
        entry(2, "first family, t=2, H^<2>_k(x): limit of P2 at z = 2x-y+n", 0, (), first),
        entry(3, "second family, t=1, H^<2>_k(x): limit of P3 at z = y-n", 1, one, second),
        entry(4, "second family, t=1, H_k(x): x-antiderivative of T3, normalised by x -> infinity", 1, one, second),
        entry(5, "second family, t=1, H^<3>_k(x): x-derivative of T3", 1, one, second),
        entry(6, "second family, t=1, H^<4>_k(x): x-derivative of T5", 1, one, second),
        entry(7, "second family, t=2, H^<2>_k(x): limit of P4 at z = y-n", 2, two, second),
        entry(8, "second family, t=2, H_k(x): x-antiderivative of T7, normalised by x -> infinity", 2, two, second),
        entry(9, "second family, t=2, H^<3>_k(x): x-derivative of T7", 2, two, second),
        entry(10, "second family, t=2, H^<4>_k(x): x-derivative of T9", 2, two, second),
    ]


def _corollary_entries() -> list[IdentitySpec]:
    family = IdentityFamily.corollary
    pq = (ordered("p", "q"),)
    pqn1 = (ordered("p", "q", "n"), at_least("n", 1))
    qn1 = (ordered("q", "n"), at_least("n", 1))
    pqn2 = (ordered("p", "q", "n"), at_least("n", 2))
    qn2 = (ordered("q", "n"), at_least("n", 2))
    at_pq = "T{} at x=p, y=q with H_k^<{}>(p) = H_(p+k)^<{}> - H_p^<{}>"

    def entry(number: int, ell: int, minimum: int, constraints: tuple[Constraint, ...], module: Any) -> IdentitySpec:
        anchor = f"Corollary {THEOREM_LETTERS[number - 1]}, " + "; ".join(c.description for c in constraints)
        return IdentitySpec(
            f"C{number}", at_pq.format(number, ell, ell, ell), family, anchor, _pq(minimum),
            getattr(module, f"c{number}_lhs"), getattr(module, f"c{number}_rhs"), constraints,
        )

    return [
        entry(1, 2, 0, pq, first),
        entry(2, 2, 0, pq, first),
        entry(3, 2, 1, pqn1, second),
        entry(4, 1, 1, qn1, second),
        entry(5, 3, 1, pqn1, second),
        entry(6, 4, 1, pqn1, second),
        entry(7, 2, 2, pqn2, second),
        entry(8, 1, 2, qn2, second),
        entry(9, 3, 2, pqn2, second),
        entry(10, 4, 2, pqn2, second),
    ]


def _relation_entries() -> list[IdentitySpec]:
    family = IdentityFamily.relation
    return [
        IdentitySpec(
            "D1", "derivative of C(x+r, s): D_x C(x+r,s) = C(x+r,s) (H_r(x) - H_(r-s)(x))", family,
            '§1, "easy to find that"',
            (_rational("x"), _integer("r", maximum=8), _integer("s", maximum=8)),
            relations.d1_lhs, relations.d1_rhs, (at_most("s", "r"),),
        ),
        IdentitySpec(
            "D2", "derivative of H_n^<ell>(x): D_x H_n^<ell>(x) = -ell H_n^<ell+1>(x)", family,
            '§1, "we have the following relation"',
            (
                _rational("x"),
                _integer("n", maximum=10),
                ParamSpec("ell", ParamKind.pos_int, minimum=1, maximum=3),
            ),
            relations.d2_lhs, relations.d2_rhs,
        ),
        IdentitySpec(
            "L1",
            "D_x prod (a_j x+b_j)/(c_j x+d_j) = prod(...) sum (a_j d_j - b_j c_j)/((a_j x+b_j)(c_j x+d_j))",
            family,
            "Lemma 1",
            (_rational("x"), ParamSpec("factors", ParamKind.factor_list, minimum=1, maximum=5)),
            relations.l1_lhs, relations.l1_rhs,
        ),
    ]


def build_registry() -> IdentityRegistry:
    return IdentityRegistry(
        _saalschutz_entries() + _theorem_entries() + _corollary_entries() + _relation_entries()
    )
