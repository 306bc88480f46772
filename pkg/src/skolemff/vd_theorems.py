"""Executable verifiers for the value-distribution inequalities on F(t).

Each verifier computes both sides of its inequality exactly (cube-root bounds
are compared by cubing, so everything stays in integers) and returns an
InequalityReport.  On valid input `holds` must come back True: a False report
signals an implementation bug, never a counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .constants import ConstantValue
from .errors import (
    BadChiS,
    CharPUnsupported,
    ConstantInput,
    InvalidInstance,
    MultiplicativelyDependent,
    NotSInteger,
    NotSUnit,
)
from .funfield import (
    Place,
    PlaceSet,
    RationalFunction,
    chi_S,
    gcd_counting,
    deg_ins,
    height,
    is_s_integer,
    is_s_unit,
    radical,
    strip_places,
    truncated_counting,
)
from .multstruct import is_mult_independent

__all__ = ["InequalityReport", "verify_smt", "verify_sunit_count", "verify_cz_gcd"]


@dataclass(frozen=True)
class InequalityReport:
    """Outcome of one exact inequality check."""

    lhs: int
    rhs: int
    holds: bool
    comparison: str = "lhs <= rhs"
    witness_places: tuple[Place, ...] = ()
    detail: dict = field(default_factory=dict)


def _zero_places(b: RationalFunction, S: PlaceSet) -> tuple[Place, ...]:
    """Distinct zero places of b outside S (best effort, for debugging reports)."""
    from .errors import FactorizationTooHard
    from .factor import factor_poly

    out = []
    try:
        stripped = strip_places(radical(b.num), S)
        if stripped.degree > 0:
            out.extend(Place(g) for g, _ in factor_poly(stripped)[1])
    except FactorizationTooHard:
        pass
    if not S.has_infinity and b.den.degree > b.num.degree:
        from .funfield import INFINITY

        out.append(INFINITY)
    return tuple(out)


def verify_smt(
    f: RationalFunction,
    S: PlaceSet,
    b: list[ConstantValue],
    genus: int = 0,
) -> InequalityReport:
    """Truncated second main theorem: (q-2) h(f)/deg_ins <= sum N_S(f - b_i) + chi_S."""
    if f.is_constant:
        raise ConstantInput("second main theorem needs nonconstant f")
    if len(set(b)) != len(b):
        raise InvalidInstance("target constants must be pairwise distinct")
    di = deg_ins(f)
    q = len(b)
    counts = [truncated_counting(f - bi, S) for bi in b]
    lhs = (q - 2) * height(f)
    rhs = di * (sum(counts) + chi_S(S, genus))
    holds = lhs <= rhs
    witnesses: tuple[Place, ...] = ()
    if not holds:
        witnesses = tuple(p for bi in b for p in _zero_places(f - bi, S))
    return InequalityReport(
        lhs=lhs,
        rhs=rhs,
        holds=holds,
        comparison="(q-2)*h(f) <= deg_ins * (sum + chi_S)",
        witness_places=witnesses,
        detail={"q": q, "height": height(f), "deg_ins": di, "counts": counts},
    )


def verify_sunit_count(
    f: RationalFunction,
    S: PlaceSet,
    candidates: list[ConstantValue],
    genus: int = 0,
) -> InequalityReport:
    """At most 2g + |S| constants c can make f - c an S-unit."""
    if f.is_constant:
        raise ConstantInput("S-unit count needs nonconstant f")
    if not is_s_integer(f, S):
        raise NotSInteger("f must be an S-integer")
    if len(set(candidates)) != len(candidates):
        raise InvalidInstance("candidates must be pairwise distinct")
    unit_cs = [c for c in candidates if is_s_unit(f - c, S)]
    lhs = len(unit_cs)
    rhs = 2 * genus + S.weighted_size
    return InequalityReport(
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs,
        comparison="#(S-unit translates) <= 2g + |S|",
        detail={"unit_candidates": [str(c) for c in unit_cs], "tested": len(candidates)},
    )


def verify_cz_gcd(
    a: RationalFunction,
    b: RationalFunction,
    S: PlaceSet,
    genus: int = 0,
) -> InequalityReport:
    """gcd bound: N_S(gcd(1-a, 1-b))^3 <= 54 * h(a) h(b) chi_S for independent S-units."""
    if a.field.char != 0:
        raise CharPUnsupported("the gcd theorem holds in characteristic 0")
    for x in (a, b):
        if not is_s_unit(x, S):
            raise NotSUnit("arguments must be S-units")
    if a.is_constant and b.is_constant:
        raise MultiplicativelyDependent("constant pair rejected: bound is vacuous")
    if not is_mult_independent(a, b):
        raise MultiplicativelyDependent("arguments are multiplicatively dependent")
    chi = chi_S(S, genus)
    if chi < 0:
        raise BadChiS("the gcd bound needs chi_S >= 0")
    N = gcd_counting(1 - a, 1 - b, S, truncated=False)
    ha = height(a)
    hb = height(b)
    rhs = 54 * ha * hb * chi
    holds = N**3 <= rhs
    witnesses: tuple[Place, ...] = ()
    if not holds:
        witnesses = _zero_places(1 - a, S) + _zero_places(1 - b, S)
    return InequalityReport(
        lhs=N,
        rhs=rhs,
        holds=holds,
        comparison="N^3 <= 54*h(a)*h(b)*chi_S",
        witness_places=witnesses,
        detail={"h_a": ha, "h_b": hb, "chi_S": chi, "lhs_cubed": N**3},
    )
