"""Seeded randomized suites behind `skolemff verify <suite>`.

Every suite draws instances from random.Random(seed), checks a proved
inequality or lemma on each, and counts violations.  Zero violations is the
only acceptable outcome; a violation embeds a (greedily minimized) reproducer
in the result so the bug is replayable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .constants import ConstantValue, FieldSpec, field_for, roots_of_unity
from .errors import MultiplicativelyDependent, SkolemffError
from .funfield import (
    INFINITY,
    KPolynomial,
    Place,
    PlaceSet,
    Polynomial,
    RationalFunction,
    height,
    is_s_unit,
    poly_height,
    poly_valuation,
)
from .generate import generate_instance, place_pool, rand_const, rand_ratfunc
from .powersum import choose_p, choose_q, lemma_claimD_check, lemma_claimI_check, split_dep_ind
from .vd_theorems import verify_cz_gcd, verify_smt, verify_sunit_count

__all__ = ["SuiteResult", "run_suite", "SUITES"]

SUITES = ("smt", "czgcd", "gauss", "sunit", "claimD", "claimI")

_CHAR0_SPECS = [FieldSpec(0, 1), FieldSpec(0, 4)]
_ALL_SPECS = [FieldSpec(0, 1), FieldSpec(0, 4), FieldSpec(3, 1, 1), FieldSpec(5, 1, 1)]


@dataclass
class SuiteResult:
    suite: str
    seed: int
    count: int
    checked: int = 0
    violations: int = 0
    skipped_dependent: int = 0
    reproducer: dict | None = None
    notes: list[str] = dc_field(default_factory=list)


def run_suite(suite: str, seed: int, count: int, max_deg: int = 12) -> SuiteResult:
    if suite not in SUITES:
        raise SkolemffError(f"unknown suite {suite!r}; choose from {SUITES}")
    runner = {
        "smt": _run_smt,
        "czgcd": _run_czgcd,
        "gauss": _run_gauss,
        "sunit": _run_sunit,
        "claimD": _run_claimD,
        "claimI": _run_claimI,
    }[suite]
    return runner(seed, count, max_deg)


def _distinct_consts(rng: random.Random, fld, how_many: int) -> list[ConstantValue]:
    out: list[ConstantValue] = []
    tries = 0
    while len(out) < how_many and tries < 200:
        c = rand_const(rng, fld)
        tries += 1
        if c not in out:
            out.append(c)
    return out


def _rand_S(rng: random.Random, fld) -> PlaceSet:
    pool = place_pool(fld)
    size = rng.randint(1, len(pool))
    return PlaceSet(rng.sample(pool, size))


def _run_smt(seed: int, count: int, max_deg: int) -> SuiteResult:
    res = SuiteResult("smt", seed, count)
    rng = random.Random(seed)
    for i in range(count):
        fld = field_for(_ALL_SPECS[i % len(_ALL_SPECS)])
        f = rand_ratfunc(rng, fld, max(2, max_deg // 2), nonconstant=True)
        S = _rand_S(rng, fld)
        b = _distinct_consts(rng, fld, rng.randint(1, 8))
        rep = verify_smt(f, S, b)
        res.checked += 1
        if not rep.holds:
            res.violations += 1
            if res.reproducer is None:
                res.reproducer = _shrink_smt(f, S, b)
    return res


def _shrink_smt(f, S, b) -> dict:
    # drop targets while the violation persists
    keep = list(b)
    changed = True
    while changed and len(keep) > 1:
        changed = False
        for i in range(len(keep)):
            cand = keep[:i] + keep[i + 1 :]
            try:
                if not verify_smt(f, S, cand).holds:
                    keep = cand
                    changed = True
                    break
            except SkolemffError:
                continue
    return {
        "f": repr(f),
        "S": repr(S),
        "b": [repr(c) for c in keep],
    }


def _run_sunit(seed: int, count: int, max_deg: int) -> SuiteResult:
    res = SuiteResult("sunit", seed, count)
    rng = random.Random(seed)
    for i in range(count):
        spec = _ALL_SPECS[i % len(_ALL_SPECS)]
        fld = field_for(spec)
        S = _rand_S(rng, fld)
        from .generate import _s_integer

        f = _s_integer(rng, fld, S, max(2, max_deg // 3))
        tries = 0
        while (f.is_zero or f.is_constant) and tries < 50:
            f = _s_integer(rng, fld, S, max(2, max_deg // 3))
            tries += 1
        if f.is_zero or f.is_constant:
            continue
        candidates = _distinct_consts(rng, fld, rng.randint(1, 6))
        rep = verify_sunit_count(f, S, candidates)
        res.checked += 1
        ok = rep.holds
        # restatement: among all a-th roots of unity, at least a - (2g+|S|)
        # translates f - xi fail to be S-units
        if fld.char == 0:
            a = rng.choice([1, 2] if fld.M == 1 else [1, 2, 4])
        else:
            a = rng.choice([d for d in (1, 2) if (fld.p**fld.d - 1) % d == 0])
        roots = roots_of_unity(a, spec)
        units = sum(1 for r in roots if is_s_unit(f - r.value, S))
        bound = 2 * 0 + S.weighted_size
        if (a - units) < a - bound:
            ok = False
        if not ok:
            res.violations += 1
            if res.reproducer is None:
                res.reproducer = {"f": repr(f), "S": repr(S), "a": a}
    return res


def _run_czgcd(seed: int, count: int, max_deg: int) -> SuiteResult:
    from fractions import Fraction

    res = SuiteResult("czgcd", seed, count)
    rng = random.Random(seed)
    for i in range(count):
        fld = field_for(_CHAR0_SPECS[i % 2])
        t = Polynomial.t(fld)
        one = Polynomial.one(fld)
        S = PlaceSet([Place(t), Place(t - one), Place(t + one), INFINITY])
        monos = [RationalFunction(t), RationalFunction(t - one), RationalFunction(t + one)]

        def unit(rng=rng, fld=fld, monos=monos):
            out = RationalFunction.constant(fld, rng.choice([1, -1, 2]))
            for mono in monos:
                out = out * mono ** rng.randint(-3, 3)
            return out

        def anchored(rng=rng, fld=fld, monos=monos):
            # scale so the unit takes value 1 at t = 3: then 1 - a vanishes
            # there and the gcd count is nontrivially positive for pairs
            e = [rng.randint(-2, 2) for _ in range(3)]
            c = Fraction(1) / (Fraction(3) ** e[0] * Fraction(2) ** e[1] * Fraction(4) ** e[2])
            out = RationalFunction.constant(fld, c)
            for mono, k in zip(monos, e):
                out = out * mono**k
            return out

        def doubly_anchored(rng=rng, fld=fld, monos=monos):
            # value 1 at both t = 3 and t = -3 needs i even and j = k
            i2 = rng.choice([0, 2])
            j = rng.choice([1, 2])
            c = Fraction(1) / (Fraction(3) ** i2 * Fraction(2) ** j * Fraction(4) ** j)
            return (
                RationalFunction.constant(fld, c)
                * monos[0] ** i2
                * monos[1] ** j
                * monos[2] ** j
            )

        if i % 7 == 3:
            a, b = doubly_anchored(), doubly_anchored()
        elif i % 3 == 1:
            a, b = anchored(), anchored()
        else:
            a, b = unit(), unit()
        if a.is_constant and b.is_constant:
            res.skipped_dependent += 1
            continue
        try:
            rep = verify_cz_gcd(a, b, S)
        except MultiplicativelyDependent:
            res.skipped_dependent += 1
            continue
        res.checked += 1
        if rep.lhs > 0:
            res.notes = res.notes or ["nontrivial_counts:0"]
            res.notes[0] = f"nontrivial_counts:{int(res.notes[0].split(':')[1]) + 1}"
        if not rep.holds:
            res.violations += 1
            if res.reproducer is None:
                res.reproducer = {"a": repr(a), "b": repr(b), "S": repr(S)}
    return res


def _rand_kpoly(rng: random.Random, fld, deg: int, coeff_deg: int) -> KPolynomial:
    while True:
        coeffs = []
        for _ in range(deg + 1):
            if rng.random() < 0.15:
                coeffs.append(RationalFunction.zero(fld))
            else:
                coeffs.append(rand_ratfunc(rng, fld, coeff_deg))
        P = KPolynomial(fld, coeffs)
        if not P.is_zero:
            return P


def _support_places(polys, fld) -> list[Place]:
    from .factor import factor_poly

    seen = {}
    for p in polys:
        if p.degree < 1:
            continue
        for g, _ in factor_poly(p)[1]:
            seen[Place(g)] = True
    out = list(seen)
    out.append(INFINITY)
    return out


def _run_gauss(seed: int, count: int, max_deg: int) -> SuiteResult:
    res = SuiteResult("gauss", seed, count)
    rng = random.Random(seed)
    for i in range(count):
        fld = field_for(_ALL_SPECS[i % len(_ALL_SPECS)])
        A = _rand_kpoly(rng, fld, rng.randint(1, 3), max(1, max_deg // 6))
        B = _rand_kpoly(rng, fld, rng.randint(1, 3), max(1, max_deg // 6))
        C = A * B
        ok = poly_height(C) == poly_height(A) + poly_height(B)
        polys = []
        for P in (A, B):
            for c in P.coeffs:
                if not c.is_zero:
                    polys.extend([c.num, c.den])
        for place in _support_places(polys, fld):
            if poly_valuation(C, place) != poly_valuation(A, place) + poly_valuation(B, place):
                ok = False
                break
        # product of linear factors: h(prod (X - beta_i)) = sum h(beta_i)
        roots = [rand_ratfunc(rng, fld, max(1, max_deg // 6)) for _ in range(rng.randint(1, 3))]
        L = KPolynomial.from_roots(fld, roots)
        if poly_height(L) != sum(height(b) for b in roots):
            ok = False
        res.checked += 1
        if not ok:
            res.violations += 1
            if res.reproducer is None:
                res.reproducer = {"A": repr(A), "B": repr(B), "roots": [repr(r) for r in roots]}
    return res


def _run_claimD(seed: int, count: int, max_deg: int) -> SuiteResult:
    res = SuiteResult("claimD", seed, count)
    rng = random.Random(seed)
    for i in range(count):
        inst, _ = generate_instance(seed * 10_000 + i, "dep-heavy")
        split = split_dep_ind(inst, 0)
        q = choose_q([w for _, _, w in split.dep])
        p = choose_p([w for _, _, w in split.dep], q)
        ell = rng.choice([1, 2])
        n = rng.randint(-8, 8)
        rep = lemma_claimD_check(inst, 0, n, p, ell, q)
        res.checked += 1
        if not rep.holds:
            res.violations += 1
            if res.reproducer is None:
                res.reproducer = {"seed": seed * 10_000 + i, "profile": "dep-heavy",
                                  "n": n, "p": p, "ell": ell, "q": q}
    return res


def _run_claimI(seed: int, count: int, max_deg: int) -> SuiteResult:
    res = SuiteResult("claimI", seed, count)
    rng = random.Random(seed)
    for i in range(count):
        fld = field_for(FieldSpec(0, 1))
        tp = Polynomial.t(fld)
        one = Polynomial.one(fld)
        t = RationalFunction.t(fld)
        S = PlaceSet([Place(tp), INFINITY])
        j = rng.randint(1, 2)
        f = t**j
        pool = [t - 1, t + 1, t - 2, t + 2]
        roots = rng.sample(pool, rng.randint(1, 2))
        if rng.random() < 0.5:
            s = rng.choice([x for x in range(-3, 4) if x != 0])
            sign = -1 if (s % j == 0) else rng.choice([1, -1])
            roots.append(RationalFunction.constant(fld, sign) * t**s)
        P = KPolynomial.from_roots(fld, roots)
        lambdas, epsilons, exponents = [], [], []
        from .constants import RootOfUnity

        one_ru = RootOfUnity(1, ConstantValue(fld, fld.one_raw))
        for k, coeff in enumerate(P.coeffs):
            if coeff.is_zero:
                continue
            lambdas.append(coeff)
            epsilons.append(one_ru)
            exponents.append(k)
        from .powersum import PowerSumInstance, decide_global_zero

        inst = PowerSumInstance(tuple(lambdas), tuple(epsilons), tuple(exponents), f, S)
        if decide_global_zero(inst) is not None:
            continue
        split = split_dep_ind(inst, 0)
        q = choose_q([w for _, _, w in split.dep])
        p = choose_p([w for _, _, w in split.dep], q)
        ell = 1 if p >= 5 else rng.choice([1, 2])
        n = rng.randint(0, 8)
        rep = lemma_claimI_check(inst, 0, n, p, ell, q)
        res.checked += 1
        if not rep.holds:
            res.violations += 1
            if res.reproducer is None:
                res.reproducer = {"roots": [repr(r) for r in roots], "f": repr(f),
                                  "n": n, "p": p, "ell": ell, "q": q}
    return res
