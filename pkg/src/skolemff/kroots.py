"""Complete root finding in K = F(t) for polynomials in K[X].

Clearing denominators gives a primitive polynomial over the UFD F[t]; any root
c*u/v in lowest terms must have u dividing the trailing and v the leading
coefficient.  For each monic divisor pair the scalar c solves an exact system
over F: substituting X = c*u/v and collecting by powers of t yields polynomials
in c whose gcd is factored over F, so the search is complete for every
supported field.  A nonzero remainder therefore has no roots in K at all; it
is reported as such (splitting it would need a finite extension of K, which is
out of scope here).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FactorizationTooHard, ZeroInput
from .factor import monic_divisors, roots_in_F
from .funfield import KPolynomial, Polynomial, RationalFunction, poly_gcd

__all__ = ["RootSearch", "find_roots_in_K"]


@dataclass(frozen=True)
class RootSearch:
    """Roots of P in K with multiplicities, plus the rootless monic remainder."""

    roots: tuple[tuple[RationalFunction, int], ...]
    zero_multiplicity: int
    remainder: KPolynomial  # monic, no roots in K (when complete)
    leading: RationalFunction
    complete: bool


def _clear_denominators(P: KPolynomial) -> list[Polynomial]:
    """Scale P by an element of K* to land in F[t][X], primitive over F[t]."""
    fld = P.field
    den = Polynomial.one(fld)
    for c in P.coeffs:
        if not c.is_zero:
            g = poly_gcd(den, c.den)
            den = den * c.den.exact_div(g)
    polys = [c.num * den.exact_div(c.den) if not c.is_zero else Polynomial.zero(fld) for c in P.coeffs]
    content = Polynomial.zero(fld)
    for a in polys:
        content = poly_gcd(content, a)
        if content.degree == 0 and not content.is_zero:
            break
    if content.degree > 0:
        polys = [a.exact_div(content) if not a.is_zero else a for a in polys]
    return polys


def find_roots_in_K(P: KPolynomial) -> RootSearch:
    """All roots of P in K (with multiplicities); complete unless flagged."""
    if P.is_zero:
        raise ZeroInput("root search on the zero polynomial")
    fld = P.field
    leading = P.lc()
    zero_mult = 0
    coeffs = list(P.coeffs)
    while coeffs and coeffs[0].is_zero:
        zero_mult += 1
        coeffs.pop(0)
    work = KPolynomial(fld, coeffs).monic()
    if work.degree == 0:
        return RootSearch((), zero_mult, work, leading, True)

    polys = _clear_denominators(KPolynomial(fld, coeffs))
    a0, ad = polys[0], polys[-1]
    one = RationalFunction.one(fld)
    candidates: list[RationalFunction] = []
    try:
        us = monic_divisors(a0)
        vs = monic_divisors(ad)
        for u in us:
            for v in vs:
                if u.degree > 0 and v.degree > 0 and poly_gcd(u, v).degree > 0:
                    continue
                cs = _scalar_solutions(polys, u, v)
                for c in cs:
                    candidates.append(RationalFunction(u * c, v))
        complete = True
    except FactorizationTooHard:
        complete = False

    roots: list[tuple[RationalFunction, int]] = []
    rem = work
    seen = set()
    for beta in candidates:
        if beta in seen:
            continue
        seen.add(beta)
        mult = 0
        lin = KPolynomial(fld, (-beta, one))
        while rem.degree > 0:
            q, r = rem.divmod(lin)
            if not r.is_zero:
                break
            rem = q
            mult += 1
        if mult:
            roots.append((beta, mult))
    roots.sort(key=lambda rm: (str(rm[0]),))
    return RootSearch(tuple(roots), zero_mult, rem, leading, complete)


def _scalar_solutions(polys: list[Polynomial], u: Polynomial, v: Polynomial) -> list:
    """Nonzero c in F with sum_j a_j (c*u/v)^j = 0, solved exactly."""
    fld = polys[0].field
    d = len(polys) - 1
    # e_j = a_j * u^j * v^(d-j); the root condition is sum_j e_j(t) c^j = 0 in F[t]
    ej = []
    upow = Polynomial.one(fld)
    for j in range(d + 1):
        ej.append(polys[j] * upow * v ** (d - j))
        upow = upow * u
    rows = max(p.degree for p in ej if not p.is_zero) + 1
    gcd_c = Polynomial.zero(fld)
    for i in range(rows):
        row = Polynomial(fld, [p.coeffs[i] if i <= p.degree else 0 for p in ej])
        gcd_c = poly_gcd(gcd_c, row)
        if gcd_c.degree == 0 and not gcd_c.is_zero:
            return []
    if gcd_c.is_zero:
        return []
    return [c for c, _ in roots_in_F(gcd_c) if not c.is_zero]
