"""Exact factorization of polynomials over the constant field F.

Three backends behind one entry point:

* F_q            -- squarefree split, distinct-degree, then Cantor-Zassenhaus
                    equal-degree splitting with a deterministic seed;
* Q              -- primitive integer form, then a big-prime variant of
                    Zassenhaus: one prime above twice the Landau-Mignotte bound,
                    modular factors recombined by exact trial division over Z;
* Q(zeta_M), M>1 -- Trager norm descent: factor Res_y(Phi_M(y), A(x - s*zeta))
                    over Q, pull factors back through gcds over Q(zeta).

The environment variable SKOLEMFF_MAX_DEGREE (default 64) caps the degree any
backend will attempt, including the descent norm; beyond it the answer is an
honest FactorizationTooHard, never a silent approximation.
"""

from __future__ import annotations

import os
import random
from fractions import Fraction
from itertools import combinations
from math import gcd as igcd, isqrt, lcm as ilcm

from .constants import ConstantValue, Field
from .errors import FactorizationTooHard, ZeroInput
from .intutil import is_probable_prime
from .funfield import Polynomial, squarefree_decomposition

__all__ = ["factor_poly", "roots_in_F", "max_degree_cap", "monic_divisors"]

_CZ_SEED = 0x5EEDF00D


def max_degree_cap() -> int:
    return int(os.environ.get("SKOLEMFF_MAX_DEGREE", "64"))


def factor_poly(p: Polynomial) -> tuple[ConstantValue, list[tuple[Polynomial, int]]]:
    """Factor p = unit * prod factor^mult into monic irreducibles over F."""
    if p.is_zero:
        raise ZeroInput("factorization of 0")
    unit = p.lc()
    mon = p.monic()
    if mon.degree == 0:
        return unit, []
    if mon.degree > max_degree_cap():
        raise FactorizationTooHard(f"degree {mon.degree} exceeds the configured cap")
    fld = p.field
    out: list[tuple[Polynomial, int]] = []
    for g, mult in squarefree_decomposition(mon):
        if fld.char > 0:
            parts = _factor_sqfree_gf(g)
        elif fld.M == 1:
            parts = _factor_sqfree_q(g)
        else:
            parts = _factor_sqfree_cyclo(g)
        out.extend((h, mult) for h in parts)
    out.sort(key=lambda fm: (fm[0].degree, tuple(str(c) for c in fm[0].coeffs)))
    return unit, out


def roots_in_F(p: Polynomial) -> list[tuple[ConstantValue, int]]:
    """Roots of p lying in F, with multiplicities (complete)."""
    out = []
    for g, m in factor_poly(p)[1]:
        if g.degree == 1:
            out.append((-g.coeffs[0], m))
    return out


def monic_divisors(p: Polynomial, limit: int = 4096) -> list[Polynomial]:
    """All monic divisors of p (including 1); FactorizationTooHard past `limit`."""
    _, factors = factor_poly(p)
    count = 1
    for _, m in factors:
        count *= m + 1
        if count > limit:
            raise FactorizationTooHard("too many divisors to enumerate")
    divs = [Polynomial.one(p.field)]
    for g, m in factors:
        new = []
        for d in divs:
            cur = d
            for _ in range(m + 1):
                new.append(cur)
                cur = cur * g
        divs = new
    return divs


# ---------------------------------------------------------------------------
# Finite fields: distinct-degree + Cantor-Zassenhaus
# ---------------------------------------------------------------------------


def _pow_mod(base: Polynomial, e: int, mod: Polynomial) -> Polynomial:
    out = Polynomial.one(base.field)
    base = base % mod
    while e:
        if e & 1:
            out = (out * base) % mod
        base = (base * base) % mod
        e >>= 1
    return out


def _factor_sqfree_gf(f: Polynomial) -> list[Polynomial]:
    from .funfield import poly_gcd

    fld = f.field
    q = fld.p**fld.d
    out: list[Polynomial] = []
    x = Polynomial.t(fld)
    h = x
    d = 0
    rest = f
    while rest.degree > 2 * (d + 1) - 1 and rest.degree > 0:
        d += 1
        h = _pow_mod(h, q, rest)
        g = poly_gcd(h - x, rest)
        if g.degree > 0:
            out.extend(_equal_degree_split(g, d))
            rest = rest.exact_div(g)
            h = h % rest
    if rest.degree > 0:
        out.append(rest.monic())
    return out


def _random_poly(fld: Field, degree: int, rng: random.Random) -> Polynomial:
    coeffs = []
    for _ in range(degree + 1):
        raw = tuple(rng.randrange(fld.p) for _ in range(fld.d))
        coeffs.append(ConstantValue(fld, raw))
    return Polynomial(fld, coeffs)


def _equal_degree_split(f: Polynomial, d: int) -> list[Polynomial]:
    """Split a product of distinct irreducibles all of degree d (CZ, seeded)."""
    from .funfield import poly_gcd

    fld = f.field
    if f.degree == d:
        return [f.monic()]
    q = fld.p**fld.d
    rng = random.Random(_CZ_SEED ^ hash((f.degree, d)))
    one = Polynomial.one(fld)
    while True:
        h = _random_poly(fld, f.degree - 1, rng)
        if h.is_zero or h.degree < 1:
            continue
        if fld.p == 2:
            # trace map over F_2
            acc = Polynomial.zero(fld)
            cur = h % f
            for _ in range(fld.d * d):
                acc = (acc + cur) % f
                cur = (cur * cur) % f
            g = poly_gcd(acc, f)
        else:
            g = poly_gcd(h, f)
            if g.degree == 0:
                z = _pow_mod(h, (q**d - 1) // 2, f) - one
                g = poly_gcd(z, f)
        if 0 < g.degree < f.degree:
            return _equal_degree_split(g, d) + _equal_degree_split(f.exact_div(g), d)


# ---------------------------------------------------------------------------
# Q: big-prime Zassenhaus on primitive integer polynomials
# ---------------------------------------------------------------------------


def _to_primitive_int(f: Polynomial) -> list[int]:
    den = 1
    for c in f.coeffs:
        den = ilcm(den, c.raw[0].denominator)
    v = [int(c.raw[0] * den) for c in f.coeffs]
    g = 0
    for c in v:
        g = igcd(g, c)
    v = [c // (g or 1) for c in v]
    if v[-1] < 0:
        v = [-c for c in v]
    return v


def _int_poly_div_exact(num: list[int], den: list[int]) -> list[int] | None:
    """Quotient of exact division in Z[x], or None when inexact."""
    num = list(num)
    if len(num) < len(den):
        return None
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c % den[-1]:
            return None
        q = c // den[-1]
        out[i] = q
        if q:
            for j, dc in enumerate(den):
                num[i + j] -= q * dc
    if any(num[: len(den) - 1]):
        return None
    return out


# -- raw mod-p polynomial helpers (little-endian int lists, huge p allowed) --


def _m_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _m_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _m_trim(out)


def _m_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    for i in range(len(a) - 1, len(b) - 2, -1):
        c = a[i]
        if c:
            q = c * inv % p
            for j in range(len(b)):
                a[i - len(b) + 1 + j] = (a[i - len(b) + 1 + j] - q * b[j]) % p
    return _m_trim(a[: len(b) - 1])


def _m_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _m_trim(list(a)), _m_trim(list(b))
    while b:
        a, b = b, _m_rem(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _m_powmod(a: list[int], e: int, mod: list[int], p: int) -> list[int]:
    out = [1]
    a = _m_rem(a, mod, p) if len(a) >= len(mod) else list(a)
    while e:
        if e & 1:
            out = _m_rem(_m_mul(out, a, p), mod, p)
        a = _m_rem(_m_mul(a, a, p), mod, p)
        e >>= 1
    return out


def _m_monic(a: list[int], p: int) -> list[int]:
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _m_deriv(a: list[int], p: int) -> list[int]:
    return _m_trim([c * i % p for i, c in enumerate(a)][1:])


def _factor_mod_p(f: list[int], p: int, rng: random.Random) -> list[list[int]]:
    """Monic squarefree f over F_p into monic irreducibles (distinct-degree + CZ)."""
    out: list[list[int]] = []
    x = [0, 1]
    h = list(x)
    d = 0
    rest = list(f)
    while len(rest) - 1 > 2 * (d + 1) - 1:
        d += 1
        h = _m_powmod(h, p, rest, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _m_gcd(rest, _m_trim(diff), p)
        if len(g) > 1:
            out.extend(_m_equal_degree(g, d, p, rng))
            rest = _int_modp_div(rest, g, p)
            h = _m_rem(h, rest, p) if len(h) >= len(rest) else h
    if len(rest) > 1:
        out.append(_m_monic(rest, p))
    return out


def _int_modp_div(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - 1, len(b) - 2, -1):
        c = a[i]
        if c:
            q = c * inv % p
            out[i - len(b) + 1] = q
            for j in range(len(b)):
                a[i - len(b) + 1 + j] = (a[i - len(b) + 1 + j] - q * b[j]) % p
    return _m_trim(out)


def _m_equal_degree(f: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    if len(f) - 1 == d:
        return [_m_monic(f, p)]
    while True:
        h = [rng.randrange(p) for _ in range(len(f) - 1)]
        h = _m_trim(h)
        if len(h) < 1:
            continue
        g = _m_gcd(f, h, p)
        if len(g) == 1:
            z = _m_powmod(h, (p**d - 1) // 2, f, p)
            z = list(z) + [0] * max(0, 1 - len(z))
            z[0] = (z[0] - 1) % p
            g = _m_gcd(f, _m_trim(z), p)
        if 1 < len(g) < len(f):
            return _m_equal_degree(g, d, p, rng) + _m_equal_degree(_int_modp_div(f, g, p), d, p, rng)


def _mignotte_prime(f: list[int]) -> int:
    """A probable prime exceeding twice the factor-coefficient bound, squarefree for f."""
    n = len(f) - 1
    norm2 = isqrt(sum(c * c for c in f)) + 1
    bound = (1 << n) * norm2 * abs(f[-1])
    p = 2 * bound + 1
    while True:
        while not is_probable_prime(p):
            p += 1
        if f[-1] % p != 0:
            fp = [c % p for c in f]
            if len(_m_gcd(fp, _m_deriv(fp, p), p)) == 1:
                return p
        p += 1


def _sym_lift(c: int, p: int) -> int:
    c %= p
    return c - p if c > p // 2 else c


def _factor_sqfree_q(f: Polynomial) -> list[Polynomial]:
    fld = f.field
    if f.degree == 1:
        return [f.monic()]
    F = _to_primitive_int(f)
    p = _mignotte_prime(F)
    rng = random.Random(_CZ_SEED ^ len(F))
    mods = _factor_mod_p(_m_monic([c % p for c in F], p), p, rng)
    mods.sort(key=lambda m: (len(m), m))
    found: list[list[int]] = []
    s = 1
    while 2 * s <= len(mods):
        restart = True
        while restart:
            restart = False
            for combo in combinations(range(len(mods)), s):
                prod = [F[-1] % p]
                for i in combo:
                    prod = _m_mul(prod, mods[i], p)
                cand = [_sym_lift(c, p) for c in prod]
                g = 0
                for c in cand:
                    g = igcd(g, c)
                cand = [c // (g or 1) for c in cand]
                if cand[-1] < 0:
                    cand = [-c for c in cand]
                quo = _int_poly_div_exact(F, cand)
                if quo is not None:
                    found.append(cand)
                    g2 = 0
                    for c in quo:
                        g2 = igcd(g2, c)
                    quo = [c // (g2 or 1) for c in quo]
                    if quo[-1] < 0:
                        quo = [-c for c in quo]
                    F = quo
                    mods = [m for i, m in enumerate(mods) if i not in combo]
                    restart = 2 * s <= len(mods)
                    break
        s += 1
    if len(F) > 1:
        found.append(F)
    out = []
    for g in found:
        lead = Fraction(g[-1])
        out.append(Polynomial(fld, [Fraction(c) / lead for c in g]))
    return out


# ---------------------------------------------------------------------------
# Q(zeta_M): Trager norm descent
# ---------------------------------------------------------------------------


def _resultant_q(f: list[Fraction], g: list[Fraction]) -> Fraction:
    """Res(f, g) of univariate polynomials over Q by the Euclidean formula."""
    f = [Fraction(c) for c in f]
    g = [Fraction(c) for c in g]

    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    f, g = trim(f), trim(g)
    if not f or not g:
        return Fraction(0)
    res = Fraction(1)
    while len(g) > 1:
        r = list(f)
        inv = 1 / g[-1]
        for i in range(len(r) - 1, len(g) - 2, -1):
            c = r[i]
            if c:
                q = c * inv
                for j in range(len(g)):
                    r[i - len(g) + 1 + j] -= q * g[j]
        r = trim(r[: len(g) - 1])
        df, dg = len(f) - 1, len(g) - 1
        dr = len(r) - 1 if r else 0
        if not r:
            return Fraction(0)
        res *= g[-1] ** (df - dr) * (-1) ** (df * dg)
        f, g = g, r
    return res * g[0] ** (len(f) - 1)


def _lagrange(points: list[tuple[int, Fraction]]) -> list[Fraction]:
    """Interpolating polynomial through exact points (Newton form)."""
    xs = [Fraction(x) for x, _ in points]
    coeffs = [y for _, y in points]
    # divided differences
    for j in range(1, len(points)):
        for i in range(len(points) - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)]
    for i in range(len(points) - 1, -1, -1):
        # poly = poly*(x - xs[i]) + coeffs[i]
        poly = [Fraction(0)] + poly
        for k in range(len(poly) - 1):
            poly[k] -= xs[i] * poly[k + 1]
        poly[0] += coeffs[i]
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _norm_to_q(a: Polynomial) -> list[Fraction]:
    """Norm from Q(zeta)[x] down to Q[x]: Res_y(Phi_M(y), a(x) with zeta -> y)."""
    fld = a.field
    phi = [Fraction(c) for c in fld._modulus]
    n = fld.degree
    deg_bound = a.degree * n
    pts: list[tuple[int, Fraction]] = []
    x0 = 0
    while len(pts) < deg_bound + 1:
        # evaluate a at x = x0: polynomial in y of degree < n
        ay = [Fraction(0)] * n
        for i, c in enumerate(a.coeffs):
            xi = Fraction(x0) ** i
            for j in range(n):
                ay[j] += c.raw[j] * xi
        pts.append((x0, _resultant_q(phi, ay)))
        x0 = -x0 + (1 if x0 <= 0 else 0)  # 0, 1, -1, 2, -2, ...
    return _lagrange(pts)


def _factor_sqfree_cyclo(f: Polynomial) -> list[Polynomial]:
    from .constants import FieldSpec, field_for
    from .funfield import poly_gcd

    fld = f.field
    f = f.monic()
    if f.degree == 1:
        return [f]
    if f.degree * fld.degree > max_degree_cap():
        raise FactorizationTooHard("norm descent degree exceeds the configured cap")
    zeta = ConstantValue(fld, fld._zeta_raw())
    qfld = field_for(FieldSpec(0, 1))
    s = 0
    while True:
        s = -s + (1 if s <= 0 else 0)
        shift = Polynomial(fld, [-(zeta * s), 1])  # x - s*zeta
        a_s = f.compose(shift)
        norm = _norm_to_q(a_s)
        # usable iff the norm keeps full degree and is squarefree
        normp = Polynomial(qfld, norm)
        if normp.degree != a_s.degree * fld.degree:
            continue
        if poly_gcd(normp, normp.derivative()).degree == 0:
            break
    rational_factors = _factor_sqfree_q(normp.monic())
    unshift = Polynomial(fld, [zeta * s, 1])  # x + s*zeta
    out = []
    for nf in rational_factors:
        lifted = Polynomial(fld, [_lift_q_const(fld, c) for c in nf.coeffs])
        h = poly_gcd(a_s, lifted)
        if h.degree > 0:
            out.append(h.compose(unshift).monic())
    return out


def _lift_q_const(fld: Field, c: ConstantValue) -> ConstantValue:
    return ConstantValue(fld, fld.from_fraction(c.raw[0]))
