"""Multiplicative structure of K*: independence tests and dependence exponents.

Dependence is measured modulo torsion: a and b are dependent when some
a^m b^n with (m, n) != (0, 0) is a root of unity.  Divisors turn the question
into exact linear algebra on at most two vectors in the free abelian group on
places; the leftover constant is then tested for torsion, which is decidable
in every supported field.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .constants import ConstantValue, RootOfUnity
from .errors import ConstantInput, UnsupportedConstantPair, ZeroInput
from .funfield import Place, RationalFunction, divisor

__all__ = ["DependenceWitness", "is_mult_independent", "dependence_exponents", "is_power_of"]


@dataclass(frozen=True)
class DependenceWitness:
    """beta^q = torsion.value * f^r with q minimal positive."""

    q: int
    r: int
    torsion: RootOfUnity

    @property
    def exact_q(self) -> int:
        """Smallest exponent with beta^exact_q an exact power of f (torsion folded in)."""
        return self.q * self.torsion.order

    @property
    def exact_r(self) -> int:
        return self.r * self.torsion.order


def _as_root_of_unity(c: ConstantValue) -> RootOfUnity:
    return RootOfUnity(order=c.order(), value=c)


def _parallel_relation(da: dict[Place, int], db: dict[Place, int]) -> tuple[int, int] | None:
    """Primitive (m, n) != 0 with m*da + n*db = 0, or None when independent."""
    support = sorted(set(da) | set(db), key=Place.sort_key)
    pivot = next((p for p in support if da.get(p, 0)), None)
    if pivot is None:
        # da = 0: relation is (1, 0) if db also empty handled by caller; else (0,...)
        return (1, 0) if not any(db.values()) else None
    m, n = db.get(pivot, 0), -da[pivot]
    g = gcd(m, n)
    m, n = m // g, n // g
    for p in support:
        if m * da.get(p, 0) + n * db.get(p, 0) != 0:
            return None
    return (m, n)


def _rational_exponent_vector(c: ConstantValue) -> dict[int, int]:
    from .intutil import factorize

    q = c.as_fraction()
    out: dict[int, int] = {}
    for p, e in factorize(abs(q.numerator)).items():
        out[p] = out.get(p, 0) + e
    for p, e in factorize(q.denominator).items():
        out[p] = out.get(p, 0) - e
    return out


def is_mult_independent(a: RationalFunction, b: RationalFunction) -> bool:
    """True iff no (m, n) != (0, 0) makes a^m * b^n a torsion constant."""
    if a.is_zero or b.is_zero:
        raise ZeroInput("multiplicative independence of 0")
    for x in (a, b):
        if x.is_constant and x.constant_value().is_torsion():
            return False
    if a.is_constant and b.is_constant:
        ca, cb = a.constant_value(), b.constant_value()
        if ca.field.char > 0:
            return False  # every nonzero constant is torsion
        if ca.is_rational() and cb.is_rational():
            va = _rational_exponent_vector(ca)
            vb = _rational_exponent_vector(cb)
            primes = sorted(set(va) | set(vb))
            pivot = next((p for p in primes if va.get(p, 0)), None)
            if pivot is None:
                return False  # ca = +-1 is torsion; unreachable (handled above)
            m, n = vb.get(pivot, 0), -va[pivot]
            g = gcd(m, n)
            m, n = m // g, n // g
            return any(m * va.get(p, 0) + n * vb.get(p, 0) for p in primes)
        raise UnsupportedConstantPair(
            "dependence of two non-torsion cyclotomic constants is out of scope"
        )
    if a.is_constant or b.is_constant:
        return True  # non-torsion constant vs nonconstant: no relation possible
    da, db = divisor(a), divisor(b)
    rel = _parallel_relation(da, db)
    if rel is None:
        return True
    m, n = rel
    c = (a**m) * (b**n)
    cv = c.constant_value()
    return not cv.is_torsion()


def dependence_exponents(beta: RationalFunction, f: RationalFunction) -> DependenceWitness | None:
    """Minimal q > 0 with beta^q = eps * f^r for torsion eps, or None."""
    if beta.is_zero or f.is_zero:
        raise ZeroInput("dependence exponents of 0")
    if f.is_constant:
        raise ConstantInput("f must be nonconstant")
    if beta.is_constant:
        cv = beta.constant_value()
        if cv.is_torsion():
            return DependenceWitness(q=1, r=0, torsion=_as_root_of_unity(cv))
        return None
    db, df = divisor(beta), divisor(f)
    pivot = next(p for p in sorted(df, key=Place.sort_key) if df[p])
    r0, q0 = db.get(pivot, 0), df[pivot]
    g = gcd(r0, q0)
    r0, q0 = r0 // g, q0 // g
    if q0 < 0:
        r0, q0 = -r0, -q0
    support = set(db) | set(df)
    if any(q0 * db.get(p, 0) != r0 * df.get(p, 0) for p in support):
        return None
    eps = (beta**q0) / (f**r0)
    cv = eps.constant_value()
    if not cv.is_torsion():
        return None
    return DependenceWitness(q=q0, r=r0, torsion=_as_root_of_unity(cv))


def is_power_of(beta: RationalFunction, f: RationalFunction) -> int | None:
    """The unique n with beta = f^n, if any; constant beta matches only beta = 1."""
    if beta.is_zero or f.is_zero:
        raise ZeroInput("power test of 0")
    if f.is_constant:
        raise ConstantInput("f must be nonconstant")
    if beta.is_constant:
        return 0 if beta.constant_value().is_one else None
    db, df = divisor(beta), divisor(f)
    pivot = next(p for p in sorted(df, key=Place.sort_key) if df[p])
    vb, vf = db.get(pivot, 0), df[pivot]
    if vb % vf:
        return None
    n = vb // vf
    return n if beta == f**n else None
