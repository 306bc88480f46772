"""Arithmetic of K = F(t) on P^1: places, valuations, divisors, heights, S-sets.

Places are closed points of P^1 over F: a monic irreducible polynomial, or the
point at infinity.  A degree-d finite place stands for d conjugate geometric
points, so every counting/height sum here is weighted by place degree; this
makes the algebraically-closed-field formulas exact without ever leaving F.

Counting functions never factor anything: common zeros come from polynomial
gcds, distinct zeros from squarefree radicals, and S-places are divided out
directly.  Full factorization (divisor support) lives in skolemff.factor.
"""

from __future__ import annotations

from fractions import Fraction
from math import inf

from .constants import ConstantValue, Field
from .errors import AllZero, ConstantInput, InvalidInstance, NotSInteger, ZeroInput

__all__ = [
    "Polynomial",
    "RationalFunction",
    "Place",
    "PlaceSet",
    "INFINITY",
    "valuation",
    "divisor",
    "height",
    "projective_height",
    "KPolynomial",
    "poly_valuation",
    "poly_height",
    "truncated_counting",
    "gcd_counting",
    "deg_ins",
    "chi_S",
    "is_s_integer",
    "is_s_unit",
]


# ---------------------------------------------------------------------------
# Polynomials over F
# ---------------------------------------------------------------------------


class Polynomial:
    """Univariate polynomial over F; the zero polynomial has empty coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        cs = []
        for c in coeffs:
            if isinstance(c, ConstantValue):
                if c.field is not field:
                    raise InvalidInstance("mixed constant fields in polynomial")
                cs.append(c)
            else:
                cs.append(_const(field, c))
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, field: Field) -> "Polynomial":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Polynomial":
        return cls(field, (1,))

    @classmethod
    def t(cls, field: Field) -> "Polynomial":
        return cls(field, (0, 1))

    @classmethod
    def from_ints(cls, field: Field, ints) -> "Polynomial":
        return cls(field, list(ints))

    # -- basic data -----------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def lc(self) -> ConstantValue:
        if self.is_zero:
            raise ZeroInput("leading coefficient of 0")
        return self.coeffs[-1]

    def constant_coeff(self) -> ConstantValue:
        return self.coeffs[0] if self.coeffs else _const(self.field, 0)

    # -- arithmetic -------------------------------------------------------------
    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(self.field, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (ConstantValue, int, Fraction)):
            c = _const(self.field, other)
            return Polynomial(self.field, [x * c for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero(self.field)
        fld = self.field
        out_raw = [fld.zero_raw] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            ar = ai.raw
            if fld.is_zero_raw(ar):
                continue
            for j, bj in enumerate(b):
                if not fld.is_zero_raw(bj.raw):
                    out_raw[i + j] = fld.add_raw(out_raw[i + j], fld.mul_raw(ar, bj.raw))
        return Polynomial(fld, [ConstantValue(fld, r) for r in out_raw])

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative polynomial power")
        out = Polynomial.one(self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        fld = self.field
        rem = list(self.coeffs)
        d = other.degree
        if self.degree < d:
            return Polynomial.zero(fld), self
        inv_lead = other.lc().inverse()
        quo = [_const(fld, 0)] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c.is_zero:
                continue
            q = c * inv_lead
            quo[i - d] = q
            for j, oc in enumerate(other.coeffs):
                rem[i - d + j] = rem[i - d + j] - q * oc
        return Polynomial(fld, quo), Polynomial(fld, rem[:d])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        inv = self.lc().inverse()
        return Polynomial(self.field, [c * inv for c in self.coeffs])

    def derivative(self) -> "Polynomial":
        return Polynomial(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x: ConstantValue) -> ConstantValue:
        acc = _const(self.field, 0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, g: "Polynomial") -> "Polynomial":
        acc = Polynomial.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * g + Polynomial(self.field, (c,))
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field.spec == other.field.spec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.spec, self.coeffs))

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            if i == 0:
                parts.append(f"{c}")
            else:
                mon = "t" if i == 1 else f"t^{i}"
                parts.append(mon if c.is_one else f"({c})*{mon}")
        return " + ".join(reversed(parts))


def _const(field: Field, v) -> ConstantValue:
    if isinstance(v, ConstantValue):
        return v
    if isinstance(v, int):
        return ConstantValue(field, field.from_int(v))
    if isinstance(v, Fraction):
        return ConstantValue(field, field.from_fraction(v))
    raise InvalidInstance(f"cannot coerce {v!r} into the constant field")


# -- gcd ---------------------------------------------------------------------


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; fast integer primitive-PRS path over Q, monic Euclid otherwise."""
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    fld = a.field
    if fld.char == 0 and fld.M == 1:
        return _gcd_q(a, b)
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def _q_coeffs(p: Polynomial) -> list[Fraction]:
    return [c.raw[0] for c in p.coeffs]


def _int_content(v: list[int]) -> int:
    from math import gcd as igcd

    g = 0
    for c in v:
        g = igcd(g, c)
    return g or 1


def _gcd_q(a: Polynomial, b: Polynomial) -> Polynomial:
    """Primitive pseudo-remainder sequence over Z, returned monic over Q."""
    from math import lcm as ilcm

    def to_int(p: Polynomial) -> list[int]:
        qs = _q_coeffs(p)
        den = 1
        for q in qs:
            den = ilcm(den, q.denominator)
        v = [int(q * den) for q in qs]
        g = _int_content(v)
        return [c // g for c in v]

    A, B = to_int(a), to_int(b)
    if len(A) < len(B):
        A, B = B, A
    while B:
        # pseudo-remainder: scale by lc(B) once per elimination step
        R = list(A)
        lb = B[-1]
        while len(R) >= len(B):
            if R[-1] == 0:
                R.pop()
                continue
            shift = len(R) - len(B)
            top = R[-1]
            R = [lb * c for c in R]
            for j, bcoef in enumerate(B):
                R[shift + j] -= top * bcoef
            R.pop()
        while R and R[-1] == 0:
            R.pop()
        if R:
            g = _int_content(R)
            R = [c // g for c in R]
        A, B = B, R
    fld = a.field
    lead = Fraction(A[-1])
    return Polynomial(fld, [Fraction(c) / lead for c in A])


# -- squarefree machinery ------------------------------------------------------


def poly_pth_root(p: Polynomial) -> Polynomial | None:
    """The p-th root of a polynomial over a perfect field of char p, or None."""
    fld = p.field
    ch = fld.char
    if ch == 0:
        raise InvalidInstance("p-th roots only exist in characteristic p")
    if p.is_zero:
        return p
    for i, c in enumerate(p.coeffs):
        if i % ch and not c.is_zero:
            return None
    # c^(1/p) = c^(p^(d-1)) in F_{p^d}
    e = ch ** (fld.d - 1)
    return Polynomial(fld, [p.coeffs[i] ** e for i in range(0, len(p.coeffs), ch)])


def squarefree_decomposition(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Monic squarefree parts with multiplicities; works in all characteristics."""
    if f.is_zero:
        raise ZeroInput("squarefree decomposition of 0")
    f = f.monic()
    if f.degree == 0:
        return []
    ch = f.field.char
    if ch == 0:
        return _yun(f)
    out: list[tuple[Polynomial, int]] = []
    fp = f.derivative()
    if fp.is_zero:
        root = poly_pth_root(f)
        return [(g, ch * m) for g, m in squarefree_decomposition(root)]
    T = poly_gcd(f, fp)
    V = f.exact_div(T)
    i = 1
    while V.degree > 0:
        W = poly_gcd(T, V)
        Ai = V.exact_div(W)
        if Ai.degree > 0:
            out.append((Ai, i))
        V = W
        T = T.exact_div(W)
        i += 1
    if T.degree > 0:
        root = poly_pth_root(T)
        out.extend((g, ch * m) for g, m in squarefree_decomposition(root))
    return out


def _yun(f: Polynomial) -> list[tuple[Polynomial, int]]:
    out = []
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def radical(f: Polynomial) -> Polynomial:
    """Monic product of the distinct irreducible factors of f."""
    out = Polynomial.one(f.field)
    for g, _ in squarefree_decomposition(f):
        out = out * g
    return out


def strip_places(f: Polynomial, places: "PlaceSet") -> Polynomial:
    """Divide out every factor of f supported at a finite place of S."""
    for pl in places:
        if pl.is_infinite:
            continue
        while True:
            q, r = f.divmod(pl.poly)
            if r.is_zero and not q.is_zero:
                f = q
            else:
                break
    return f


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RationalFunction:
    """Reduced quotient num/den with den monic; zero is 0/1."""

    __slots__ = ("field", "num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        fld = num.field
        if den is None:
            den = Polynomial.one(fld)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if not num.is_zero:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.lc()
            if not lead.is_one:
                inv = lead.inverse()
                num = num * inv
                den = den * inv
        else:
            den = Polynomial.one(fld)
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RationalFunction is immutable")

    # -- constructors -----------------------------------------------------------
    @classmethod
    def t(cls, field: Field) -> "RationalFunction":
        return cls(Polynomial.t(field))

    @classmethod
    def constant(cls, field: Field, v) -> "RationalFunction":
        return cls(Polynomial(field, (v,)))

    @classmethod
    def zero(cls, field: Field) -> "RationalFunction":
        return cls(Polynomial.zero(field))

    @classmethod
    def one(cls, field: Field) -> "RationalFunction":
        return cls(Polynomial.one(field))

    # -- data ---------------------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def constant_value(self) -> ConstantValue:
        if not self.is_constant:
            raise ConstantInput("not a constant")
        return self.num.constant_coeff()

    # -- arithmetic -----------------------------------------------------------------
    def _co(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        if isinstance(other, (int, ConstantValue, Fraction)):
            return RationalFunction(Polynomial(self.field, (other,)))
        raise InvalidInstance(f"cannot coerce {other!r} into K")

    def __add__(self, other):
        o = self._co(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._co(other)
        return RationalFunction(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._co(other)
        return o - self

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        o = self._co(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._co(other)
        if o.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._co(other)
        return o / self

    def __pow__(self, e: int) -> "RationalFunction":
        if e < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of 0")
            return RationalFunction(self.den, self.num) ** (-e)
        out = RationalFunction.one(self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "RationalFunction":
        return self ** (-1)

    def evaluate(self, x: ConstantValue) -> ConstantValue:
        dv = self.den.evaluate(x)
        if dv.is_zero:
            raise ZeroDivisionError("pole at evaluation point")
        return self.num.evaluate(x) / dv

    def value_at_infinity(self) -> ConstantValue:
        """The residue value at infinity (requires v_inf >= 0)."""
        dn, dd = self.num.degree, self.den.degree
        if dn > dd:
            raise ZeroDivisionError("pole at infinity")
        if dn < dd:
            return _const(self.field, 0)
        return self.num.lc() / self.den.lc()

    def __eq__(self, other):
        if isinstance(other, (int, ConstantValue, Fraction, Polynomial)):
            other = self._co(other)
        return (
            isinstance(other, RationalFunction)
            and self.field.spec == other.field.spec
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.field.spec, self.num, self.den))

    def __repr__(self):
        if self.den.degree == 0 and self.den.coeffs and self.den.coeffs[0].is_one:
            return repr(self.num)
        return f"({self.num})/({self.den})"


# ---------------------------------------------------------------------------
# Places
# ---------------------------------------------------------------------------


class Place:
    """A closed point of P^1 over F: monic irreducible polynomial, or infinity."""

    __slots__ = ("poly",)

    def __init__(self, poly: Polynomial | None):
        if poly is not None:
            if poly.is_zero or poly.degree < 1:
                raise InvalidInstance("finite place needs a nonconstant polynomial")
            poly = poly.monic()
        object.__setattr__(self, "poly", poly)

    def __setattr__(self, *a):
        raise AttributeError("Place is immutable")

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    def sort_key(self):
        if self.poly is None:
            return (1,)
        return (0, self.poly.degree, tuple(str(c) for c in self.poly.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Place):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(("place", self.poly))

    def __repr__(self):
        return "inf" if self.poly is None else f"({self.poly})"


INFINITY = Place(None)


class PlaceSet:
    """Finite set of places; sizes are always weighted by place degree."""

    __slots__ = ("places",)

    def __init__(self, places=()):
        object.__setattr__(self, "places", frozenset(places))

    def __setattr__(self, *a):
        raise AttributeError("PlaceSet is immutable")

    def __contains__(self, p: Place) -> bool:
        return p in self.places

    def __iter__(self):
        return iter(sorted(self.places, key=Place.sort_key))

    def __len__(self):
        return len(self.places)

    @property
    def weighted_size(self) -> int:
        return sum(p.degree for p in self.places)

    @property
    def has_infinity(self) -> bool:
        return INFINITY in self.places

    def union(self, other_places) -> "PlaceSet":
        return PlaceSet(self.places | set(other_places))

    def __eq__(self, other):
        return isinstance(other, PlaceSet) and self.places == other.places

    def __hash__(self):
        return hash(self.places)

    def __repr__(self):
        return "{" + ", ".join(repr(p) for p in self) + "}"


# ---------------------------------------------------------------------------
# Valuations, divisors, heights
# ---------------------------------------------------------------------------


def _multiplicity(f: Polynomial, p: Polynomial) -> int:
    m = 0
    while not f.is_zero:
        q, r = f.divmod(p)
        if not r.is_zero:
            break
        f = q
        m += 1
    return m


def valuation(f: RationalFunction, p: Place):
    """Normalized order of f at p; +inf sentinel for f = 0."""
    if f.is_zero:
        return inf
    if p.is_infinite:
        return f.den.degree - f.num.degree
    return _multiplicity(f.num, p.poly) - _multiplicity(f.den, p.poly)


def divisor(f: RationalFunction) -> dict[Place, int]:
    """Full divisor of f (zero valuations omitted); factors num and den."""
    from .factor import factor_poly

    if f.is_zero:
        raise ZeroInput("divisor of 0")
    out: dict[Place, int] = {}
    for poly, sign in ((f.num, 1), (f.den, -1)):
        if poly.degree < 1:
            continue
        for g, m in factor_poly(poly)[1]:
            out[Place(g)] = out.get(Place(g), 0) + sign * m
    v_inf = f.den.degree - f.num.degree
    if v_inf:
        out[INFINITY] = v_inf
    return {p: v for p, v in out.items() if v}


def height(f: RationalFunction) -> int:
    """Relative height: degree-weighted pole count = max(deg num, deg den)."""
    if f.is_zero:
        raise ZeroInput("height of 0")
    return max(f.num.degree, f.den.degree)


def projective_height(xs) -> int:
    """Projective height of a tuple of elements of K, scaling invariant."""
    xs = list(xs)
    nonzero = [x for x in xs if not x.is_zero]
    if not nonzero:
        raise AllZero("projective height of the zero vector")
    fld = nonzero[0].field
    den = Polynomial.one(fld)
    for x in nonzero:
        g = poly_gcd(den, x.den)
        den = den * x.den.exact_div(g)
    cleared = [x.num * den.exact_div(x.den) for x in nonzero]
    g = Polynomial.zero(fld)
    for a in cleared:
        g = poly_gcd(g, a)
    return max(a.degree for a in cleared) - g.degree


# ---------------------------------------------------------------------------
# Polynomials over K
# ---------------------------------------------------------------------------


class KPolynomial:
    """Polynomial in a formal variable X with coefficients in K."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("KPolynomial is immutable")

    @classmethod
    def from_roots(cls, field: Field, roots) -> "KPolynomial":
        out = cls(field, (RationalFunction.one(field),))
        for b in roots:
            out = out * cls(field, (-b, RationalFunction.one(field)))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> RationalFunction:
        if self.is_zero:
            raise ZeroInput("leading coefficient of 0")
        return self.coeffs[-1]

    def __add__(self, other: "KPolynomial") -> "KPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return KPolynomial(self.field, out)

    def __sub__(self, other) -> "KPolynomial":
        return self + KPolynomial(self.field, [-c for c in other.coeffs])

    def __mul__(self, other) -> "KPolynomial":
        if isinstance(other, RationalFunction):
            return KPolynomial(self.field, [c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return KPolynomial(self.field, ())
        out = [RationalFunction.zero(self.field) for _ in range(len(a) + len(b) - 1)]
        for i, ai in enumerate(a):
            if ai.is_zero:
                continue
            for j, bj in enumerate(b):
                if not bj.is_zero:
                    out[i + j] = out[i + j] + ai * bj
        return KPolynomial(self.field, out)

    def divmod(self, other: "KPolynomial") -> tuple["KPolynomial", "KPolynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        if self.degree < d:
            return KPolynomial(self.field, ()), self
        inv = other.lc().inverse()
        quo = [RationalFunction.zero(self.field)] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c.is_zero:
                continue
            q = c * inv
            quo[i - d] = q
            for j, oc in enumerate(other.coeffs):
                rem[i - d + j] = rem[i - d + j] - q * oc
        return KPolynomial(self.field, quo), KPolynomial(self.field, rem[:d])

    def exact_div(self, other: "KPolynomial") -> "KPolynomial":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ArithmeticError("inexact division in K[X]")
        return q

    def evaluate(self, x: RationalFunction) -> RationalFunction:
        acc = RationalFunction.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "KPolynomial":
        if self.is_zero:
            return self
        inv = self.lc().inverse()
        return KPolynomial(self.field, [c * inv for c in self.coeffs])

    def __eq__(self, other):
        return (
            isinstance(other, KPolynomial)
            and self.field.spec == other.field.spec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.spec, self.coeffs))

    def __repr__(self):
        if self.is_zero:
            return "0"
        return " + ".join(
            f"({c})*X^{i}" if i else f"({c})"
            for i, c in enumerate(self.coeffs)
            if not c.is_zero
        )


def poly_valuation(A: KPolynomial, p: Place) -> int:
    """min of the coefficient valuations of A at p."""
    if A.is_zero:
        raise ZeroInput("valuation of the zero polynomial")
    return min(valuation(c, p) for c in A.coeffs if not c.is_zero)


def poly_height(A: KPolynomial) -> int:
    """Projective height of the coefficient vector of A."""
    if A.is_zero:
        raise ZeroInput("height of the zero polynomial")
    return projective_height(A.coeffs)


# ---------------------------------------------------------------------------
# Counting functions and S-arithmetic
# ---------------------------------------------------------------------------


def truncated_counting(b: RationalFunction, S: PlaceSet) -> int:
    """Degree-weighted count of distinct zeros of b outside S."""
    if b.is_zero:
        raise ZeroInput("counting function of 0")
    zeros = strip_places(radical(b.num), S) if b.num.degree > 0 else Polynomial.one(b.field)
    count = zeros.degree
    if not S.has_infinity and b.den.degree > b.num.degree:
        count += 1
    return count


def gcd_counting(f: RationalFunction, g: RationalFunction, S: PlaceSet, truncated: bool = False) -> int:
    """N_S(gcd(f, g)) for S-integers f, g; capped at 1 per place when truncated."""
    if f.is_zero or g.is_zero:
        raise ZeroInput("gcd counting of 0")
    for x in (f, g):
        if not is_s_integer(x, S):
            raise NotSInteger("gcd counting requires S-integers")
    G = strip_places(poly_gcd(f.num, g.num), S)
    if truncated and G.degree > 0:
        G = radical(G)
    count = G.degree
    if not S.has_infinity:
        vf = f.den.degree - f.num.degree
        vg = g.den.degree - g.num.degree
        m = min(vf, vg)
        if m > 0:
            count += 1 if truncated else m
    return count


def deg_ins(f: RationalFunction) -> int:
    """Inseparability degree: largest p-power p^l with f a p^l-th power (1 in char 0)."""
    if f.is_constant:
        raise ConstantInput("deg_ins of a constant")
    ch = f.field.char
    if ch == 0:
        return 1
    out = 1
    cur = f
    while True:
        rn = poly_pth_root(cur.num)
        rd = poly_pth_root(cur.den)
        if rn is None or rd is None:
            return out
        cur = RationalFunction(rn, rd)
        out *= ch
        if cur.is_constant:
            return out


def chi_S(S: PlaceSet, genus: int = 0) -> int:
    """chi_S = 2*genus - 2 + (degree-weighted size of S)."""
    return 2 * genus - 2 + S.weighted_size


def is_s_integer(f: RationalFunction, S: PlaceSet) -> bool:
    """No poles outside S."""
    if f.is_zero:
        raise ZeroInput("S-integrality of 0")
    if strip_places(f.den, S).degree > 0:
        return False
    return S.has_infinity or f.num.degree <= f.den.degree


def is_s_unit(f: RationalFunction, S: PlaceSet) -> bool:
    """Neither zeros nor poles outside S."""
    if f.is_zero:
        raise ZeroInput("S-unit test of 0")
    if strip_places(f.den, S).degree > 0 or strip_places(f.num, S).degree > 0:
        return False
    return S.has_infinity or f.num.degree == f.den.degree
