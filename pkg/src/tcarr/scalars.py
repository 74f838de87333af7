"""Exact scalars: rationals (``fractions.Fraction``) and cyclotomic numbers.

A cyclotomic number of conductor ``m`` is stored as an integer polynomial in
``zeta`` reduced modulo the ``m``-th cyclotomic polynomial, over a positive
integer denominator.  The representation is canonical, so equal values have
equal ``(num, den)`` pairs and hash alike.
"""
from __future__ import annotations

import functools
from fractions import Fraction
from math import gcd
from numbers import Rational


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod_monic(a, b):
    """Divide integer polynomial ``a`` by monic ``b``; returns (q, r)."""
    a = list(a)
    db = len(b) - 1
    if len(a) <= db:
        return [], _trim(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            q[k - db] = c
            for j in range(db + 1):
                a[k - db + j] -= c * b[j]
    return _trim(q), _trim(a[:db])


@functools.cache
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError(f"conductor must be positive, got {m}")
    p = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            q, r = _poly_divmod_monic(p, list(cyclotomic_polynomial(d)))
            assert not r
            p = q
    return tuple(p)


def _frac_poly_divmod(a, b):
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    db = len(b) - 1
    if len(a) <= db:
        return [], a
    q = [Fraction(0)] * (len(a) - db)
    lead = b[-1]
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] / lead
        q[k - db] = c
        if c:
            for j in range(db + 1):
                a[k - db + j] -= c * b[j]
    return q, _trim(a[:db])


def _frac_poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


class CyclotomicNumber:
    __slots__ = ("m", "num", "den")

    def __init__(self, m: int, num=(), den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        phi = cyclotomic_polynomial(m)
        _, r = _poly_divmod_monic([int(c) for c in num], list(phi))
        den = int(den)
        if den < 0:
            r = [-c for c in r]
            den = -den
        g = den
        for c in r:
            g = gcd(g, c)
        if g > 1:
            r = [c // g for c in r]
            den //= g
        if not r:
            den = 1
        self.m = m
        self.num = tuple(r)
        self.den = den

    @classmethod
    def from_rational(cls, m, q) -> "CyclotomicNumber":
        q = Fraction(q)
        return cls(m, (q.numerator,), q.denominator)

    @classmethod
    def zeta(cls, m, k: int = 1) -> "CyclotomicNumber":
        k %= m
        return cls(m, [0] * k + [1])

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.m != self.m:
                raise ValueError(f"mixed conductors {self.m} and {other.m}")
            return other
        if isinstance(other, Rational):
            return CyclotomicNumber.from_rational(self.m, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.num), len(other.num))
        a = list(self.num) + [0] * (n - len(self.num))
        b = list(other.num) + [0] * (n - len(other.num))
        return CyclotomicNumber(
            self.m, [x * other.den + y * self.den for x, y in zip(a, b)], self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.m, [-c for c in self.num], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber(self.m, _poly_mul(self.num, other.num), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid over Q[x]: find s with s*a = 1 mod phi
        phi = list(cyclotomic_polynomial(self.m))
        r0, r1 = [Fraction(c) for c in phi], [Fraction(c) for c in self.num]
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, rem = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _frac_poly_sub(s0, _poly_mul(q, s1))
        # r1 is a nonzero constant since phi is irreducible
        c = r1[0]
        s = [x / c for x in s1]
        common = 1
        for x in s:
            common = common * x.denominator // gcd(common, x.denominator)
        ints = [int(x * common) for x in s]
        return CyclotomicNumber(self.m, [v * self.den for v in ints], common)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self.m == other.m and self.num == other.num and self.den == other.den
        if isinstance(other, Rational):
            return self == CyclotomicNumber.from_rational(self.m, other)
        return NotImplemented

    def __hash__(self):
        if len(self.num) <= 1:
            # agree with hash of the equal rational
            return hash(Fraction(self.num[0] if self.num else 0, self.den))
        return hash((self.m, self.num, self.den))

    def is_rational(self) -> bool:
        return len(self.num) <= 1

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.num):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z^{k}")
        body = " + ".join(terms) or "0"
        if self.den != 1:
            body = f"({body})/{self.den}"
        return f"Cyc{self.m}[{body}]"


class Field:
    """Scalar field descriptor: ``Field(1)`` is Q, ``Field(m)`` is Q(zeta_m)."""

    def __init__(self, m: int = 1):
        if m < 1:
            raise ValueError(f"conductor must be positive, got {m}")
        self.m = m

    @property
    def is_rational(self) -> bool:
        return self.m == 1

    @property
    def degree(self) -> int:
        return len(cyclotomic_polynomial(self.m)) - 1

    def __eq__(self, other):
        return isinstance(other, Field) and other.m == self.m

    def __hash__(self):
        return hash(("Field", self.m))

    def __repr__(self):
        return "Field(QQ)" if self.m == 1 else f"Field(QQ(zeta_{self.m}))"

    def zeta(self, k: int = 1):
        if self.m == 1:
            return Fraction(1)
        return CyclotomicNumber.zeta(self.m, k)

    def coerce(self, x):
        if self.m == 1:
            if isinstance(x, CyclotomicNumber):
                if not x.is_rational():
                    raise ValueError(f"{x!r} is not rational")
                return Fraction(x.num[0] if x.num else 0, x.den)
            return Fraction(x)
        if isinstance(x, CyclotomicNumber):
            if x.m != self.m:
                raise ValueError(f"conductor {x.m} does not match field conductor {self.m}")
            return x
        return CyclotomicNumber.from_rational(self.m, x)

    def to_json(self) -> dict:
        if self.m == 1:
            return {"type": "rational"}
        return {"type": "cyclotomic", "m": self.m}

    @classmethod
    def from_json(cls, obj) -> "Field":
        kind = obj.get("type")
        if kind == "rational":
            return cls(1)
        if kind == "cyclotomic":
            m = obj.get("m")
            if not isinstance(m, int) or m < 1:
                raise ValueError(f"cyclotomic field needs a positive integer 'm', got {m!r}")
            return cls(m)
        raise ValueError(f"unknown field type {kind!r}")

    def parse_scalar(self, obj):
        """Parse a JSON scalar (``"p/q"``, int, or ``{"num": [...], "den": d}``)."""
        if isinstance(obj, bool):
            raise ValueError(f"bad scalar {obj!r}")
        if isinstance(obj, int):
            return self.coerce(obj)
        if isinstance(obj, str):
            try:
                return self.coerce(Fraction(obj))
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"bad rational scalar {obj!r}") from exc
        if isinstance(obj, dict):
            if self.m == 1:
                raise ValueError(f"cyclotomic scalar {obj!r} in a rational field")
            num, den = obj.get("num"), obj.get("den", 1)
            if (not isinstance(num, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in num)
                    or not isinstance(den, int) or den == 0):
                raise ValueError(f"bad cyclotomic scalar {obj!r}")
            return CyclotomicNumber(self.m, num, den)
        raise ValueError(f"bad scalar {obj!r}")

    def dump_scalar(self, x):
        if self.m == 1:
            x = Fraction(x)
            return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        x = self.coerce(x)
        return {"num": list(x.num), "den": x.den}


QQ = Field(1)
