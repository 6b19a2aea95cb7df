"""Exact coefficient fields: the rationals and prime fields GF(p).

A field object bundles the scalar operations needed by the dense linear
algebra in :mod:`oscalc.linalg`.  Rational scalars are `fractions.Fraction`
(ints are accepted and coerced); GF(p) scalars are plain ints in [0, p).
No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class RationalField:
    """The rationals; arbitrary-precision exact arithmetic."""

    name = "q"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        return x if isinstance(x, Fraction) else Fraction(x)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return Fraction(a.denominator, a.numerator)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("oscalc.QQ")


QQ = RationalField()


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """GF(p) for a prime p; scalars are ints reduced mod p."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.name = f"gf:{p}"
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return x.numerator * pow(den, -1, self.p) % self.p
        return x % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return pow(a, -1, self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("oscalc.GF", self.p))


def GF(p):
    return PrimeField(p)


def parse_field(text):
    """Parse a field descriptor: ``q`` or ``gf:<p>`` (also ``GF <p>``)."""
    t = text.strip().lower().replace(" ", ":")
    if t in ("q", "qq", "rational", "rationals"):
        return QQ
    if t.startswith("gf:"):
        return PrimeField(int(t[3:]))
    raise ValueError(f"unknown field descriptor {text!r}")
