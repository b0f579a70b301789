"""Coefficient fields: the rationals and prime fields F_p.

Elements over the rationals are ``fractions.Fraction`` values (always in
lowest terms with positive denominator, which is the canonical form used in
files and certificates).  Elements over F_p are plain ints in [0, p).  A
FieldSpec bundles the arithmetic so matrices and polynomials can stay
field-agnostic.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import BadScalar, NonCanonicalScalar

_Q_TOKEN = re.compile(r"^(0|-?[1-9][0-9]*)(?:/([1-9][0-9]*))?$")
_FP_TOKEN = re.compile(r"^(0|[1-9][0-9]*)$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """The rationals (kind ``"Q"``) or a prime field (kind ``"Fp"``)."""

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: int | None = None):
        if kind == "Q":
            if p is not None:
                raise ValueError("rationals carry no parameter")
        elif kind == "Fp":
            if not isinstance(p, int) or not is_prime(p):
                raise ValueError(f"{p!r} is not a prime")
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.p = p

    @property
    def is_rationals(self) -> bool:
        return self.kind == "Q"

    # -- constants ---------------------------------------------------------
    @property
    def zero(self):
        return Fraction(0) if self.is_rationals else 0

    @property
    def one(self):
        return Fraction(1) if self.is_rationals else 1

    # -- arithmetic --------------------------------------------------------
    def add(self, a, b):
        return a + b if self.is_rationals else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.is_rationals else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.is_rationals else (a * b) % self.p

    def neg(self, a):
        return -a if self.is_rationals else (-a) % self.p

    def inv(self, a):
        if self.is_rationals:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n: int):
        return Fraction(n) if self.is_rationals else n % self.p

    def coerce(self, value):
        """Accept ints, Fractions (over Q) and canonical strings."""
        if isinstance(value, str):
            return self.parse(value)
        if self.is_rationals:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise BadScalar(f"cannot coerce {value!r} into Q")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise BadScalar(f"denominator of {value} vanishes mod {self.p}")
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        raise BadScalar(f"cannot coerce {value!r} into F_{self.p}")

    # -- canonical text ----------------------------------------------------
    def parse(self, token: str):
        """Parse a canonical scalar string, rejecting non-canonical spellings."""
        if self.is_rationals:
            m = _Q_TOKEN.match(token)
            if not m:
                raise NonCanonicalScalar(token)
            num = int(m.group(1))
            if m.group(2) is None:
                return Fraction(num)
            den = int(m.group(2))
            if den == 1:
                raise NonCanonicalScalar(token, "denominator 1 must be omitted")
            f = Fraction(num, den)
            if f.numerator != num or f.denominator != den:
                raise NonCanonicalScalar(token, "not in lowest terms")
            return f
        m = _FP_TOKEN.match(token)
        if not m:
            raise NonCanonicalScalar(token)
        value = int(token)
        if value >= self.p:
            raise NonCanonicalScalar(token, f"residue not in [0, {self.p})")
        return value

    def format(self, x) -> str:
        return str(x)

    # -- structural --------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "QQ" if self.is_rationals else f"GF({self.p})"

    def to_jsonable(self):
        return "Q" if self.is_rationals else {"Fp": self.p}


QQ = FieldSpec("Q")


def GF(p: int) -> FieldSpec:
    return FieldSpec("Fp", p)
