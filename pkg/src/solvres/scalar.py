"""Exact coefficient fields.

Two fields are supported: the rationals, whose elements are ``gmpy2.mpq``
values (``fractions.Fraction`` inputs are accepted and converted), and prime
fields GF(p), whose elements are :class:`Residue` instances.  Both are immutable and support the usual
arithmetic operators, so the algebra code never needs to know which one it is
working over.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from numbers import Integral, Rational

from gmpy2 import mpq

from .errors import DivisionByZero, FieldMismatch


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Residue:
    """An element of GF(p), stored as its representative in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) and GF({other.p}) cannot be mixed")
            return other.value
        if isinstance(other, Integral):
            return int(other)
        if isinstance(other, (Rational, MPQ)):
            raise FieldMismatch(f"GF({self.p}) and QQ cannot be mixed")
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> Residue:
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.p})")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self.inverse() * o

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Residue(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, Integral):
            return self.value == int(other) % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


MPQ = type(mpq())

_GF_RE = re.compile(r"^\s*GF\(\s*(\d+)\s*\)\s*$")


@dataclass(frozen=True)
class Field:
    """Description of a coefficient field: ``Field("QQ")`` or ``Field("GF", p)``."""

    kind: str = "QQ"
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == "QQ":
            if self.modulus is not None:
                raise ValueError("QQ takes no modulus")
        elif self.kind == "GF":
            if self.modulus is None or not _is_prime(self.modulus):
                raise ValueError(f"GF modulus must be prime, got {self.modulus}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        """Coerce an int, Fraction or Residue into this field."""
        if self.kind == "QQ":
            if isinstance(x, Residue):
                raise FieldMismatch("cannot coerce a GF(p) residue into QQ")
            return mpq(x)
        if isinstance(x, Residue):
            if x.p != self.modulus:
                raise FieldMismatch(f"GF({x.p}) residue used in GF({self.modulus})")
            return x
        if not isinstance(x, Integral) and isinstance(x, (Rational, MPQ)):
            return Residue(int(x.numerator), self.modulus) / Residue(int(x.denominator), self.modulus)
        return Residue(int(x), self.modulus)

    def contains(self, c) -> bool:
        if self.kind == "QQ":
            return isinstance(c, MPQ)
        return isinstance(c, Residue) and c.p == self.modulus

    def inv(self, c):
        if not c:
            raise DivisionByZero("inverse of zero")
        if self.kind == "QQ":
            return 1 / mpq(c)
        return self(c).inverse()

    def parse(self, text: str):
        """Parse ``"a"``, ``"a/b"`` or ``"-a/b"`` into a field element."""
        s = text.strip()
        m = re.fullmatch(r"([+-]?\d+)(?:\s*/\s*(\d+))?", s)
        if not m:
            raise ValueError(f"not a coefficient literal: {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise DivisionByZero(f"zero denominator in {text!r}")
        return mpq(num, den) if self.kind == "QQ" else self(num) / self(den)

    def render(self, c) -> str:
        if self.kind == "QQ":
            c = mpq(c)
            return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        return str(self(c).value)

    def __str__(self):
        return "QQ" if self.kind == "QQ" else f"GF({self.modulus})"

    @classmethod
    def from_string(cls, text: str) -> Field:
        if text.strip() == "QQ":
            return QQ
        m = _GF_RE.match(text)
        if not m:
            raise ValueError(f"unknown field {text!r}")
        return cls("GF", int(m.group(1)))


QQ = Field("QQ")


def GF(p: int) -> Field:
    return Field("GF", p)
