"""Exact scalar fields: the rationals and prime fields GF(p).

A :class:`Field` is a descriptor. Elements handed to users are
:class:`Scalar` objects; containers elsewhere in the package store *raw*
values (``Fraction`` for Q, ``int`` residues for GF(p)) and go through the
``Field`` helpers (``reduce``, ``inv``, ``parse``, ``format``) to keep them
canonical. Raw values support ``+ - *`` directly; a GF(p) sum or product
must be passed through ``reduce`` before it is stored or compared.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, ParseError

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_INT_RE = re.compile(r"^[+-]?\d+$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class Field:
    """Either the rationals (``Field.rationals()``) or GF(p) (``Field.prime(p)``)."""

    __slots__ = ("kind", "modulus")

    def __init__(self, kind: str, modulus: int | None = None):
        if kind == "Q":
            if modulus is not None:
                raise ValueError("the rationals take no modulus")
        elif kind == "GF":
            if not isinstance(modulus, int) or not _is_prime(modulus):
                raise ValueError(f"modulus must be prime, got {modulus!r}")
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.modulus = modulus

    @classmethod
    def rationals(cls) -> Field:
        return cls("Q")

    @classmethod
    def prime(cls, p: int) -> Field:
        return cls("GF", p)

    @classmethod
    def parse(cls, flag: str) -> Field:
        """Parse a field flag: ``Q`` or ``p=N``."""
        flag = flag.strip()
        if flag in ("Q", "q"):
            return cls.rationals()
        m = re.fullmatch(r"(?:p=|GF\()(\d+)\)?", flag)
        if m is None:
            raise ParseError(f"bad field flag {flag!r} (expected Q or p=N)")
        try:
            return cls.prime(int(m.group(1)))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "Q" else self.modulus

    @property
    def flag(self) -> str:
        return "Q" if self.kind == "Q" else f"p={self.modulus}"

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __repr__(self):
        return "Field.rationals()" if self.kind == "Q" else f"Field.prime({self.modulus})"

    def __str__(self):
        return "Q" if self.kind == "Q" else f"GF({self.modulus})"

    # raw-value helpers

    def reduce(self, x):
        """Canonical raw form of an int / Fraction (or raw arithmetic result)."""
        if self.kind == "Q":
            return x if type(x) is Fraction else Fraction(x)
        if type(x) is Fraction:
            if x.denominator % self.modulus == 0:
                raise DivisionByZero(f"{x} has no image in {self}")
            return x.numerator * pow(x.denominator, -1, self.modulus) % self.modulus
        return int(x) % self.modulus

    def inv(self, x):
        """Inverse of a canonical raw value."""
        if x == 0:
            raise DivisionByZero("inverse of zero")
        if self.kind == "Q":
            return 1 / x
        return pow(x, -1, self.modulus)

    @property
    def zero_raw(self):
        return self.reduce(0)

    @property
    def one_raw(self):
        return self.reduce(1)

    def parse_raw(self, text: str):
        """Parse a scalar literal: ``a/b`` for Q, an integer for GF(p)."""
        text = text.strip()
        if self.kind == "Q":
            if not _RATIONAL_RE.match(text):
                raise ParseError(f"bad rational literal {text!r}")
            num, _, den = text.partition("/")
            if den and int(den) == 0:
                raise ParseError(f"zero denominator in {text!r}")
            return Fraction(int(num), int(den) if den else 1)
        if not _INT_RE.match(text):
            raise ParseError(f"bad GF({self.modulus}) literal {text!r}")
        return int(text) % self.modulus

    def format_raw(self, x) -> str:
        return str(x)

    def random_raw(self, rng, nonzero: bool = False, height: int = 4):
        """Random canonical raw value; rationals have |num|, den <= height."""
        if self.kind == "GF":
            lo = 1 if nonzero else 0
            return rng.randrange(lo, self.modulus)
        while True:
            x = Fraction(rng.randint(-height, height), rng.randint(1, height))
            if x or not nonzero:
                return x

    # Scalar construction

    def __call__(self, value, den: int | None = None) -> Scalar:
        if isinstance(value, Scalar):
            self._check(value.field)
            return value
        if isinstance(value, str):
            return Scalar(self, self.parse_raw(value))
        if den is not None:
            value = Fraction(value, den)
        return Scalar(self, self.reduce(value))

    def coerce_raw(self, value):
        """Raw value from a Scalar, int, Fraction or literal string."""
        if isinstance(value, Scalar):
            self._check(value.field)
            return value.value
        if isinstance(value, str):
            return self.parse_raw(value)
        return self.reduce(value)

    @property
    def zero(self) -> Scalar:
        return Scalar(self, self.zero_raw)

    @property
    def one(self) -> Scalar:
        return Scalar(self, self.one_raw)

    def _check(self, other: Field):
        if other != self:
            raise FieldMismatch(f"{other} vs {self}")


class Scalar:
    """An immutable field element in canonical form."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.reduce(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field.reduce(self.value + o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field.reduce(self.value - o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field.reduce(o - self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field.reduce(self.value * o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field.reduce(self.value * self.field.inv(o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field.reduce(o * self.field.inv(self.value)))

    def __neg__(self):
        return Scalar(self.field, self.field.reduce(-self.value))

    def inv(self) -> Scalar:
        return Scalar(self.field, self.field.reduce(self.field.inv(self.value)))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field.reduce(other)
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"{self.field}({self.value})"

    def __str__(self):
        return self.field.format_raw(self.value)
