"""Exact scalar arithmetic over prime fields GF(p) and the rationals.

Matrices keep their entries as *raw* canonical values (``int`` in ``[0, p)``
for GF(p), :class:`fractions.Fraction` for the rationals) and do arithmetic
through the :class:`FieldSpec` methods.  :class:`Scalar` wraps a raw value
together with its field for the public, operator-friendly interface.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, FieldMismatch, ParseError

MAX_PRIME = 2**31

Raw = Union[int, Fraction]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field GF(p) (``p`` set) or the rationals (``p is None``)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if isinstance(self.p, bool) or not isinstance(self.p, int):
                raise ValueError(f"field modulus must be an int, got {self.p!r}")
            if self.p >= MAX_PRIME:
                raise ValueError(f"GF(p) requires p < 2^31, got {self.p}")
            if not is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self):
        return "q" if self.p is None else f"gf {self.p}"

    def __repr__(self):
        return "FieldSpec.rationals()" if self.p is None else f"FieldSpec.gf({self.p})"

    # -- raw-value arithmetic -------------------------------------------------

    @property
    def zero(self) -> Raw:
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self) -> Raw:
        return 1 if self.p is not None else Fraction(1)

    @property
    def minus_one(self) -> Raw:
        return self.p - 1 if self.p is not None else Fraction(-1)

    def coerce(self, x) -> Raw:
        """Canonical raw value of an int, Fraction or :class:`Scalar` ``x``."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"scalar over {x.field} used in {self}")
            return x.value
        if isinstance(x, bool):
            x = int(x)
        if self.p is None:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise TypeError(f"cannot embed {x!r} into the rationals")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return x.numerator % self.p
            raise FieldMismatch(f"fraction {x} is not an element of {self}")
        raise TypeError(f"cannot embed {x!r} into {self}")

    def add(self, x: Raw, y: Raw) -> Raw:
        return (x + y) % self.p if self.p is not None else x + y

    def sub(self, x: Raw, y: Raw) -> Raw:
        return (x - y) % self.p if self.p is not None else x - y

    def mul(self, x: Raw, y: Raw) -> Raw:
        return (x * y) % self.p if self.p is not None else x * y

    def neg(self, x: Raw) -> Raw:
        return (-x) % self.p if self.p is not None else -x

    def inv(self, x: Raw) -> Raw:
        if x == 0:
            raise DivisionByZero(f"zero has no inverse in {self}")
        if self.p is not None:
            return pow(x, -1, self.p)
        return 1 / x

    def div(self, x: Raw, y: Raw) -> Raw:
        return self.mul(x, self.inv(y))

    def centered(self, x: Raw) -> Raw:
        """Representative of smallest absolute value (``p - 1`` becomes ``-1``)."""
        if self.p is not None and x > self.p // 2:
            return x - self.p
        return x

    def format(self, x: Raw) -> str:
        x = self.centered(x)
        if isinstance(x, Fraction) and x.denominator == 1:
            return str(x.numerator)
        return str(x)

    def parse(self, token: str) -> Raw:
        """Parse ``"-3"`` or (rationals only) ``"5/6"`` into a raw value."""
        if not _INT_RE.fullmatch(token):
            if _FRAC_RE.fullmatch(token):
                if self.p is not None:
                    raise FieldMismatch(f"fraction {token!r} not allowed in {self}")
                num, den = token.split("/")
                if int(den) == 0:
                    raise DivisionByZero(f"zero denominator in {token!r}")
                return Fraction(int(num), int(den))
            raise ValueError(f"not an integer or fraction: {token!r}")
        return self.coerce(int(token))


_INT_RE = re.compile(r"[+-]?\d+")
_FRAC_RE = re.compile(r"[+-]?\d+/[+-]?\d+")

Q = FieldSpec.rationals()


def parse_field(text: str) -> FieldSpec:
    """Parse a field designator: ``q`` or ``gf <p>`` (``gf5`` also accepted)."""
    s = text.strip().lower()
    if s == "q":
        return Q
    m = re.fullmatch(r"gf\s*(\d+)", s)
    if not m:
        raise ParseError(f"bad field designator {text!r} (expected 'q' or 'gf <p>')")
    try:
        return FieldSpec.gf(int(m.group(1)))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


@dataclass(frozen=True)
class Scalar:
    """A field element in canonical form.  Equality is structural."""

    value: Raw
    field: FieldSpec

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.coerce(self.value))

    def _other(self, other) -> Raw:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} with {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field.add(self.value, self._other(other)), self.field)

    def __sub__(self, other):
        return Scalar(self.field.sub(self.value, self._other(other)), self.field)

    def __mul__(self, other):
        return Scalar(self.field.mul(self.value, self._other(other)), self.field)

    def __truediv__(self, other):
        return Scalar(self.field.div(self.value, self._other(other)), self.field)

    def __radd__(self, other):
        return self + other

    def __rmul__(self, other):
        return self * other

    def __rsub__(self, other):
        return Scalar(self._other(other), self.field) - self

    def __rtruediv__(self, other):
        return Scalar(self._other(other), self.field) / self

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def inverse(self) -> "Scalar":
        return Scalar(self.field.inv(self.value), self.field)

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.field.format(self.value)


def from_integer(n: int, field: FieldSpec) -> Scalar:
    """Canonical image of the integer ``n`` in ``field``."""
    return Scalar(n, field)


def add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def sub(x: Scalar, y: Scalar) -> Scalar:
    return x - y


def mul(x: Scalar, y: Scalar) -> Scalar:
    return x * y


def div(x: Scalar, y: Scalar) -> Scalar:
    return x / y


def neg(x: Scalar) -> Scalar:
    return -x


def inv(x: Scalar) -> Scalar:
    return x.inverse()
