"""Exact coefficient fields: the rationals and prime fields GF(p).

Scalars are plain Python values (``Fraction`` for the rationals, ``int`` in
``[0, p)`` for GF(p)); the field object supplies the arithmetic.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import ValidationError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface; see ``Rationals`` and ``PrimeField``."""

    characteristic = 0

    def __eq__(self, other):
        return type(self) is type(other) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash((type(self).__name__, self.characteristic))

    def add(self, a, b):
        return self.normalize(a + b)

    def sub(self, a, b):
        return self.normalize(a - b)

    def mul(self, a, b):
        return self.normalize(a * b)

    def neg(self, a):
        return self.normalize(-a)

    def power(self, a, n: int):
        if n < 0:
            return self.power(self.inv(a), -n)
        return self.normalize(a ** n) if n else self.one


class Rationals(Field):
    zero = Fraction(0)
    one = Fraction(1)

    def normalize(self, a):
        return Fraction(a)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in the rationals")
        return 1 / Fraction(a)

    def from_ratio(self, num: int, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator in coefficient")
        return Fraction(num, den)

    def render(self, a) -> str:
        return str(Fraction(a))

    def descriptor(self) -> str:
        return "q"

    def elements(self):
        raise ValueError("the rationals are infinite")

    def __repr__(self):
        return "Rationals()"


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValidationError(f"{p} is not prime")
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    @property
    def p(self):
        return self.characteristic

    def normalize(self, a):
        if isinstance(a, Fraction):
            return self.from_ratio(a.numerator, a.denominator)
        return a % self.characteristic

    def power(self, a, n: int):
        if n < 0:
            return pow(self.inv(a), -n, self.characteristic)
        return pow(a, n, self.characteristic)

    def inv(self, a):
        a %= self.characteristic
        if a == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.characteristic})")
        return pow(a, -1, self.characteristic)

    def from_ratio(self, num: int, den: int = 1):
        return (num * self.inv(den)) % self.characteristic

    def render(self, a) -> str:
        return str(a % self.characteristic)

    def descriptor(self) -> str:
        return f"fp:{self.characteristic}"

    def elements(self):
        return range(self.characteristic)

    def __repr__(self):
        return f"PrimeField({self.characteristic})"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str) -> Field:
    """Parse a CLI field descriptor: ``q`` or ``fp:<p>``."""
    t = text.strip().lower()
    if t in ("q", "qq", "rationals"):
        return QQ
    if t.startswith("fp:"):
        try:
            p = int(t[3:])
        except ValueError:
            raise ValidationError(f"bad prime in field descriptor {text!r}") from None
        return PrimeField(p)
    raise ValidationError(f"unknown field descriptor {text!r} (expected 'q' or 'fp:<p>')")
