"""Exact commutative coefficient rings: integers, rationals and Z/nZ."""
from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, UnsupportedRing

_NUMBER = re.compile(r"^[+-]?\d+(/\d+)?$")


class CoefficientRing:
    """Interface for a commutative ring with unity.

    Values are plain Python objects (``int`` or ``Fraction``) kept in a
    canonical form by :meth:`coerce`, so ``==`` on values is ring equality.
    """

    name: str

    def coerce(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def add(self, a, b):
        return self.coerce(a + b)

    def negate(self, a):
        return self.coerce(-a)

    def multiply(self, a, b):
        return self.coerce(a * b)

    def equal(self, a, b) -> bool:
        return self.coerce(a) == self.coerce(b)

    def is_zero(self, a) -> bool:
        return a == self.zero

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def render(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        text = text.strip()
        if not _NUMBER.match(text):
            raise ParseError(f"not a coefficient: {text!r}")
        return self.coerce(Fraction(text) if "/" in text else int(text))

    def random_element(self, rng: random.Random, nonzero: bool = False):
        raise NotImplementedError

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class IntegerRing(CoefficientRing):
    name: str = "int"

    def coerce(self, value):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ParseError(f"{value} is not an integer")
            return int(value.numerator)
        return int(value)

    def is_unit(self, a) -> bool:
        return a in (1, -1)

    def random_element(self, rng, nonzero=False):
        while True:
            x = rng.randint(-5, 5)
            if x or not nonzero:
                return x


@dataclass(frozen=True)
class RationalRing(CoefficientRing):
    name: str = "rat"

    def coerce(self, value):
        return Fraction(value)

    def is_unit(self, a) -> bool:
        return a != 0

    def render(self, a) -> str:
        return str(Fraction(a))

    def random_element(self, rng, nonzero=False):
        while True:
            x = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            if x or not nonzero:
                return x


@dataclass(frozen=True)
class ModRing(CoefficientRing):
    """Z/nZ with canonical representatives ``0 .. n-1``."""

    modulus: int = 2

    def __post_init__(self):
        if self.modulus < 2:
            raise UnsupportedRing("mod-n rings need n >= 2")

    @property
    def name(self) -> str:
        return f"mod:{self.modulus}"

    def coerce(self, value):
        if isinstance(value, Fraction):
            if math.gcd(value.denominator, self.modulus) != 1:
                raise ParseError(f"{value} has no image mod {self.modulus}")
            return value.numerator * pow(value.denominator, -1, self.modulus) % self.modulus
        return int(value) % self.modulus

    def is_unit(self, a) -> bool:
        return math.gcd(a, self.modulus) == 1

    def random_element(self, rng, nonzero=False):
        lo = 1 if nonzero else 0
        return rng.randint(lo, self.modulus - 1)


ZZ = IntegerRing()
QQ = RationalRing()
F2 = ModRing(2)


def ring_from_name(name: str) -> CoefficientRing:
    """Parse ``int``, ``rat`` or ``mod:<n>``."""
    if name == "int":
        return ZZ
    if name == "rat":
        return QQ
    if name.startswith("mod:"):
        try:
            n = int(name[4:])
        except ValueError:
            raise UnsupportedRing(f"bad modulus in {name!r}") from None
        return ModRing(n)
    raise UnsupportedRing(f"unknown ring {name!r}; expected int, rat or mod:<n>")
