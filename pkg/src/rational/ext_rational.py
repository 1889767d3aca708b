"""
Extended rationals: exact elements of Q united with a single point at infinity.

Every surgery coefficient, slope and continued-fraction value in the toolkit is an
ExtRational. Infinity has the unique representative 1/0; -1/0 normalizes to it.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from ..utils.exceptions import InvalidCoefficient


_RATIONAL_PATTERN = re.compile(r"""
    \A\s*
    (?P<num>[-+]?\d+)
    (?:\s*/\s*(?P<den>[-+]?\d+))?
    \s*\Z
""", re.VERBOSE)

_INFINITY_WORDS = {'inf', '+inf', '-inf', 'infinity', '∞', '1/0', '-1/0'}

ExtLike = Union['ExtRational', int, Fraction, str]


@dataclass(frozen=True, eq=False)
class ExtRational:
    """Element of Q ∪ {1/0} stored in lowest terms with a non-negative denominator."""

    num: int
    den: int = 1

    def __post_init__(self):
        num, den = self.num, self.den
        if not isinstance(num, int) or not isinstance(den, int):
            raise InvalidCoefficient(f"ExtRational needs integer parts, got {num!r}/{den!r}")
        if den == 0:
            if num == 0:
                raise InvalidCoefficient("0/0 is not an extended rational")
            num = 1
        else:
            if den < 0:
                num, den = -num, -den
            g = math.gcd(num, den)
            num, den = num // g, den // g
        object.__setattr__(self, 'num', num)
        object.__setattr__(self, 'den', den)

    @classmethod
    def of(cls, value: ExtLike) -> 'ExtRational':
        """Coerce an int, Fraction, string or ExtRational."""
        if isinstance(value, ExtRational):
            return value
        if isinstance(value, bool):
            raise InvalidCoefficient(f"Not a coefficient: {value!r}")
        if isinstance(value, int):
            return cls(value, 1)
        if isinstance(value, Rational):
            return cls(int(value.numerator), int(value.denominator))
        if isinstance(value, str):
            return cls.parse(value)
        raise InvalidCoefficient(f"Not a coefficient: {value!r}")

    @classmethod
    def parse(cls, text: str) -> 'ExtRational':
        """Parse ``p``, ``p/q`` or ``inf``."""
        stripped = text.strip()
        if stripped.lower().replace(' ', '') in _INFINITY_WORDS:
            return INF
        match = _RATIONAL_PATTERN.match(stripped)
        if match is None:
            raise InvalidCoefficient(f"Invalid rational literal: {text!r}")
        den = match.group('den')
        return cls(int(match.group('num')), int(den) if den is not None else 1)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    @property
    def fraction(self) -> Fraction:
        """The finite value as a Fraction."""
        if self.is_infinite:
            raise InvalidCoefficient("∞ has no finite value")
        return Fraction(self.num, self.den)

    def __int__(self) -> int:
        if not self.is_integer:
            raise InvalidCoefficient(f"{self} is not an integer")
        return self.num

    def reciprocal(self) -> 'ExtRational':
        """1/x, total on Q̂: 1/0 = ∞ and 1/∞ = 0."""
        if self.is_infinite:
            return ZERO
        return ExtRational(self.den, self.num)

    def ceil(self) -> int:
        return math.ceil(self.fraction)

    def __neg__(self) -> 'ExtRational':
        if self.is_infinite:
            return self
        return ExtRational(-self.num, self.den)

    def __add__(self, other: ExtLike) -> 'ExtRational':
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_infinite and other.is_infinite:
            raise InvalidCoefficient("∞ + ∞ is undefined")
        if self.is_infinite or other.is_infinite:
            return INF
        return ExtRational.of(self.fraction + other.fraction)

    __radd__ = __add__

    def __sub__(self, other: ExtLike) -> 'ExtRational':
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: ExtLike) -> 'ExtRational':
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: ExtLike) -> 'ExtRational':
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            raise InvalidCoefficient("Multiplication involving ∞ is undefined")
        return ExtRational.of(self.fraction * other.fraction)

    __rmul__ = __mul__

    def __truediv__(self, other: ExtLike) -> 'ExtRational':
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_infinite or other.is_infinite or other.num == 0:
            raise InvalidCoefficient(f"{self} / {other} is undefined")
        return ExtRational.of(self.fraction / other.fraction)

    def __eq__(self, other) -> bool:
        if isinstance(other, ExtRational):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return not self.is_infinite and self.fraction == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_infinite:
            return hash(('ExtRational', 'inf'))
        return hash(self.fraction)

    def sort_key(self):
        """Total order with ∞ placed after every finite value."""
        return (1, Fraction(0)) if self.is_infinite else (0, self.fraction)

    def __str__(self) -> str:
        if self.is_infinite:
            return 'inf'
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"ExtRational('{self}')"


def _coerce(value):
    try:
        return ExtRational.of(value)
    except InvalidCoefficient:
        return NotImplemented


INF = ExtRational(1, 0)
ZERO = ExtRational(0, 1)
ONE = ExtRational(1, 1)
