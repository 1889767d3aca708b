"""
Slopes, multislopes and normalized lengths on cusp tori.

A cusp is a flat torus C / (Z mu + Z lambda). The slope (p, q) is the
translation p*mu + q*lambda, and its normalized length is measured after
rescaling the torus to area 1.
"""

import math
import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from ..rational.ext_rational import ExtLike, ExtRational
from ..utils.config import config
from ..utils.exceptions import InvalidCusp, InvalidMultislope, UnsupportedParameters
from ..utils.logger import get_logger


logger = get_logger(__name__)


@dataclass(frozen=True, order=True)
class Slope:
    """Primitive (p, q) with q > 0 or (p, q) = (1, 0); (0, 0) is the empty slope ``*``."""

    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if (p, q) != (0, 0):
            if math.gcd(p, q) != 1:
                raise InvalidMultislope(f"Slope ({p},{q}) is not primitive")
            if q < 0 or (q == 0 and p < 0):
                p, q = -p, -q
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'q', q)

    @classmethod
    def from_rational(cls, value: ExtLike) -> 'Slope':
        value = ExtRational.of(value)
        return cls(value.num, value.den)

    @classmethod
    def parse(cls, text: str) -> 'Slope':
        """``*``, ``p/q``, ``inf`` or ``(p,q)``."""
        body = text.strip()
        if body == '*':
            return EMPTY
        match = re.fullmatch(r'\(\s*([-+]?\d+)\s*,\s*([-+]?\d+)\s*\)', body)
        if match:
            return cls(int(match.group(1)), int(match.group(2)))
        return cls.from_rational(ExtRational.parse(body))

    @property
    def is_empty(self) -> bool:
        return self.p == 0 and self.q == 0

    def __str__(self) -> str:
        return '*' if self.is_empty else f"({self.p},{self.q})"


EMPTY = Slope(0, 0)


@dataclass(frozen=True)
class CuspShape:
    """Translations mu and lambda of a cusp cross-section."""

    mu: complex
    lam: complex

    def __post_init__(self):
        object.__setattr__(self, 'mu', complex(self.mu))
        object.__setattr__(self, 'lam', complex(self.lam))
        if self.area == 0 or self.area <= 1e-14 * abs(self.mu) * abs(self.lam):
            raise InvalidCusp(f"Cusp translations {self.mu} and {self.lam} are linearly dependent")

    @property
    def area(self) -> float:
        return abs((self.mu.conjugate() * self.lam).imag)

    def translation(self, slope: Slope) -> complex:
        return slope.p * self.mu + slope.q * self.lam


@dataclass(frozen=True)
class Multislope:
    """One slope (or ``*``) per cusp."""

    slopes: Tuple[Slope, ...]

    def __post_init__(self):
        object.__setattr__(self, 'slopes', tuple(self.slopes))

    @classmethod
    def of(cls, slopes: Union['Multislope', Iterable[Union[Slope, ExtLike]]]) -> 'Multislope':
        if isinstance(slopes, Multislope):
            return slopes
        items = []
        for s in slopes:
            if isinstance(s, Slope):
                items.append(s)
            elif isinstance(s, str):
                items.append(Slope.parse(s))
            else:
                items.append(Slope.from_rational(s))
        return cls(tuple(items))

    @classmethod
    def parse(cls, text: str) -> 'Multislope':
        """Comma-separated components, e.g. ``*, 1, -2, 2, 1/2``; parenthesized pairs allowed."""
        body = text.strip()
        if body.startswith('[') and body.endswith(']'):
            body = body[1:-1]
        parts = re.findall(r'\([^)]*\)|[^,\s][^,]*', body)
        return cls(tuple(Slope.parse(part) for part in parts))

    def __len__(self) -> int:
        return len(self.slopes)

    def __iter__(self):
        return iter(self.slopes)

    def __getitem__(self, index):
        return self.slopes[index]

    def __str__(self) -> str:
        return '(' + ', '.join(str(s) for s in self.slopes) + ')'


def normalized_length(slope: Slope, cusp: CuspShape) -> float:
    """|p*mu + q*lambda| / sqrt(area); the empty slope has length ∞."""
    if slope.is_empty:
        return math.inf
    return abs(cusp.translation(slope)) / math.sqrt(cusp.area)


def _check_dimensions(ms: Multislope, cusps: Sequence[CuspShape]) -> None:
    if len(ms) != len(cusps):
        raise InvalidMultislope(f"Multislope has {len(ms)} components but there are {len(cusps)} cusps")


def component_lengths(ms: Multislope, cusps: Sequence[CuspShape]) -> List[float]:
    _check_dimensions(ms, cusps)
    return [normalized_length(s, c) for s, c in zip(ms.slopes, cusps)]


def multislope_length(ms: Multislope, cusps: Sequence[CuspShape]) -> float:
    """
    Combined length with 1/L^2 = sum of 1/L_j^2.

    Empty components contribute nothing; the all-empty multislope has length ∞.
    """
    inverse_square = sum(1.0 / (length * length)
                         for length in component_lengths(ms, cusps)
                         if not math.isinf(length))
    if inverse_square == 0:
        return math.inf
    return 1.0 / math.sqrt(inverse_square)


def enumerate_short_slopes(cusp: CuspShape, max_length: float) -> List[Slope]:
    """
    All canonical slopes with normalized length at most ``max_length``.

    For each q >= 0 within the box bound the admissible p form an interval of
    the quadratic |p*mu + q*lambda|^2 <= N^2 * area; candidates are re-checked
    with normalized_length so the result matches a brute-force scan exactly.

    Returns:
        Slopes sorted by (length, q, p)
    """
    if not math.isfinite(max_length):
        raise UnsupportedParameters(f"slope enumeration needs a finite length bound, got {max_length}")
    if max_length < 0:
        return []
    area = cusp.area
    root_area = math.sqrt(area)
    q_bound = math.floor(max_length * abs(cusp.mu) / root_area) + 1
    radius_sq = max_length * max_length * area
    mu_sq = abs(cusp.mu) ** 2
    cross = (cusp.mu.conjugate() * cusp.lam).real

    found = []
    for q in range(0, q_bound + 1):
        lam_part = q * q * abs(cusp.lam) ** 2
        # p^2 |mu|^2 + 2 p q Re(conj(mu) lam) + q^2 |lam|^2 <= radius_sq
        center = -q * cross / mu_sq
        disc = center * center - (lam_part - radius_sq) / mu_sq
        half = math.sqrt(max(disc, 0.0))
        for p in range(math.floor(center - half) - 1, math.ceil(center + half) + 2):
            if math.gcd(p, q) != 1 or (q == 0 and p != 1):
                continue
            slope = Slope(p, q)
            if normalized_length(slope, cusp) <= max_length:
                found.append(slope)

    found.sort(key=lambda s: (normalized_length(s, cusp), s.q, s.p))
    logger.debug(f"{len(found)} slopes of normalized length <= {max_length}")
    return found


def in_psi(ms: Multislope, cusps: Sequence[CuspShape], bound: float) -> bool:
    """Ψ_N membership: every non-empty component is strictly longer than N."""
    return all(length > bound for length in component_lengths(ms, cusps))


def hk_certify(ms: Multislope, cusps: Sequence[CuspShape]) -> bool:
    """True when every non-empty component is longer than the universal constant C."""
    return in_psi(ms, cusps, float(config.get('cusped.hk_constant', 7.5832)))
