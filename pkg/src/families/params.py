"""
Parameters of the knot family K_k(m, r, s, b).
"""

from dataclasses import dataclass
from enum import Enum

from ..rational.ext_rational import ExtLike, ExtRational


class Regime(Enum):
    """Which closed forms apply to a parameter tuple."""

    MAGIC = "magic"          # m = -1, r anywhere in Q̂
    WHITEHEAD = "whitehead"  # m, r integers with r = 0
    INTEGRAL = "integral"    # m, r integers, r != 0
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class FamilyParams:
    """The tuple (m, r, s, b, k); the regime is flagged, never enforced, at construction."""

    m: ExtRational
    r: ExtRational
    s: ExtRational
    b: ExtRational
    k: int

    def __post_init__(self):
        for name in ('m', 'r', 's', 'b'):
            object.__setattr__(self, name, ExtRational.of(getattr(self, name)))
        object.__setattr__(self, 'k', int(self.k))

    @classmethod
    def of(cls, m: ExtLike, r: ExtLike, s: ExtLike, b: ExtLike, k: int = 0) -> 'FamilyParams':
        return cls(ExtRational.of(m), ExtRational.of(r), ExtRational.of(s), ExtRational.of(b), k)

    @property
    def regime(self) -> Regime:
        if self.m == -1:
            return Regime.MAGIC
        if self.m.is_integer and self.r.is_integer:
            return Regime.WHITEHEAD if self.r == 0 else Regime.INTEGRAL
        return Regime.UNSUPPORTED

    @property
    def is_jointly_primitive(self) -> bool:
        """(m = -1, r in Q̂) or (m, r integers)."""
        return self.regime is not Regime.UNSUPPORTED

    def __str__(self) -> str:
        return f"(m={self.m}, r={self.r}, s={self.s}, b={self.b}, k={self.k})"
