"""
Cable spaces A(p/q) that appear as surgery duals.
"""

from dataclasses import dataclass
from typing import Union

from ..rational.continued_fraction import cf_eval
from ..rational.ext_rational import ExtLike, ExtRational
from ..utils.exceptions import UnsupportedParameters


@dataclass(frozen=True)
class TorusKnotExterior:
    """Exterior of a (p, q) torus knot in a solid torus; q * qprime = -1 mod p."""

    p: int
    qprime: int

    def __str__(self) -> str:
        return f"TorusKnotExterior({self.p},{self.qprime})"


@dataclass(frozen=True)
class ThickenedTorus:
    def __str__(self) -> str:
        return "ThickenedTorus"


@dataclass(frozen=True)
class TwoSolidTori:
    def __str__(self) -> str:
        return "TwoSolidTori"


CableSpaceKind = Union[TorusKnotExterior, ThickenedTorus, TwoSolidTori]


def cable_slope(m: ExtLike, r: ExtLike, k: int) -> ExtRational:
    """
    Slope x with M*_k(m, r) = A(x).

    m = -1 uses [1, k+1, r-k+1] and allows any r in Q̂; integral m and r use
    [1, k+1, r+1, m+1, -k]. The two words agree when m = -1 and r is an integer.

    Raises:
        UnsupportedParameters: for any other (m, r)
    """
    m, r, k = ExtRational.of(m), ExtRational.of(r), int(k)
    if m == -1:
        return cf_eval([1, k + 1, r - k + 1])
    if m.is_integer and r.is_integer:
        return cf_eval([1, k + 1, r + 1, m + 1, -k])
    raise UnsupportedParameters(f"cable_slope needs m = -1 or integral m, r; got m={m}, r={r}")


def classify_cable(x: ExtLike) -> CableSpaceKind:
    """Identify A(p/q) from the order |p| of its exceptional fiber."""
    x = ExtRational.of(x)
    p, q = x.num, x.den
    if p == 0:
        return TwoSolidTori()
    if abs(p) == 1:
        return ThickenedTorus()
    order = abs(p)
    q_signed = q if p > 0 else -q
    return TorusKnotExterior(order, (-pow(q_signed, -1, order)) % order)
