"""
Exceptional fillings of the magic manifold N.

N(α, β, γ) is looked up in a table of parametrized patterns. The table is
symmetric under permuting the three cusps, so every permutation of the filling
is tried against every pattern and all hits must agree up to orientation.
"""

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, List, Optional, Tuple

from ..lensspace.manifold import ClosedManifold, connected_sum, is_homeomorphic, lens_space
from ..rational.continued_fraction import offset_reciprocal
from ..rational.ext_rational import ExtLike, ExtRational
from ..utils.exceptions import MagicInconsistency
from ..utils.logger import get_logger


logger = get_logger(__name__)

Triple = Tuple[ExtRational, ExtRational, ExtRational]


@dataclass(frozen=True)
class MagicPattern:
    label: str
    match: Callable[[ExtRational, ExtRational, ExtRational], Optional[ClosedManifold]]


@dataclass(frozen=True)
class MagicMatch:
    pattern: str
    filling: Triple
    result: ClosedManifold


def _finite(value: ExtRational) -> Optional[Tuple[int, int]]:
    return None if value.is_infinite else (value.num, value.den)


def _n1_sum(x, y, z):
    if x == -3 and y == -1 and _finite(z):
        t, u = _finite(z)
        return connected_sum(lens_space(2, 1), lens_space(t + 3 * u, u))
    return None


def _n2(x, y, z):
    if x == -3 and y == -2 and _finite(z):
        t, u = _finite(z)
        return lens_space(5 * t + 7 * u, 2 * t + 3 * u)
    return None


def _n1_double_twist(x, y, z):
    if x != -3:
        return None
    n, m = offset_reciprocal(y, -1), offset_reciprocal(z, -1)
    if n is None or m is None:
        return None
    return lens_space((2 * n + 1) * (2 * m + 1) - 4, (2 * n + 1) * m - 2)


def _n22_sum(x, y, z):
    if x == -2 and y == -2 and _finite(z):
        t, u = _finite(z)
        return connected_sum(lens_space(3, 1), lens_space(t + 2 * u, u))
    return None


def _n2_twist(x, y, z):
    if x != -2 or not _finite(z):
        return None
    n = offset_reciprocal(y, -2)
    if n is None:
        return None
    t, u = _finite(z)
    return lens_space(3 * n * (t + 2 * u) - 2 * t - u, n * (t + 2 * u) - t - u)


def _n3_twist(x, y, z):
    if x != -1 or not _finite(z):
        return None
    n = offset_reciprocal(y, -3)
    if n is None:
        return None
    t, u = _finite(z)
    return lens_space(2 * n * (t + 3 * u) - t - u, n * (t + 3 * u) - t - 2 * u)


def _n0_sum(x, y, z):
    if x == 0 and y.is_integer and z == -4 - y.num:
        return connected_sum(lens_space(2, 1), lens_space(3, 1))
    return None


def _n0_twist(x, y, z):
    if x != 0 or not y.is_integer:
        return None
    m = offset_reciprocal(z, -4 - y.num)
    if m is None:
        return None
    return lens_space(6 * m - 1, 2 * m - 1)


def _special(values: Tuple[str, str, str], p: int, q: int):
    expected = tuple(ExtRational.parse(v) for v in values)

    def match(x, y, z):
        return lens_space(p, q) if (x, y, z) == expected else None
    return match


MAGIC_PATTERNS: Tuple[MagicPattern, ...] = (
    MagicPattern("N(-3,-1,t/u)", _n1_sum),
    MagicPattern("N(-3,-2,t/u)", _n2),
    MagicPattern("N(-3,-1+1/n,-1+1/m)", _n1_double_twist),
    MagicPattern("N(-2,-2,t/u)", _n22_sum),
    MagicPattern("N(-2,-2+1/n,t/u)", _n2_twist),
    MagicPattern("N(-1,-3+1/n,t/u)", _n3_twist),
    MagicPattern("N(0,n,-4-n)", _n0_sum),
    MagicPattern("N(0,n,-4-n+1/m)", _n0_twist),
    MagicPattern("N(-3/2,-5/2,-2)", _special(('-3/2', '-5/2', '-2'), 2, 1)),
    MagicPattern("N(-3/2,-5/2,-1)", _special(('-3/2', '-5/2', '-1'), 13, 5)),
    MagicPattern("N(-4,-1/2,-1)", _special(('-4', '-1/2', '-1'), 11, 3)),
    MagicPattern("N(-4,-1/2,0)", _special(('-4', '-1/2', '0'), 13, 5)),
)


def magic_patterns() -> Tuple[MagicPattern, ...]:
    return MAGIC_PATTERNS


def magic_matches(alpha: ExtLike, beta: ExtLike, gamma: ExtLike) -> List[MagicMatch]:
    """Every (permutation, pattern) hit, in a fixed order independent of argument order."""
    filling = sorted((ExtRational.of(v) for v in (alpha, beta, gamma)), key=ExtRational.sort_key)
    hits: List[MagicMatch] = []
    seen = set()
    for ordered in permutations(filling):
        if ordered in seen:
            continue
        seen.add(ordered)
        for pattern in MAGIC_PATTERNS:
            result = pattern.match(*ordered)
            if result is not None:
                hits.append(MagicMatch(pattern.label, ordered, result))
    return hits


def magic_filling(alpha: ExtLike, beta: ExtLike, gamma: ExtLike) -> Optional[ClosedManifold]:
    """
    Look up N(α, β, γ).

    Returns:
        The filling, or None when no pattern applies

    Raises:
        MagicInconsistency: if two matching patterns disagree up to orientation
    """
    hits = magic_matches(alpha, beta, gamma)
    if not hits:
        return None
    first = hits[0]
    for other in hits[1:]:
        if not is_homeomorphic(first.result, other.result):
            message = (f"N({alpha},{beta},{gamma}): {first.pattern} gives {first.result} "
                       f"but {other.pattern} gives {other.result}")
            logger.warning(message)
            raise MagicInconsistency(message, [(h.pattern, h.result) for h in hits])
    return first.result
