"""
Which lens spaces arise from the four-component chains L[3,x,3,y] and L[2,x,4,y].
"""

from enum import Enum
from itertools import chain
from typing import Iterator, Optional, Tuple

from ..lensspace.manifold import ClosedManifold, Lens, is_homeomorphic, lens_space
from ..utils.config import config
from ..utils.exceptions import UnsupportedParameters
from ..utils.logger import get_logger


logger = get_logger(__name__)


class LensFamily(Enum):
    """Chain families L[3,x,3,y] and L[2,x,4,y]."""

    F33 = "33"
    F24 = "24"

    @property
    def lead(self) -> int:
        return 3 if self is LensFamily.F33 else 2

    @property
    def twist(self) -> int:
        return 3 if self is LensFamily.F33 else 4

    @classmethod
    def of(cls, value) -> 'LensFamily':
        if isinstance(value, LensFamily):
            return value
        text = str(value).upper().lstrip('F')
        for family in cls:
            if family.value == text:
                return family
        raise UnsupportedParameters(f"Unknown lens family {value!r}; expected 33 or 24")


def realizability_closed_form(family, x: int, y: int) -> Tuple[int, int]:
    """(P, Q) with L[3,x,3,y] = L(P,Q) (F33) or L[2,x,4,y] = L(P,Q) (F24)."""
    family = LensFamily.of(family)
    a = 1 - family.twist * y
    return family.lead * x * a + 6 * y - 1, x * a + y


def _is_obstructed(order: int, family: LensFamily) -> bool:
    # Both closed forms have P = -1 mod lead
    if family is LensFamily.F33:
        return order % 3 == 0
    return order % 2 == 0


def _search_order(bound: int) -> Iterator[int]:
    yield 0
    yield from chain.from_iterable((-y, y) for y in range(1, bound + 1))


def realizable_as(target: ClosedManifold, family) -> Optional[Tuple[int, int]]:
    """
    Find (x, y) whose chain is homeomorphic to ``target``.

    Args:
        target: A single lens space
        family: LensFamily.F33 or LensFamily.F24 (or '33' / '24')

    Returns:
        A witness (x, y), or None when the target is not in the family

    Raises:
        UnsupportedParameters: if target is not a single lens space
    """
    family = LensFamily.of(family)
    if not target.is_prime or not isinstance(target.summands[0], Lens):
        raise UnsupportedParameters(f"realizable_as needs a single lens space, got {target}")
    order = target.summands[0].p

    if _is_obstructed(order, family):
        logger.debug(f"{target} obstructed for {family.name} by |H1| mod {family.lead}")
        return None

    bound = order + int(config.get('realizability.extra_search_margin', 2))
    for y in _search_order(bound):
        a = 1 - family.twist * y
        for signed in (order, -order):
            numerator = signed - 6 * y + 1
            if numerator % (family.lead * a) != 0:
                continue
            x = numerator // (family.lead * a)
            p, q = realizability_closed_form(family, x, y)
            if is_homeomorphic(lens_space(p, q), target):
                return x, y
    return None
