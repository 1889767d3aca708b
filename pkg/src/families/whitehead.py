"""
Lens space fillings of the Whitehead link exterior.
"""

from typing import Optional

from ..lensspace.chain import lens_from_surgery
from ..lensspace.manifold import ClosedManifold, S3, lens_space
from ..rational.continued_fraction import offset_reciprocal
from ..rational.ext_rational import ExtLike, ExtRational
from ..utils.exceptions import UnsupportedParameters
from .params import FamilyParams


# (first slope, offset of the second slope, closed form in n)
_TWISTED_FAMILIES = (
    (-1, -6, lambda n: (6 * n - 1, 2 * n - 1)),
    (-2, -4, lambda n: (8 * n - 2, 2 * n - 1)),
    (-3, -3, lambda n: (9 * n - 3, 3 * n - 2)),
)


def _ordered_filling(alpha: ExtRational, beta: ExtRational) -> Optional[ClosedManifold]:
    if beta.is_infinite:
        return S3 if alpha.is_infinite else lens_from_surgery(alpha)
    for first, offset, closed_form in _TWISTED_FAMILIES:
        if alpha != first:
            continue
        n = offset_reciprocal(beta, offset)
        if n is not None:
            return lens_space(*closed_form(n))
    return None


def whitehead_filling(alpha: ExtLike, beta: ExtLike) -> Optional[ClosedManifold]:
    """
    Lens space obtained by (α, β) surgery on the Whitehead link.

    Recognizes (-1, -6+1/n), (-2, -4+1/n), (-3, -3+1/n) and (p/q, ∞) in
    either order.

    Returns:
        The lens space, or None outside the recognized families
    """
    alpha, beta = ExtRational.of(alpha), ExtRational.of(beta)
    result = _ordered_filling(alpha, beta)
    if result is None:
        result = _ordered_filling(beta, alpha)
    return result


def whitehead_shift(params: FamilyParams) -> FamilyParams:
    """
    Y(m, 0, s, ±2) = Y(m, 0, s±1, ∓2): both fill the second cusp along s ± 1/2.

    Raises:
        UnsupportedParameters: unless r = 0 and b = ±2
    """
    if params.r != 0 or params.b not in (ExtRational(2), ExtRational(-2)):
        raise UnsupportedParameters(f"whitehead_shift needs r = 0 and b = ±2, got {params}")
    step = 1 if params.b == 2 else -1
    return FamilyParams(params.m, params.r, params.s + step, -params.b, params.k)
