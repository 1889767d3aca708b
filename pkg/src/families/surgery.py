"""
Closed-form evaluators for the ambient manifold Y and the surgered manifold Y*
of K_k(m, r, s, b).
"""

from enum import Enum
from typing import Optional, Tuple

from ..lensspace.chain import ChainDescription, chain_eval
from ..lensspace.manifold import ClosedManifold
from ..rational.ext_rational import ExtRational, INF
from ..utils.exceptions import InvalidCoefficient, UnsupportedParameters
from ..utils.logger import get_logger
from .magic import magic_filling
from .params import FamilyParams, Regime
from .whitehead import whitehead_filling


logger = get_logger(__name__)

_STRONG_INVERSION_S = (ExtRational(0), ExtRational(-1), ExtRational(-2), INF)
_STRONG_INVERSION_B = (INF, ExtRational(-1), ExtRational(-1, 2), ExtRational(0))


class PresentationKind(Enum):
    LJP = "LJP"
    MJP = "MJP"


def magic_label(params: FamilyParams) -> Tuple[ExtRational, ExtRational, ExtRational]:
    """The magic-manifold filling (r, 1+s, 1+1/b) that realizes Y(-1, r, s, b)."""
    return (params.r, 1 + params.s, 1 + params.b.reciprocal())


def is_magic_permutation(label, params: FamilyParams) -> bool:
    """True when ``label`` is a permutation of (r, 1+s, 1+1/b)."""
    expected = sorted(magic_label(params), key=ExtRational.sort_key)
    given = sorted((ExtRational.of(v) for v in label), key=ExtRational.sort_key)
    return expected == given


def compute_Y(params: FamilyParams) -> Optional[ClosedManifold]:
    """
    Ambient manifold Y(m, r, s, b).

    Uses the magic manifold when m = -1 and the Whitehead link when r = 0;
    other regimes have no stated closed form and give None.
    """
    if params.m == -1:
        return magic_filling(*magic_label(params))
    if params.r == 0:
        try:
            second = params.s + params.b.reciprocal()
        except InvalidCoefficient as e:
            raise UnsupportedParameters(f"s + 1/b is undefined for {params}: {str(e)}")
        return whitehead_filling(params.m, second)
    return None


def ystar_chain(params: FamilyParams) -> ChainDescription:
    """
    Chain description of Y*_k(m, r, s, b).

    Raises:
        UnsupportedParameters: outside m = -1 and (r = 0, m and s integers), or
            when b is a non-integral rational
    """
    m, r, s, b, k = params.m, params.r, params.s, params.b, params.k
    if not b.is_infinite and not b.is_integer:
        raise UnsupportedParameters(f"b must be an integer or ∞, got {b}")
    if m == -1:
        return ChainDescription((s, -b - 1, ExtRational(k), ExtRational(1 - k), ExtRational(0), r))
    if r == 0 and m.is_integer and s.is_integer:
        return ChainDescription((ExtRational(-k), m, ExtRational(k - 1), -b - 1, s))
    raise UnsupportedParameters(f"No chain description of Y* for {params}")


def compute_Ystar(params: FamilyParams) -> ClosedManifold:
    """Surgered manifold Y*_k(m, r, s, b) as a lens space or connected sum."""
    chain = ystar_chain(params)
    result = chain_eval(chain)
    logger.debug(f"Y* {params} = {chain} -> {result}")
    return result


def presentation_kind(params: FamilyParams) -> PresentationKind:
    """
    LJP for integral b and MJP for b = ∞.

    Raises:
        UnsupportedParameters: outside the jointly primitive regime or for non-integral b
    """
    if params.regime is Regime.UNSUPPORTED:
        raise UnsupportedParameters(
            f"{params} is not jointly primitive: need m = -1, or m and r integers"
        )
    if params.b.is_infinite:
        return PresentationKind.MJP
    if params.b.is_integer:
        return PresentationKind.LJP
    raise UnsupportedParameters(f"b = {params.b} is neither an integer nor ∞")


def strongly_invertible_guaranteed(params: FamilyParams) -> bool:
    """True when s ∈ {0,-1,-2,∞} or b ∈ {∞,-1,-1/2,0}; False only means no guarantee."""
    return params.s in _STRONG_INVERSION_S or params.b in _STRONG_INVERSION_B
