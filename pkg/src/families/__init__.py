from .params import FamilyParams, Regime
from .magic import MAGIC_PATTERNS, MagicMatch, MagicPattern, magic_filling, magic_matches, magic_patterns
from .whitehead import whitehead_filling, whitehead_shift
from .surgery import (
    PresentationKind,
    compute_Y,
    compute_Ystar,
    is_magic_permutation,
    magic_label,
    presentation_kind,
    strongly_invertible_guaranteed,
    ystar_chain,
)
from .cable import (
    CableSpaceKind,
    ThickenedTorus,
    TorusKnotExterior,
    TwoSolidTori,
    cable_slope,
    classify_cable,
)
from .realizability import LensFamily, realizability_closed_form, realizable_as
