from .slopes import (
    EMPTY,
    CuspShape,
    Multislope,
    Slope,
    component_lengths,
    enumerate_short_slopes,
    hk_certify,
    in_psi,
    multislope_length,
    normalized_length,
)
from .isometry import (
    CuspedManifoldData,
    IsometryAction,
    apply_isometry,
    certify_filling,
    family_multislope,
    is_symmetry_breaking,
    preserved_slopes,
    reducible_family_multislope,
    shortest_preserved_slopes,
    whitehead_family_multislope,
)
from .loader import MANIFOLD_SCHEMA, load_manifold_data, load_manifold_file
