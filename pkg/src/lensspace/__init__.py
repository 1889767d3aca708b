from .manifold import (
    Lens,
    SphereProduct,
    S1XS2,
    S3,
    ClosedManifold,
    canonicalize,
    connected_sum,
    h1_order,
    is_amphichiral,
    is_homeomorphic,
    lens_space,
    mirror,
    unoriented_class,
    unoriented_key,
)
from .chain import (
    ChainDescription,
    chain_eval,
    chain_h1_oracle,
    lens_from_surgery,
    reverse_chain,
)
