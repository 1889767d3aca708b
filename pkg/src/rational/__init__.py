from .ext_rational import ExtRational, INF, ZERO, ONE
from .continued_fraction import (
    CFWord,
    ext_sub_inv,
    cf_eval,
    cf_expand,
    cf_zero_absorb,
    absorb_all_zeros,
    negate_word,
    offset_reciprocal,
)
