"""
Surgery on linear chain links.

A chain description [a1, ..., an] is surgery on n linearly linked unknots. An
∞ coefficient deletes its component and splits the chain into a connected sum.
Within a segment only the two end coefficients may be non-integral: a rational
tail folds directly by slam dunks, a rational head is first replaced by the
reversed expansion of its value.
"""

import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from ..rational.continued_fraction import cf_eval, cf_expand
from ..rational.ext_rational import ExtLike, ExtRational
from ..utils.exceptions import InvalidChain
from ..utils.logger import get_logger
from .manifold import ClosedManifold, S3, connected_sum, lens_space


logger = get_logger(__name__)


@dataclass(frozen=True)
class ChainDescription:
    """Ordered surgery coefficients of a linear chain link."""

    coefficients: Tuple[ExtRational, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', tuple(ExtRational.of(c) for c in self.coefficients))

    @classmethod
    def of(cls, coefficients: Union['ChainDescription', Iterable[ExtLike]]) -> 'ChainDescription':
        if isinstance(coefficients, ChainDescription):
            return coefficients
        return cls(tuple(coefficients))

    @classmethod
    def parse(cls, text: str) -> 'ChainDescription':
        """Parse ``-3,-2,-2,3,0,-1`` or ``[2,3,inf,4]``."""
        body = text.strip()
        if body.startswith('[') and body.endswith(']'):
            body = body[1:-1]
        parts = [p for p in re.split(r'\s*,\s*', body.strip()) if p]
        return cls(tuple(ExtRational.parse(p) for p in parts))

    def segments(self) -> List[List[ExtRational]]:
        """Maximal ∞-free segments, empty ones included."""
        result: List[List[ExtRational]] = [[]]
        for coefficient in self.coefficients:
            if coefficient.is_infinite:
                result.append([])
            else:
                result[-1].append(coefficient)
        return result

    def reversed(self) -> 'ChainDescription':
        return ChainDescription(tuple(reversed(self.coefficients)))

    def __len__(self) -> int:
        return len(self.coefficients)

    def __str__(self) -> str:
        return '[' + ','.join(str(c) for c in self.coefficients) + ']'


def reverse_chain(chain: Union[ChainDescription, Iterable[ExtLike]]) -> ChainDescription:
    return ChainDescription.of(chain).reversed()


def lens_from_surgery(x: ExtLike) -> ClosedManifold:
    """
    Surgery on the unknot with coefficient x.

    With x = -p/q the result is L(p, q): S3 for |p| = 1 (including x = ∞) and
    S1xS2 for x = 0.
    """
    x = ExtRational.of(x)
    if x.is_infinite:
        return S3
    return lens_space(-x.num, x.den)


def _expand_head(segment: Sequence[ExtRational]) -> List[ExtRational]:
    head = segment[0]
    if head.is_integer:
        return list(segment)
    expansion = [ExtRational.of(e) for e in reversed(cf_expand(head))]
    return expansion + list(segment[1:])


def segment_value(segment: Sequence[ExtRational]) -> ExtRational:
    """
    Continued-fraction value of one ∞-free segment after head expansion.

    Raises:
        InvalidChain: if an interior coefficient is not an integer
    """
    expanded = _expand_head(segment)
    interior = expanded[1:-1]
    bad = [str(c) for c in interior if not c.is_integer]
    if bad:
        raise InvalidChain(
            f"Interior coefficients must be integers, got {', '.join(bad)} in "
            f"[{','.join(str(c) for c in segment)}]"
        )
    return cf_eval(expanded)


def chain_eval(chain: Union[ChainDescription, Iterable[ExtLike]]) -> ClosedManifold:
    """
    Evaluate surgery on a chain link as a connected sum of lens spaces.

    Args:
        chain: Chain description, ∞ entries allowed

    Returns:
        Canonical ClosedManifold
    """
    chain = ChainDescription.of(chain)
    pieces = []
    for segment in chain.segments():
        if not segment:
            continue
        pieces.append(lens_from_surgery(segment_value(segment)))
    result = connected_sum(*pieces) if pieces else S3
    logger.debug(f"chain_eval {chain} -> {result}")
    return result


def _bareiss_determinant(matrix: np.ndarray) -> int:
    """Fraction-free Gaussian elimination on an object-dtype integer matrix."""
    a = matrix.copy()
    n = a.shape[0]
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k, k] == 0:
            pivots = [i for i in range(k + 1, n) if a[i, k] != 0]
            if not pivots:
                return 0
            a[[k, pivots[0]]] = a[[pivots[0], k]]
            sign = -sign
        a[k + 1:, k + 1:] = (a[k + 1:, k + 1:] * a[k, k]
                             - np.outer(a[k + 1:, k], a[k, k + 1:])) // previous
        previous = a[k, k]
    return int(sign * a[n - 1, n - 1])


def linking_matrix(chain: Union[ChainDescription, Iterable[ExtLike]]) -> np.ndarray:
    """
    Generalized linking presentation of H1.

    Row i carries p_i on the diagonal and q_i next to it, where c_i = p_i/q_i;
    an ∞ row is (1, 0) and decouples the chain.
    """
    coefficients = ChainDescription.of(chain).coefficients
    n = len(coefficients)
    matrix = np.zeros((n, n), dtype=object)
    for i, c in enumerate(coefficients):
        matrix[i, i] = c.num
        if i > 0:
            matrix[i, i - 1] = c.den
        if i < n - 1:
            matrix[i, i + 1] = c.den
    return matrix


def chain_h1_oracle(chain: Union[ChainDescription, Iterable[ExtLike]]) -> int:
    """|H1| of the surgered manifold as |det| of the linking presentation."""
    return abs(_bareiss_determinant(linking_matrix(chain)))
