"""
Declared isometries of cusped manifolds and symmetry-breaking multislopes.

Isometry groups are inputs: each action permutes cusps and acts on slopes by
a unimodular matrix per cusp. Slopes are unoriented, so images are compared
after canonicalization.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from ..rational.ext_rational import ExtLike, ExtRational
from ..utils.config import config
from ..utils.exceptions import InvalidMultislope, ManifoldDataError, UnsupportedParameters
from .slopes import (
    EMPTY,
    CuspShape,
    Multislope,
    Slope,
    component_lengths,
    enumerate_short_slopes,
    hk_certify,
    normalized_length,
)


Matrix = Tuple[Tuple[int, int], Tuple[int, int]]

IDENTITY_MATRIX: Matrix = ((1, 0), (0, 1))


@dataclass(frozen=True)
class IsometryAction:
    """Permutation of cusps plus the induced action on each cusp's slopes."""

    perm: Tuple[int, ...]
    maps: Tuple[Matrix, ...]
    orientation: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'perm', tuple(int(i) for i in self.perm))
        object.__setattr__(self, 'maps', tuple(
            tuple(tuple(int(x) for x in row) for row in matrix) for matrix in self.maps
        ))
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ManifoldDataError(f"perm: {list(self.perm)} is not a permutation")
        if len(self.maps) != len(self.perm):
            raise ManifoldDataError(f"maps: expected {len(self.perm)} matrices, got {len(self.maps)}")
        for j, ((a, b), (c, d)) in enumerate(self.maps):
            det = a * d - b * c
            if det not in (1, -1):
                raise ManifoldDataError(f"maps/{j}: determinant {det} is not ±1")
        if self.orientation not in (1, -1):
            raise ManifoldDataError(f"orientation: {self.orientation} is not ±1")

    @property
    def is_identity(self) -> bool:
        return (self.orientation == 1
                and all(i == j for i, j in enumerate(self.perm))
                and all(matrix == IDENTITY_MATRIX for matrix in self.maps))

    @property
    def is_involution(self) -> bool:
        return all(self.perm[self.perm[j]] == j for j in range(len(self.perm)))

    def __len__(self) -> int:
        return len(self.perm)


@dataclass(frozen=True)
class CuspedManifoldData:
    name: str
    cusps: Tuple[CuspShape, ...]
    isometries: Tuple[IsometryAction, ...] = ()
    description: str = field(default='', compare=False)

    @property
    def cusp_count(self) -> int:
        return len(self.cusps)


def _image(matrix: Matrix, slope: Slope) -> Slope:
    if slope.is_empty:
        return EMPTY
    (a, b), (c, d) = matrix
    return Slope(a * slope.p + b * slope.q, c * slope.p + d * slope.q)


def apply_isometry(action: IsometryAction, ms: Multislope) -> Multislope:
    """
    Push a multislope forward: component j lands on cusp perm[j] as maps[j] . (p, q).

    Raises:
        InvalidMultislope: if the dimensions differ
    """
    ms = Multislope.of(ms)
    if len(ms) != len(action):
        raise InvalidMultislope(f"Multislope has {len(ms)} components, isometry acts on {len(action)} cusps")
    image: List[Slope] = [EMPTY] * len(ms)
    for j, slope in enumerate(ms.slopes):
        image[action.perm[j]] = _image(action.maps[j], slope)
    return Multislope(tuple(image))


def is_symmetry_breaking(ms: Multislope, data: CuspedManifoldData) -> bool:
    """True when every declared non-identity isometry moves ``ms``."""
    ms = Multislope.of(ms)
    if len(ms) != data.cusp_count:
        raise InvalidMultislope(f"Multislope has {len(ms)} components but {data.name} has {data.cusp_count} cusps")
    return all(apply_isometry(g, ms) != ms for g in data.isometries if not g.is_identity)


def _slopes(*values: ExtLike) -> Multislope:
    return Multislope((EMPTY,) + tuple(Slope.from_rational(v) for v in values))


def family_multislope(r: ExtLike, s: ExtLike, b: ExtLike, k: int) -> Multislope:
    """
    Filling (*, r-k, 1+s, 1+1/b, -1/k) of the five-cusped bulk manifold.

    Raises:
        UnsupportedParameters: for b = 0
    """
    r, s, b = ExtRational.of(r), ExtRational.of(s), ExtRational.of(b)
    if b == 0:
        raise UnsupportedParameters("b = 0 makes 1+1/b the trivial slope")
    return _slopes(r - k, 1 + s, 1 + b.reciprocal(), -ExtRational(k).reciprocal())


def reducible_family_multislope(r: ExtLike, b: ExtLike, k: int) -> Multislope:
    """Filling (*, r-k, 1+1/b, -1/k) of the four-cusped reducible fillings N_{-4} and N_{-3}."""
    r, b = ExtRational.of(r), ExtRational.of(b)
    if b == 0:
        raise UnsupportedParameters("b = 0 makes 1+1/b the trivial slope")
    return _slopes(r - k, 1 + b.reciprocal(), -ExtRational(k).reciprocal())


def whitehead_family_multislope(b: ExtLike, k: int) -> Multislope:
    """Filling (*, -k, 1+1/b, -1/k) of the four-cusped Whitehead-type filling."""
    b = ExtRational.of(b)
    if b == 0:
        raise UnsupportedParameters("b = 0 makes 1+1/b the trivial slope")
    return _slopes(ExtRational(-k), 1 + b.reciprocal(), -ExtRational(k).reciprocal())


def preserved_slopes(action: IsometryAction, cusp_index: int, cusp: CuspShape,
                     max_length: float) -> List[Slope]:
    """Slopes on a cusp fixed by ``action`` up to sign, shortest first."""
    if action.perm[cusp_index] != cusp_index:
        return []
    matrix = action.maps[cusp_index]
    return [s for s in enumerate_short_slopes(cusp, max_length) if _image(matrix, s) == s]


def shortest_preserved_slopes(action: IsometryAction, cusp_index: int, cusp: CuspShape,
                              max_length: float, tolerance: float = 1e-12) -> List[Slope]:
    """The length-minimal preserved slopes; a single entry means a unique shortest class."""
    candidates = preserved_slopes(action, cusp_index, cusp, max_length)
    if not candidates:
        return []
    shortest = normalized_length(candidates[0], cusp)
    return [s for s in candidates if normalized_length(s, cusp) - shortest <= tolerance * shortest]


def certify_filling(ms: Multislope, data: CuspedManifoldData) -> Dict[str, Any]:
    """
    Certify a filling as hyperbolic with geodesic cores and symmetry-breaking.

    Returns:
        Dictionary with per-cusp lengths, both checks, and the combined verdict
    """
    ms = Multislope.of(ms)
    decimals = int(config.get('cusped.report_decimals', 6))
    lengths = component_lengths(ms, data.cusps)
    hyperbolic = hk_certify(ms, data.cusps)
    breaking = is_symmetry_breaking(ms, data)
    return {
        'manifold': data.name,
        'multislope': str(ms),
        'lengths': [None if math.isinf(x) else round(x, decimals) for x in lengths],
        'hk_constant': float(config.get('cusped.hk_constant', 7.5832)),
        'hk_certified': hyperbolic,
        'symmetry_breaking': breaking,
        'certified': hyperbolic and breaking,
        'note': ('asymmetry of the filling additionally requires the multislope to avoid '
                 'the finitely many exceptions bounded by the manifold constant C_M, '
                 'which has no effective estimate'),
    }
