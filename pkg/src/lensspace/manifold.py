"""
Normal forms for closed manifolds built from lens spaces.

A ClosedManifold is a connected sum of prime summands: oriented lens spaces
L(p, q) with p > 1 and S1xS2. The empty sum is S3. Lens summands are stored in
the canonical oriented form q = min(q mod p, q^-1 mod p).
"""

import math
import re
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from ..utils.exceptions import DatasetError, NotCoprime


@dataclass(frozen=True, order=True)
class Lens:
    """Oriented lens space L(p, q) in canonical form."""

    p: int
    q: int

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


@dataclass(frozen=True, order=True)
class SphereProduct:
    """S1xS2, the result of 0-surgery on the unknot."""

    def __str__(self) -> str:
        return "S1xS2"


S1XS2 = SphereProduct()

Prime = Union[Lens, SphereProduct]


def _prime_key(prime: Prime) -> Tuple[int, int, int]:
    if isinstance(prime, Lens):
        return (0, prime.p, prime.q)
    return (1, 0, 0)


def canonicalize(p: int, q: int) -> Optional[Prime]:
    """
    Canonical representative of the oriented class of L(p, q).

    L(-p, q) is first rewritten as L(p, -q). Returns S1XS2 for p = 0 and None
    for |p| = 1, which is S3 and therefore not a prime summand.

    Raises:
        NotCoprime: if gcd(p, q) != 1
    """
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"L({p},{q}) needs coprime parameters")
    if p == 0:
        return S1XS2
    if p < 0:
        p, q = -p, -q
    if p == 1:
        return None
    residue = q % p
    return Lens(p, min(residue, pow(residue, -1, p)))


def unoriented_class(p: int, q: int) -> Tuple[int, ...]:
    """All q' with L(p, q') homeomorphic to L(p, q) ignoring orientation."""
    residue = q % p
    inverse = pow(residue, -1, p)
    return tuple(sorted({residue, inverse, (-residue) % p, (-inverse) % p}))


@dataclass(frozen=True)
class ClosedManifold:
    """Connected sum of primes in sorted order; the empty sum is S3."""

    summands: Tuple[Prime, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'summands', tuple(sorted(self.summands, key=_prime_key)))

    @classmethod
    def parse(cls, text: str) -> 'ClosedManifold':
        """Parse the printed form, e.g. ``L(2,1)#L(3,1)``, ``S3`` or ``S1xS2``."""
        pieces = [piece.strip() for piece in text.split('#')]
        result = S3
        for piece in pieces:
            normalized = piece.replace(' ', '').replace('³', '3').replace('¹', '1').replace('²', '2')
            if normalized.upper() == 'S3':
                continue
            if normalized.upper() in ('S1XS2', 'S1×S2'):
                result = connected_sum(result, ClosedManifold((S1XS2,)))
                continue
            match = re.fullmatch(r'L\(([-+]?\d+),([-+]?\d+)\)', normalized)
            if match is None:
                raise DatasetError(f"Cannot parse manifold {piece!r}")
            result = connected_sum(result, lens_space(int(match.group(1)), int(match.group(2))))
        return result

    @property
    def lenses(self) -> List[Lens]:
        return [s for s in self.summands if isinstance(s, Lens)]

    @property
    def is_sphere(self) -> bool:
        return not self.summands

    @property
    def is_prime(self) -> bool:
        return len(self.summands) == 1

    def __str__(self) -> str:
        if not self.summands:
            return "S3"
        return "#".join(str(s) for s in self.summands)


S3 = ClosedManifold(())


def lens_space(p: int, q: int) -> ClosedManifold:
    """L(p, q) as a ClosedManifold, including the degenerate S3 and S1xS2 cases."""
    prime = canonicalize(p, q)
    return S3 if prime is None else ClosedManifold((prime,))


def connected_sum(*manifolds: ClosedManifold) -> ClosedManifold:
    summands: List[Prime] = []
    for manifold in manifolds:
        summands.extend(manifold.summands)
    return ClosedManifold(tuple(summands))


def mirror(manifold: ClosedManifold) -> ClosedManifold:
    """Reverse orientation of every summand."""
    summands = []
    for prime in manifold.summands:
        summands.append(canonicalize(prime.p, -prime.q) if isinstance(prime, Lens) else prime)
    return ClosedManifold(tuple(summands))


def is_homeomorphic(first: ClosedManifold, second: ClosedManifold, oriented: bool = False) -> bool:
    """
    Compare closed manifolds.

    Oriented mode compares canonical summand multisets. Unoriented mode also
    accepts the mirror of the whole sum; summands are never mirrored one by one.
    """
    if first == second:
        return True
    if oriented:
        return False
    return first == mirror(second)


def unoriented_key(manifold: ClosedManifold) -> ClosedManifold:
    """Representative of the unoriented class: the smaller of A and mirror(A)."""
    flipped = mirror(manifold)
    return min(manifold, flipped, key=lambda m: [_prime_key(s) for s in m.summands])


def h1_order(manifold: ClosedManifold) -> int:
    """|H1| as a product over summands; 0 when an S1xS2 summand is present."""
    order = 1
    for prime in manifold.summands:
        if isinstance(prime, SphereProduct):
            return 0
        order *= prime.p
    return order


def is_amphichiral(lens: Lens) -> bool:
    """L(p, q) admits an orientation-reversing self-homeomorphism iff q^2 = -1 mod p."""
    return (lens.q * lens.q + 1) % lens.p == 0
