"""
Tests for lens space normal forms and chain surgery.
"""

import math

import pytest

from src.lensspace import (
    Lens,
    S1XS2,
    S3,
    ChainDescription,
    ClosedManifold,
    canonicalize,
    chain_eval,
    chain_h1_oracle,
    connected_sum,
    h1_order,
    is_amphichiral,
    is_homeomorphic,
    lens_from_surgery,
    lens_space,
    mirror,
    reverse_chain,
    unoriented_class,
    unoriented_key,
)
from src.rational import ExtRational, INF, absorb_all_zeros
from src.utils.exceptions import DatasetError, InvalidChain, NotCoprime


def random_manifold(rng, max_p=30):
    """A connected sum of up to three random lens spaces."""
    summands = []
    for _ in range(int(rng.integers(1, 4))):
        p = int(rng.integers(2, max_p + 1))
        q = int(rng.integers(1, p))
        if math.gcd(p, q) == 1:
            summands.append(lens_space(p, q))
    return connected_sum(*summands)


class TestCanonicalForms:

    @pytest.mark.parametrize("p,q,expected", [
        (19, -8, Lens(19, 7)),
        (7, 2, Lens(7, 2)),
        (7, 4, Lens(7, 2)),
        (-5, 2, Lens(5, 2)),
        (5, 3, Lens(5, 2)),
        (0, 1, S1XS2),
        (1, 5, None),
        (-1, 3, None),
    ])
    def test_canonicalize(self, p, q, expected):
        assert canonicalize(p, q) == expected

    def test_canonicalize_rejects_common_factor(self):
        with pytest.raises(NotCoprime):
            canonicalize(4, 2)
        with pytest.raises(NotCoprime):
            canonicalize(0, 3)

    def test_unoriented_class(self):
        assert unoriented_class(7, 1) == (1, 6)
        assert unoriented_class(19, 8) == (7, 8, 11, 12)

    def test_oriented_versus_unoriented(self):
        assert is_homeomorphic(lens_space(7, 1), lens_space(7, 6))
        assert not is_homeomorphic(lens_space(7, 1), lens_space(7, 6), oriented=True)
        assert is_homeomorphic(lens_space(5, 2), lens_space(5, 3), oriented=True)

    def test_amphichirality(self):
        assert is_amphichiral(Lens(5, 2))
        assert is_amphichiral(Lens(2, 1))
        assert not is_amphichiral(Lens(7, 1))
        assert mirror(lens_space(5, 2)) == lens_space(5, 2)

    def test_mirror_is_global(self):
        first = connected_sum(lens_space(3, 1), lens_space(5, 1))
        assert is_homeomorphic(first, connected_sum(lens_space(3, 2), lens_space(5, 4)))
        assert not is_homeomorphic(
            connected_sum(lens_space(3, 1), lens_space(5, 4)),
            connected_sum(lens_space(3, 1), lens_space(5, 1)),
        )

    def test_unoriented_key_picks_one_representative(self):
        assert unoriented_key(lens_space(7, 6)) == unoriented_key(lens_space(7, 1))
        assert unoriented_key(lens_space(7, 6)) == lens_space(7, 1)

    def test_connected_sum_is_order_independent(self):
        first = connected_sum(lens_space(5, 1), lens_space(2, 1))
        second = connected_sum(lens_space(2, 1), lens_space(5, 1))
        assert first == second
        assert str(first) == "L(2,1)#L(5,1)"
        assert connected_sum(S3, lens_space(3, 1)) == lens_space(3, 1)

    def test_h1_order(self):
        assert h1_order(ClosedManifold.parse("L(2,1)#L(3,1)")) == 6
        assert h1_order(S3) == 1
        assert h1_order(connected_sum(lens_space(3, 1), lens_space(0, 1))) == 0

    @pytest.mark.parametrize("text,expected", [
        ("S3", S3),
        ("L(1,0)", S3),
        ("S1xS2", lens_space(0, 1)),
        ("L(19,-8)", lens_space(19, 7)),
        ("L(2,1) # L(3,1)", connected_sum(lens_space(2, 1), lens_space(3, 1))),
    ])
    def test_parse(self, text, expected):
        assert ClosedManifold.parse(text) == expected

    def test_parse_rejects_garbage(self):
        with pytest.raises(DatasetError):
            ClosedManifold.parse("T3")

    def test_mirror_is_an_involution(self, rng):
        for _ in range(300):
            manifold = random_manifold(rng)
            assert mirror(mirror(manifold)) == manifold
            assert unoriented_key(mirror(manifold)) == unoriented_key(manifold)

    def test_homeomorphism_is_an_equivalence(self, rng):
        samples = [random_manifold(rng, max_p=8) for _ in range(40)]
        samples += [mirror(m) for m in samples[:10]]
        for oriented in (True, False):
            for a in samples:
                assert is_homeomorphic(a, a, oriented=oriented)
                for b in samples:
                    ab = is_homeomorphic(a, b, oriented=oriented)
                    assert ab == is_homeomorphic(b, a, oriented=oriented)
                    if oriented and ab:
                        assert is_homeomorphic(a, b)
                    if not ab:
                        continue
                    for c in samples:
                        if is_homeomorphic(b, c, oriented=oriented):
                            assert is_homeomorphic(a, c, oriented=oriented)


class TestChainSurgery:

    @pytest.mark.parametrize("x,expected", [
        (INF, S3),
        (0, lens_space(0, 1)),
        (ExtRational(-19, 8), lens_space(19, 8)),
        (5, lens_space(5, -1)),
        (-1, S3),
    ])
    def test_lens_from_surgery(self, x, expected):
        assert lens_from_surgery(x) == expected

    def test_integral_chain(self):
        result = chain_eval([-3, -2, -2, 3, 0, -1])
        assert is_homeomorphic(result, lens_space(19, 7))
        assert h1_order(result) == 19

    def test_rational_head_is_expanded(self):
        result = chain_eval(ChainDescription.parse("[5/2, 4]"))
        assert h1_order(result) == 18
        assert chain_h1_oracle(["5/2", 4]) == 18

    def test_rational_tail_folds_directly(self):
        # 2 - 1/(7/3) = 11/7
        assert h1_order(chain_eval([2, "7/3"])) == 11

    def test_infinity_splits_into_connected_sum(self):
        assert chain_eval([2, INF, 3]) == connected_sum(lens_space(2, 1), lens_space(3, 2))
        assert chain_eval([INF]) == S3
        assert chain_eval([INF, INF]) == S3
        assert chain_eval([0]) == lens_space(0, 1)

    def test_rational_interior_is_rejected(self):
        with pytest.raises(InvalidChain):
            chain_eval([1, "1/2", 3])

    def test_reversal_preserves_the_manifold(self, rng):
        for _ in range(200):
            chain = [int(v) for v in rng.integers(-5, 6, size=int(rng.integers(1, 7)))]
            assert is_homeomorphic(chain_eval(chain), chain_eval(reverse_chain(chain)))

    def test_zero_absorption_preserves_the_manifold(self, rng):
        for _ in range(500):
            chain = [int(v) for v in rng.integers(-4, 5, size=int(rng.integers(3, 8)))]
            chain[int(rng.integers(1, len(chain) - 1))] = 0
            absorbed = list(absorb_all_zeros(chain).entries)
            assert chain_eval(absorbed) == chain_eval(chain), chain

    def test_oracle_small_cases(self):
        assert chain_h1_oracle([2, -1, 4]) == 14
        assert chain_h1_oracle([0]) == 0
        assert chain_h1_oracle([2, INF, 3]) == 6

    def test_chain_eval_agrees_with_linking_oracle(self, rng):
        for _ in range(1000):
            length = int(rng.integers(1, 9))
            chain = [int(v) for v in rng.integers(-6, 7, size=length)]
            if length > 2 and rng.random() < 0.2:
                chain[int(rng.integers(0, length))] = INF
            assert h1_order(chain_eval(chain)) == chain_h1_oracle(chain), chain

    def test_oracle_with_rational_ends(self, rng):
        for _ in range(300):
            length = int(rng.integers(2, 6))
            chain = [ExtRational(int(v)) for v in rng.integers(-5, 6, size=length)]
            for end in (0, -1):
                den = int(rng.integers(1, 6))
                num = int(rng.integers(-20, 21))
                if num != 0:
                    chain[end] = ExtRational(num, den)
            assert h1_order(chain_eval(chain)) == chain_h1_oracle(chain), chain
