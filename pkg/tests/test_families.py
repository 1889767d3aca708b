"""
Tests for the parametrized knot family and its closed-form evaluators.
"""

import math
from itertools import permutations

import pytest

from src.families import (
    FamilyParams,
    LensFamily,
    PresentationKind,
    Regime,
    ThickenedTorus,
    TorusKnotExterior,
    TwoSolidTori,
    cable_slope,
    classify_cable,
    compute_Y,
    compute_Ystar,
    is_magic_permutation,
    magic_filling,
    magic_label,
    magic_matches,
    presentation_kind,
    realizability_closed_form,
    realizable_as,
    strongly_invertible_guaranteed,
    whitehead_filling,
    whitehead_shift,
    ystar_chain,
)
from src.lensspace import (
    S3,
    ChainDescription,
    connected_sum,
    h1_order,
    is_homeomorphic,
    lens_space,
    unoriented_class,
)
from src.rational import ExtRational, INF, cf_eval
from src.utils.exceptions import UnsupportedParameters


class TestFamilyParams:

    @pytest.mark.parametrize("m,r,regime", [
        (-1, "1/2", Regime.MAGIC),
        (-1, "inf", Regime.MAGIC),
        (2, 0, Regime.WHITEHEAD),
        (2, 3, Regime.INTEGRAL),
        ("1/2", 0, Regime.UNSUPPORTED),
        (2, "1/3", Regime.UNSUPPORTED),
    ])
    def test_regime(self, m, r, regime):
        params = FamilyParams.of(m, r, -3, 1, 0)
        assert params.regime is regime
        assert params.is_jointly_primitive == (regime is not Regime.UNSUPPORTED)

    def test_presentation_kind(self):
        assert presentation_kind(FamilyParams.of(-1, 0, -3, "inf", 2)) is PresentationKind.MJP
        assert presentation_kind(FamilyParams.of(-1, 0, -3, 2, 2)) is PresentationKind.LJP
        with pytest.raises(UnsupportedParameters):
            presentation_kind(FamilyParams.of(-2, "1/2", -3, 2, 2))
        with pytest.raises(UnsupportedParameters):
            presentation_kind(FamilyParams.of(-1, 0, -3, "1/2", 2))


class TestMagicFillings:

    def test_pattern_lookup(self):
        assert magic_filling(-3, -2, 1) == lens_space(12, 5)
        assert magic_filling(1, -3, -2) == lens_space(12, 5)
        assert len(magic_matches(-3, -2, 1)) >= 2

    def test_special_fillings(self):
        assert is_homeomorphic(magic_filling("-3/2", "-5/2", -2), lens_space(2, 1))
        assert is_homeomorphic(magic_filling(-1, "-1/2", -4), lens_space(11, 3))

    def test_connected_sum_pattern(self):
        expected = connected_sum(lens_space(2, 1), lens_space(3, 1))
        assert is_homeomorphic(magic_filling(0, 1, -5), expected)

    def test_no_pattern(self):
        assert magic_filling(5, 7, 11) is None
        assert magic_matches(5, 7, 11) == []

    def test_matches_do_not_depend_on_argument_order(self):
        assert magic_matches(-1, -2, 2) == magic_matches(2, -1, -2)

    def test_filling_does_not_depend_on_argument_order(self, rng):
        checked = 0
        for _ in range(200):
            u = int(rng.integers(1, 6))
            t = int(rng.integers(-15, 16))
            if math.gcd(t, u) != 1:
                continue
            z = ExtRational(t, u)
            n = int(rng.integers(-6, 7))
            candidates = [
                (-3, -1, z),
                (-3, -2, z),
                (-2, -2, z),
                (-1, ExtRational(-3) + ExtRational(1, n) if n else ExtRational(-3), z),
                (0, n, -4 - n),
            ]
            triple = candidates[int(rng.integers(0, len(candidates)))]
            reference = magic_matches(*triple)
            if not reference:
                continue
            expected = magic_filling(*triple)
            for ordered in permutations(triple):
                assert magic_matches(*ordered) == reference
                assert magic_filling(*ordered) == expected
            checked += 1
        assert checked > 50


class TestAmbientManifold:

    def test_magic_regime(self):
        params = FamilyParams.of(-1, -1, -3, 1, -2)
        assert magic_label(params) == (ExtRational(-1), ExtRational(-2), ExtRational(2))
        assert is_homeomorphic(compute_Y(params), lens_space(7, 1))

    def test_whitehead_regime(self):
        assert compute_Y(FamilyParams.of(-2, 0, -4, 1, 0)) == lens_space(6, 1)
        assert compute_Y(FamilyParams.of(-2, 0, -4, -1, 0)) == lens_space(10, 3)

    def test_integral_regime_has_no_closed_form(self):
        assert compute_Y(FamilyParams.of(-2, 3, -4, 1, 0)) is None

    def test_undefined_second_slope(self):
        with pytest.raises(UnsupportedParameters):
            compute_Y(FamilyParams.of(-2, 0, "inf", 0, 0))

    def test_label_permutation(self):
        params = FamilyParams.of(-1, -1, -3, 1, 0)
        assert is_magic_permutation((-2, -1, 2), params)
        assert is_magic_permutation(("2", "-2", "-1"), params)
        assert not is_magic_permutation((-2, -1, 3), params)

    @pytest.mark.parametrize("b,step", [(2, 1), (-2, -1)])
    def test_whitehead_shift(self, b, step):
        params = FamilyParams.of(-2, 0, -4, b, 3)
        shifted = whitehead_shift(params)
        assert shifted.s == -4 + step
        assert shifted.b == -b
        assert shifted.k == 3
        assert compute_Y(shifted) == compute_Y(params)

    def test_whitehead_shift_needs_b_two(self):
        with pytest.raises(UnsupportedParameters):
            whitehead_shift(FamilyParams.of(-2, 0, -4, 3, 0))
        with pytest.raises(UnsupportedParameters):
            whitehead_shift(FamilyParams.of(-2, 1, -4, 2, 0))


class TestWhiteheadFillings:

    def test_twisted_families(self):
        assert whitehead_filling(-1, -5) == lens_space(5, 1)
        assert whitehead_filling(-5, -1) == lens_space(5, 1)
        assert whitehead_filling(-2, "-7/2") == lens_space(14, 3)
        assert whitehead_filling(-3, -2) == lens_space(6, 1)

    def test_trivial_second_filling(self):
        assert is_homeomorphic(whitehead_filling(3, INF), lens_space(3, 1))
        assert whitehead_filling(INF, INF) == S3

    def test_unrecognized(self):
        assert whitehead_filling(2, 2) is None


class TestSurgeredManifold:

    def test_magic_chain(self):
        params = FamilyParams.of(-1, -1, -3, 1, -2)
        assert ystar_chain(params) == ChainDescription.of([-3, -2, -2, 3, 0, -1])
        assert is_homeomorphic(compute_Ystar(params), lens_space(19, 7))

    def test_whitehead_chain(self):
        params = FamilyParams.of(-2, 0, -4, 1, 3)
        assert ystar_chain(params) == ChainDescription.of([-3, -2, 2, -2, -4])

    def test_unsupported_chains(self):
        with pytest.raises(UnsupportedParameters):
            ystar_chain(FamilyParams.of(-1, 0, -3, "1/2", 0))
        with pytest.raises(UnsupportedParameters):
            ystar_chain(FamilyParams.of(-2, 1, -3, 1, 0))
        with pytest.raises(UnsupportedParameters):
            ystar_chain(FamilyParams.of(-2, 0, "1/2", 1, 0))

    @pytest.mark.parametrize("k", range(-20, 21))
    def test_lens_lens_family_with_positive_b(self, k):
        result = compute_Ystar(FamilyParams.of(-2, 0, -4, 1, k))
        p = 14 * k * k - 6 * k + 3
        assert h1_order(result) == p
        lens = result.lenses[0]
        assert (-14 * k - 1) % p in unoriented_class(lens.p, lens.q)

    @pytest.mark.parametrize("k", range(-20, 21))
    def test_lens_lens_family_with_negative_b(self, k):
        result = compute_Ystar(FamilyParams.of(-2, 0, -4, -1, k))
        assert h1_order(result) == abs(2 * k * k - 10 * k + 5)

    def test_lens_lens_family_member_outside_both_chain_families(self):
        result = compute_Ystar(FamilyParams.of(-2, 0, -4, 1, 3))
        assert is_homeomorphic(result, lens_space(111, 68))
        assert realizable_as(result, LensFamily.F24) is None
        assert realizable_as(result, LensFamily.F33) is None

    def test_strong_inversion_guarantee(self):
        assert not strongly_invertible_guaranteed(FamilyParams.of(-1, -1, -3, 1, 0))
        assert strongly_invertible_guaranteed(FamilyParams.of(-1, -1, -2, 1, 0))
        assert strongly_invertible_guaranteed(FamilyParams.of(-1, -1, -3, "inf", 0))
        assert strongly_invertible_guaranteed(FamilyParams.of(-1, -1, -3, "-1/2", 0))


class TestCableSpaces:

    def test_cable_slope(self):
        assert cable_slope(-1, -2, -2) == ExtRational(3, 2)
        assert cable_slope(-1, -1, 1) == ExtRational(2, 3)
        assert cable_slope(-2, 0, 0) == cf_eval([1, 1, 1, -1, 0])

    @pytest.mark.parametrize("k", range(-8, 9))
    def test_magic_word_matches_integral_word(self, k):
        for r in range(-8, 9):
            assert cable_slope(-1, r, k) == cf_eval([1, k + 1, r + 1, 0, -k])

    def test_cable_slope_unsupported(self):
        with pytest.raises(UnsupportedParameters):
            cable_slope("1/2", 0, 1)

    @pytest.mark.parametrize("k", range(-10, 11))
    def test_unit_cable_closed_form(self, k):
        assert cable_slope(-1, -1, k) == ExtRational(k * k + 1, k * k + k + 1)

    @pytest.mark.parametrize("x,expected", [
        (ExtRational(3, 2), TorusKnotExterior(3, 1)),
        (ExtRational(2, 3), TorusKnotExterior(2, 1)),
        (ExtRational(0), TwoSolidTori()),
        (ExtRational(1), ThickenedTorus()),
        (ExtRational(-1, 3), ThickenedTorus()),
    ])
    def test_classify_cable(self, x, expected):
        assert classify_cable(x) == expected

    def test_torus_knot_parameter(self, rng):
        for _ in range(300):
            num = int(rng.integers(-60, 61))
            den = int(rng.integers(1, 40))
            if math.gcd(num, den) != 1 or abs(num) < 2:
                continue
            kind = classify_cable(ExtRational(num, den))
            signed = den if num > 0 else -den
            assert (signed * kind.qprime) % kind.p == kind.p - 1


class TestRealizability:

    def test_closed_form(self):
        assert realizability_closed_form(LensFamily.F33, 1, -1) == (5, 3)
        assert realizability_closed_form("24", 1, 0) == (1, 1)

    def test_witness(self):
        assert realizable_as(lens_space(5, 3), LensFamily.F33) == (2, 0)

    def test_order_obstruction(self):
        assert realizable_as(lens_space(6, 1), LensFamily.F24) is None
        assert realizable_as(lens_space(9, 2), LensFamily.F33) is None

    def test_needs_single_lens_space(self):
        with pytest.raises(UnsupportedParameters):
            realizable_as(connected_sum(lens_space(2, 1), lens_space(3, 1)), "33")

    def test_unknown_family(self):
        with pytest.raises(UnsupportedParameters):
            LensFamily.of("42")

    @pytest.mark.parametrize("family", list(LensFamily))
    def test_every_family_member_is_found(self, family, rng):
        for _ in range(150):
            x, y = (int(v) for v in rng.integers(-6, 7, size=2))
            p, q = realizability_closed_form(family, x, y)
            if abs(p) < 2:
                continue
            target = lens_space(p, q)
            witness = realizable_as(target, family)
            assert witness is not None
            assert is_homeomorphic(lens_space(*realizability_closed_form(family, *witness)), target)
