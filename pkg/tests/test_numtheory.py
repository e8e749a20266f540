"""Exact-arithmetic layer: group generators, primes in progressions, root identities."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from valsemi import (ParameterError, PrimeSearchCeilingError, RootContext,
                     TrivialGroupError, delta_exponent, format_rational,
                     group_membership, parse_rational, primes_in_ap,
                     rational_group_generator, roots_equal)

small_fractions = st.fractions(min_value=Fraction(-20), max_value=Fraction(20),
                               max_denominator=12)
positive_fractions = st.fractions(min_value=Fraction(1, 12), max_value=Fraction(20),
                                  max_denominator=12)


class TestRationalFormatting:
    def test_round_trip(self):
        for text in ["3", "-3", "3/2", "-7/5", "0"]:
            assert format_rational(parse_rational(text)) == text

    def test_denominator_omitted(self):
        assert format_rational(Fraction(6, 2)) == "3"

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            format_rational(0.5)


class TestGroupGenerator:
    def test_integers(self):
        assert rational_group_generator([1]) == 1

    def test_half_integers(self):
        assert rational_group_generator([1, Fraction(3, 2)]) == Fraction(1, 2)

    def test_common_denominator_15(self):
        values = [Fraction(2, 15), Fraction(4, 3), Fraction(18, 5)]
        assert rational_group_generator(values) == Fraction(2, 15)

    def test_zeros_skipped(self):
        assert rational_group_generator([0, Fraction(2)]) == 2

    def test_trivial_group_rejected(self):
        with pytest.raises(TrivialGroupError, match="trivial group has no generator"):
            rational_group_generator([])
        with pytest.raises(TrivialGroupError):
            rational_group_generator([0, 0])

    @given(st.lists(small_fractions, min_size=1, max_size=5))
    def test_generator_divides_every_input(self, values):
        if all(v == 0 for v in values):
            return
        g = rational_group_generator(values)
        assert g > 0
        for v in values:
            assert (Fraction(v) / g).denominator == 1

    @given(st.lists(positive_fractions, min_size=1, max_size=3))
    @settings(max_examples=50)
    def test_generator_is_minimal_positive_combination(self, values):
        g = rational_group_generator(values)
        combos = {Fraction(0)}
        for v in values:
            combos = {c + k * v for c in combos for k in range(-6, 7)}
        positive = [c for c in combos if c > 0]
        assert min(positive) == g


class TestGroupMembership:
    def test_integer_in_integers(self):
        assert group_membership(3, [1])

    def test_non_member(self):
        assert not group_membership(Fraction(7, 3), [1, Fraction(3, 2)])

    def test_zero_always_member(self):
        assert group_membership(0, [1, Fraction(3, 2)])

    def test_error_propagates(self):
        with pytest.raises(TrivialGroupError):
            group_membership(1, [0])


class TestPrimesInAp:
    def test_odd_primes_avoiding_3_and_5(self):
        assert primes_in_ap(1, 2, [3, 5], 3) == [7, 11, 13]

    def test_all_primes(self):
        assert primes_in_ap(1, 1, [], 2) == [2, 3]

    def test_residue_above_modulus(self):
        assert primes_in_ap(3, 2, [], 3) == [3, 5, 7]

    def test_bad_progression_rejected(self):
        with pytest.raises(ParameterError, match="at most one prime"):
            primes_in_ap(2, 4, [], 1)

    def test_ceiling_is_not_silent(self):
        with pytest.raises(PrimeSearchCeilingError):
            primes_in_ap(1, 2, [], 10, ceiling=20)

    @given(st.integers(1, 10), st.integers(1, 12), st.integers(1, 4))
    @settings(max_examples=40)
    def test_constraints_hold_and_lists_extend(self, residue, modulus, count):
        from math import gcd
        if gcd(residue, modulus) != 1:
            return
        coprime_to = [6]
        longer = primes_in_ap(residue, modulus, coprime_to, count + 1)
        shorter = primes_in_ap(residue, modulus, coprime_to, count)
        assert longer[:count] == shorter
        assert sorted(longer) == longer
        for p in longer:
            assert p % modulus == residue % modulus
            assert gcd(p, 6) == 1


class TestRootsEqual:
    def test_both_sides_trivial(self):
        assert roots_equal(3, 2, RootContext(2, 3))

    def test_beta_not_one(self):
        assert not roots_equal(1, 0, RootContext(2, 3))

    def test_div_by_24(self):
        assert roots_equal(3, 2, RootContext(4, 6))

    def test_identity_case(self):
        assert roots_equal(0, 0, RootContext(5, 7, 2, 3))

    @given(st.integers(-30, 30), st.integers(-30, 30), st.integers(0, 3), st.integers(0, 3))
    @settings(max_examples=60)
    def test_periodicity(self, p, q, kp, kq):
        ctx = RootContext(4, 6)
        assert roots_equal(p, q, ctx) == roots_equal(p + kp * ctx.n, q + kq * ctx.m, ctx)

    @given(st.integers(-20, 20), st.integers(-20, 20),
           st.integers(-20, 20), st.integers(-20, 20))
    @settings(max_examples=60)
    def test_multiplicativity(self, p1, q1, p2, q2):
        ctx = RootContext(6, 4, 5, 3)
        if roots_equal(p1, q1, ctx) and roots_equal(p2, q2, ctx):
            assert roots_equal(p1 + p2, q1 + q2, ctx)


class TestDeltaExponent:
    def test_empty_monomial_fixed(self):
        ctx = RootContext(5, 7)
        assert delta_exponent(0, 0, 3, 4, 1, 1, ctx) == 0

    def test_diagonal_sign_action_fixes_xy(self):
        ctx = RootContext(2, 2)
        assert delta_exponent(1, 1, 1, 1, 1, 1, ctx) == 0

    def test_x_alone_flips(self):
        ctx = RootContext(2, 2)
        assert delta_exponent(1, 0, 1, 1, 1, 1, ctx) == 2


class TestRootContextValidation:
    def test_w1_range(self):
        with pytest.raises(ParameterError, match="w1"):
            RootContext(2, 3, w1=5)

    def test_w1_coprime(self):
        with pytest.raises(ParameterError, match="gcd\\(w1, m\\)"):
            RootContext(4, 3, w1=2)

    def test_defaults_valid(self):
        ctx = RootContext(12, 30)
        assert (ctx.w1, ctx.w2) == (1, 1)
