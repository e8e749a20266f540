"""Subgroup classification: quadruple validation, enumeration, orders, elements."""

from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from valsemi import (ParameterError, enumerate_subgroups, generating_pair,
                     goursat_tuple, list_elements, subgroup_order, validate_params)
from valsemi.groups import GroupElement, _closure


def count_formula(m, n):
    return sum(gcd(d1, d2)
               for d1 in range(1, m + 1) if m % d1 == 0
               for d2 in range(1, n + 1) if n % d2 == 0)


class TestValidateParams:
    def test_valid_quadruple(self):
        p = validate_params(4, 6, 2, 3, 2, 1)
        assert (p.M, p.N) == (1, 1)

    def test_x_not_coprime(self):
        with pytest.raises(ParameterError, match="gcd\\(x, t\\)"):
            validate_params(4, 6, 2, 3, 2, 2)

    def test_valid_t1(self):
        p = validate_params(4, 6, 2, 3, 1, 1)
        assert (p.M, p.N) == (2, 2)

    @pytest.mark.parametrize("args,message", [
        ((4, 6, 3, 1, 1, 1), "i does not divide m"),
        ((4, 6, 1, 4, 1, 1), "j does not divide n"),
        ((4, 6, 2, 1, 4, 1), "t does not divide m/i"),
        ((4, 6, 1, 3, 4, 1), "t does not divide n/j"),
        ((4, 6, 1, 1, 2, 4), "x out of range"),
        ((4, 6, 0, 1, 1, 1), "must be positive"),
    ])
    def test_each_condition_reported_by_name(self, args, message):
        with pytest.raises(ParameterError, match=message):
            validate_params(*args)


class TestEnumerate:
    def test_trivial_group(self):
        found = enumerate_subgroups(1, 1)
        assert [(p.i, p.j, p.t, p.x) for p in found] == [(1, 1, 1, 1)]

    def test_klein_case(self):
        assert len(enumerate_subgroups(2, 2)) == 5

    def test_4_by_6(self):
        assert len(enumerate_subgroups(4, 6)) == 16

    def test_sorted_lexicographically(self):
        quads = [(p.i, p.j, p.t, p.x) for p in enumerate_subgroups(6, 4)]
        assert quads == sorted(quads)

    @given(st.integers(1, 8), st.integers(1, 8))
    @settings(max_examples=30, deadline=None)
    def test_count_matches_gcd_formula(self, m, n):
        assert len(enumerate_subgroups(m, n)) == count_formula(m, n)

    def test_distinct_quadruples_give_distinct_element_sets(self):
        for m, n in [(4, 4), (6, 4), (2, 8)]:
            seen = set()
            for p in enumerate_subgroups(m, n):
                elements = frozenset(((e.a * p.i) % m, (e.b * p.j) % n)
                                     for e in list_elements(p))
                assert elements not in seen
                seen.add(elements)


class TestOrderAndElements:
    def test_full_group(self):
        assert subgroup_order(validate_params(4, 6, 1, 1, 1, 1)) == 24

    def test_trivial_subgroup(self):
        assert subgroup_order(validate_params(4, 6, 4, 6, 1, 1)) == 1

    def test_diagonal_sign_subgroup(self, diag_sign_params):
        assert subgroup_order(diag_sign_params) == 2
        assert [(e.a, e.b) for e in list_elements(diag_sign_params)] == [(0, 0), (1, 1)]

    def test_element_list_of_embedded_diagonal(self):
        p = validate_params(4, 6, 2, 3, 2, 1)
        assert [(e.a, e.b) for e in list_elements(p)] == [(0, 0), (1, 1)]

    def test_order_equals_element_count_everywhere_small(self):
        for m in range(1, 7):
            for n in range(1, 7):
                for p in enumerate_subgroups(m, n):
                    elements = list_elements(p)
                    assert subgroup_order(p) == len(elements)
                    assert elements == sorted(elements, key=lambda e: (e.a, e.b))

    def test_closure_under_addition(self):
        for m, n in [(4, 6), (6, 6), (8, 2)]:
            for p in enumerate_subgroups(m, n):
                elements = set(list_elements(p))
                for e1 in elements:
                    for e2 in elements:
                        summed = GroupElement((e1.a + e2.a) % p.Mt, (e1.b + e2.b) % p.Nt)
                        assert summed in elements


class TestGeneratingPair:
    def test_diagonal_sign_pair(self, diag_sign_params):
        pair = generating_pair(diag_sign_params)
        assert [(e.a, e.b) for e in pair] == [(1, 1), (0, 0)]

    def test_trivial_subgroup_pair(self):
        pair = generating_pair(validate_params(3, 5, 3, 5, 1, 1))
        assert [(e.a, e.b) for e in pair] == [(0, 0), (0, 0)]

    def test_full_group_pair(self):
        pair = generating_pair(validate_params(4, 6, 1, 1, 1, 1))
        assert [(e.a, e.b) for e in pair] == [(1, 0), (0, 1)]

    def test_pair_generates_exactly_the_subgroup(self):
        for m in range(1, 7):
            for n in range(1, 7):
                for p in enumerate_subgroups(m, n):
                    assert _closure(p, generating_pair(p)) == set(list_elements(p))


class TestGoursatTuple:
    def test_diagonal_sign(self, diag_sign_params):
        g = goursat_tuple(diag_sign_params)
        assert (g.order_a_sub, g.order_a, g.order_b_sub, g.order_b, g.x) == (1, 2, 1, 2, 1)

    def test_trivial(self):
        g = goursat_tuple(validate_params(6, 10, 6, 10, 1, 1))
        assert (g.order_a_sub, g.order_a, g.order_b_sub, g.order_b, g.x) == (1, 1, 1, 1, 1)

    def test_full(self):
        g = goursat_tuple(validate_params(6, 10, 1, 1, 1, 1))
        assert (g.order_a_sub, g.order_a, g.order_b_sub, g.order_b, g.x) == (6, 6, 10, 10, 1)
