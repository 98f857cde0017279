import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zerosum import (
    BadOrder,
    EmptyGroup,
    RankMismatch,
    d_star,
    elem_add,
    elem_neg,
    elem_scale,
    element,
    make_group,
    parse_element_literal,
    parse_group_literal,
    seq_sum,
    sequence,
)
from zerosum.errors import ParseError

from helpers import element_order_multiset


class TestMakeGroup:
    def test_already_invariant(self):
        g = make_group([2, 2, 2, 2, 6])
        assert g.canonical == (2, 2, 2, 2, 6)
        assert g.order == 96

    def test_reorders_factors(self):
        assert make_group([6, 2]).canonical == (2, 6)

    def test_crt_merge(self):
        g = make_group([4, 6])
        assert g.canonical == (2, 12)
        # Independent check: same element-order multiset as the merge.
        assert element_order_multiset((4, 6)) == element_order_multiset((2, 12))

    def test_empty_rejected(self):
        with pytest.raises(EmptyGroup):
            make_group([])

    def test_small_order_rejected(self):
        with pytest.raises(BadOrder):
            make_group([3, 1])

    @given(st.lists(st.integers(2, 12), min_size=1, max_size=5))
    def test_canonical_is_permutation_invariant(self, orders):
        base = make_group(orders).canonical
        assert make_group(sorted(orders, reverse=True)).canonical == base
        assert make_group(sorted(orders)).canonical == base

    @given(st.lists(st.integers(2, 12), min_size=1, max_size=4))
    def test_canonical_divisibility_chain(self, orders):
        g = make_group(orders)
        assert math.prod(g.canonical) == g.order
        for a, b in zip(g.canonical, g.canonical[1:]):
            assert b % a == 0


class TestDStar:
    def test_cyclic(self):
        assert d_star(make_group([6])) == 6

    def test_rank_four_doubling(self):
        assert d_star(make_group([2, 2, 2, 2, 6])) == 10

    def test_rank_six(self):
        assert d_star(make_group([3, 3, 3, 3, 3, 3, 6])) == 18

    @given(
        st.lists(st.integers(2, 12), min_size=1, max_size=3),
        st.lists(st.integers(2, 12), min_size=1, max_size=2),
    )
    @settings(max_examples=60)
    def test_depends_only_on_isomorphism_class(self, left, right):
        concat = make_group(left + right)
        canonical = make_group(concat.canonical)
        assert d_star(concat) == d_star(canonical)


class TestElementOps:
    def test_add_mod_six(self):
        g = make_group([6])
        assert elem_add(g, element(g, [4]), element(g, [4])).residues == (2,)

    def test_involution(self):
        g = make_group([2, 2])
        a = element(g, [1, 1])
        assert elem_add(g, a, a) == g.zero()

    def test_seq_sum_generator_copies(self):
        g = make_group([3])
        assert seq_sum(sequence(g, [[1]] * 3)) == g.zero()

    def test_seq_sum_empty(self):
        g = make_group([5, 5])
        assert seq_sum(sequence(g, [])) == g.zero()

    def test_rank_mismatch(self):
        g = make_group([2, 2])
        with pytest.raises(RankMismatch):
            elem_add(g, element(g, [1, 1]), element(make_group([2]), [1]))

    @given(st.integers(0, 11), st.integers(0, 11), st.integers(0, 5))
    def test_commutative_and_order_kills(self, x, y, z):
        g = make_group([12, 6])
        a, b = element(g, [x, z]), element(g, [y, x % 6])
        assert elem_add(g, a, b) == elem_add(g, b, a)
        assert elem_scale(g, a, math.lcm(*g.orders)) == g.zero()
        assert elem_add(g, a, elem_neg(g, a)) == g.zero()


class TestLiterals:
    def test_group_roundtrip(self):
        g = parse_group_literal("2,2,2,2,6")
        assert g.literal() == "2,2,2,2,6"

    def test_group_garbage(self):
        with pytest.raises(ParseError):
            parse_group_literal("2,two")
        with pytest.raises(ParseError):
            parse_group_literal("2,1")

    def test_element_roundtrip(self):
        g = make_group([2, 2, 2, 2, 6])
        e = parse_element_literal(g, "1,0,0,0,3")
        assert e.literal() == "1,0,0,0,3"

    def test_element_out_of_range(self):
        g = make_group([2, 3])
        with pytest.raises(ParseError):
            parse_element_literal(g, "2,0")
        with pytest.raises(ParseError):
            parse_element_literal(g, "1")
