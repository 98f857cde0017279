import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zerosum import (
    BadParams,
    BudgetExceeded,
    SearchLimits,
    basis_witness,
    davenport_exact,
    disc_exact,
    d_star,
    is_non_dispersive,
    is_zero_sum_free,
    length_spectrum,
    make_certificate,
    make_group,
    sequence,
    verify_certificate,
)
from zerosum.certificates import CLAIM_NON_DISPERSIVE, CLAIM_ZERO_SUM_FREE

from helpers import brute_spectrum

# The seven-term rank-4 example: four basis vectors and three weight-3
# combinations chosen so every nonempty zero-sum subsequence has length 4.
C2_4 = make_group([2, 2, 2, 2])
SEVEN_TERMS = sequence(
    C2_4,
    [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 1, 0, 1],
        [1, 1, 1, 0],
        [1, 0, 1, 1],
    ],
)


@st.composite
def small_sequences(draw):
    orders = draw(
        st.lists(st.integers(2, 6), min_size=1, max_size=3).filter(
            lambda o: math.prod(o) <= 36
        )
    )
    g = make_group(orders)
    nterms = draw(st.integers(0, 8))
    terms = [
        [draw(st.integers(0, n - 1)) for n in orders] for _ in range(nterms)
    ]
    return sequence(g, terms)


class TestLengthSpectrum:
    def test_generator_power(self):
        g = make_group([3])
        assert length_spectrum(sequence(g, [[1]] * 4)).lengths == (3,)

    def test_empty_sequence(self):
        g = make_group([5])
        assert length_spectrum(sequence(g, [])).lengths == ()

    def test_with_zero_term(self):
        g = make_group([2])
        s = sequence(g, [[1], [1], [0]])
        assert length_spectrum(s).lengths == (1, 2, 3)
        assert brute_spectrum(s) == {1, 2, 3}

    def test_budget(self):
        g = make_group([6, 6])
        s = sequence(g, [[1, 1]] * 5)
        with pytest.raises(BudgetExceeded):
            length_spectrum(s, SearchLimits(max_cells=100))

    @given(small_sequences())
    @settings(max_examples=120, deadline=None)
    def test_matches_complete_enumeration(self, s):
        assert set(length_spectrum(s).lengths) == brute_spectrum(s)

    @given(small_sequences(), st.integers(0, 1_000_000))
    @settings(max_examples=60, deadline=None)
    def test_appending_never_loses_lengths(self, s, seed):
        rng = random.Random(seed)
        extra = [rng.randrange(n) for n in s.group.orders]
        bigger = sequence(s.group, [t.residues for t in s.terms] + [extra])
        assert set(length_spectrum(s).lengths) <= set(length_spectrum(bigger).lengths)


class TestPredicates:
    def test_seven_term_unique_length(self):
        assert is_non_dispersive(SEVEN_TERMS) == 4
        assert brute_spectrum(SEVEN_TERMS) == {4}

    def test_zero_sum_free_powers(self):
        g = make_group([7])
        assert is_zero_sum_free(sequence(g, [[1]] * 6))

    def test_two_lengths_is_not_non_dispersive(self):
        g = make_group([2])
        s = sequence(g, [[1]] * 4)
        assert length_spectrum(s).lengths == (2, 4)
        assert is_non_dispersive(s) is None

    def test_zero_sum_free_reported_distinctly(self):
        g = make_group([5])
        s = sequence(g, [[1]] * 3)
        assert is_zero_sum_free(s)
        assert is_non_dispersive(s) is None


class TestDavenportExact:
    @pytest.mark.parametrize(
        "orders,expected",
        [
            ([2, 2, 2], 4),
            ([6], 6),
            ([3, 3], 5),
            ([2, 4], 5),
            ([9], 9),
        ],
    )
    def test_known_values(self, orders, expected):
        g = make_group(orders)
        result = davenport_exact(g)
        assert result.value == expected
        assert result.value == d_star(g)

    def test_witness_reverifies(self):
        g = make_group([3, 6])
        result = davenport_exact(g)
        assert len(result.witness) == result.value - 1
        cert = make_certificate(result.witness, CLAIM_ZERO_SUM_FREE, "manual")
        assert verify_certificate(cert).passed

    def test_budget_carries_partial_bound(self):
        g = make_group([3, 3, 3])
        with pytest.raises(BudgetExceeded) as info:
            davenport_exact(g, SearchLimits(max_nodes=10))
        # The basis seed alone already proves d_star.
        assert info.value.lower_bound >= d_star(g)
        assert is_zero_sum_free(info.value.witness)

    def test_bad_seed_rejected(self):
        g = make_group([6])
        not_free = sequence(g, [[1], [5]])
        with pytest.raises(BadParams):
            davenport_exact(g, seeds=(not_free,))

    def test_group_order_budget(self):
        g = make_group([7, 7, 7])
        with pytest.raises(BudgetExceeded):
            davenport_exact(g, SearchLimits(max_group_order=256))


class TestDiscExact:
    def test_c2(self):
        result = disc_exact(make_group([2]))
        assert result.value == 4
        assert len(length_spectrum(result.witness)) <= 1

    def test_c3(self):
        assert disc_exact(make_group([3])).value == 6

    def test_c2_squared_regression(self):
        # Resolved by exhaustive search: the longest sequence with at most
        # one zero-sum length over C2+C2 has length 4, e.g. (a,a,a,b).
        assert disc_exact(make_group([2, 2])).value == 5

    def test_at_least_davenport(self):
        for orders in ([2], [3], [2, 2], [4], [2, 4]):
            g = make_group(orders)
            assert disc_exact(g).value >= davenport_exact(g).value

    def test_witness_spectrum_size(self):
        result = disc_exact(make_group([2, 2]))
        assert len(result.witness) == 4
        assert len(length_spectrum(result.witness)) <= 1


class TestBasisWitness:
    def test_always_zero_sum_free(self):
        for orders in ([2], [4, 6], [2, 3, 5], [6, 2]):
            g = make_group(orders)
            w = basis_witness(g)
            assert is_zero_sum_free(w)
            assert len(w) == sum(n - 1 for n in orders)


class TestVerifyCertificate:
    def test_zero_sum_free_pass(self):
        g = make_group([7])
        cert = make_certificate(sequence(g, [[1]] * 6), CLAIM_ZERO_SUM_FREE, "manual")
        report = verify_certificate(cert)
        assert report.passed
        assert report.spectrum.lengths == ()

    def test_non_dispersive_pass(self):
        cert = make_certificate(SEVEN_TERMS, CLAIM_NON_DISPERSIVE, "manual", 4)
        assert verify_certificate(cert).passed

    def test_false_claim_fails_with_spectrum(self):
        g = make_group([6])
        cert = make_certificate(sequence(g, [[1], [5]]), CLAIM_ZERO_SUM_FREE, "manual")
        report = verify_certificate(cert)
        assert not report.passed
        assert report.spectrum.lengths == (2,)
