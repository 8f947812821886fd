from collections import Counter
from fractions import Fraction
from math import factorial

import pytest

from oracles import brute_packed_words
from packedwords import (
    RationalSeries,
    count_irreducible,
    count_irreducible_compositions,
    count_packed,
    count_packed_pure,
    count_packed_total,
    count_packed_zero,
    egf_check,
    enumerate_irreducible,
    enumerate_packed,
    is_irreducible,
    parse_word,
    stirling2,
)


def W(text):
    return parse_word(text)


class TestStirling:
    def test_diagonal_and_edge(self):
        for n in range(9):
            assert stirling2(n, n) == 1
        assert stirling2(3, 0) == 0
        assert stirling2(0, 0) == 1

    def test_small_values(self):
        assert stirling2(4, 2) == 7
        assert stirling2(5, 3) == 25
        assert stirling2(9, 5) == 6951

    def test_above_diagonal_is_zero(self):
        assert stirling2(3, 5) == 0

    def test_recursion_holds(self):
        for n in range(1, 12):
            for k in range(1, n + 1):
                assert stirling2(n + 1, k) == stirling2(n, k - 1) + k * stirling2(n, k)

    def test_exceeds_machine_words(self):
        # S(21, k) values overflow 64 bits; stays exact
        assert stirling2(25, 5) == 2436684974110751


class TestCounts:
    def test_packed_examples(self):
        assert count_packed(4, 2) == 50
        assert count_packed(0, 0) == 1
        assert count_packed(8, 8) == 40320

    def test_totals(self):
        assert count_packed_total(0) == 1
        assert count_packed_total(5) == 1082
        assert count_packed_total(10) == 204495126

    def test_triangle_identity(self):
        for n in range(13):
            for k in range(13):
                d = count_packed(n, k)
                assert d == count_packed_pure(n, k) + count_packed_zero(n, k)
                assert d == stirling2(n + 1, k + 1) * factorial(k)

    def test_row_sums(self):
        for n in range(13):
            assert sum(count_packed(n, k) for k in range(n + 1)) == count_packed_total(n)


class TestIrreducibleCounts:
    def test_examples_both_paths(self):
        for n, expected in [(1, 2), (4, 66), (10, 145992338)]:
            assert count_irreducible(n) == expected
            assert count_irreducible_compositions(n) == expected

    def test_first_ten_values(self):
        expected = [2, 2, 10, 66, 538, 5170, 56906, 704226, 9671930, 145992338]
        assert [count_irreducible(n) for n in range(1, 11)] == expected

    def test_length_seven_by_direct_enumeration(self):
        # third route, independent of both counting formulas
        assert sum(1 for w in enumerate_packed(7) if is_irreducible(w)) == 56906

    def test_paths_agree(self):
        for n in range(1, 21):
            assert count_irreducible(n) == count_irreducible_compositions(n)

    def test_length_zero_rejected(self):
        with pytest.raises(ValueError):
            count_irreducible(0)
        with pytest.raises(ValueError):
            count_irreducible_compositions(0)


class TestEnumeration:
    def test_small_lengths(self):
        assert enumerate_packed(0) == [W("e")]
        assert enumerate_packed(1) == [W("0"), W("1")]
        assert [w.text() for w in enumerate_packed(2)] == ["0,0", "0,1", "1,0", "1,1", "1,2", "2,1"]

    def test_matches_brute_force(self):
        for n in range(6):
            assert set(enumerate_packed(n)) == brute_packed_words(n)

    def test_canonical_order_no_duplicates(self):
        for n in range(6):
            words = enumerate_packed(n)
            assert len(set(words)) == len(words)
            assert words == sorted(words)

    def test_counts_by_supremum(self):
        for n in range(6):
            words = enumerate_packed(n)
            assert len(words) == count_packed_total(n)
            by_sup = Counter(w.sup for w in words)
            for k in range(n + 1):
                assert by_sup.get(k, 0) == count_packed(n, k)

    def test_irreducible_enumeration(self):
        assert enumerate_irreducible(1) == [W("0"), W("1")]
        assert enumerate_irreducible(2) == [W("1,1"), W("2,1")]
        assert len(enumerate_irreducible(3)) == 10
        for n in range(1, 6):
            words = enumerate_irreducible(n)
            assert len(words) == count_irreducible(n)
            assert all(is_irreducible(w) for w in words)

    def test_length_zero_irreducible_rejected(self):
        with pytest.raises(ValueError):
            enumerate_irreducible(0)


class TestRationalSeries:
    def test_exponential_coefficients(self):
        e = RationalSeries.exponential(6)
        assert e.coefficient(0) == 1
        assert e.coefficient(5) == Fraction(1, 120)

    def test_product_truncates_to_smaller_order(self):
        a = RationalSeries([1, 1, 1])
        b = RationalSeries([1, 2])
        assert (a * b).order == 1
        assert (a * b).coefficient(1) == 3

    def test_reciprocal_round_trip(self):
        s = RationalSeries([2, -1, Fraction(1, 3), 5], order=8)
        assert s * s.reciprocal() == RationalSeries.constant(1, 8)

    def test_reciprocal_needs_constant_term(self):
        with pytest.raises(ZeroDivisionError):
            RationalSeries([0, 1]).reciprocal()

    def test_derivative(self):
        s = RationalSeries([5, 1, Fraction(1, 2), Fraction(1, 6)])
        assert s.derivative() == RationalSeries([1, 1, Fraction(1, 2)])

    def test_derivative_of_reciprocal_series(self):
        # d/dx (2 - e^x)^(-1) = e^x (2 - e^x)^(-2), exactly, termwise
        order = 12
        e = RationalSeries.exponential(order)
        g = (2 - e).reciprocal()
        lhs = g.derivative()
        rhs = e * g * g
        for m in range(order):
            assert lhs.coefficient(m) == rhs.coefficient(m)

    def test_coefficient_outside_order_rejected(self):
        with pytest.raises(ValueError):
            RationalSeries([1]).coefficient(1)


class TestEgfCheck:
    def test_all_match(self):
        rows = egf_check(10)
        assert [r[0] for r in rows] == list(range(11))
        assert all(ok for _, _, ok in rows)
        assert rows[0][1] == 1
        assert rows[5][1] == 1082

    def test_counts_are_twice_the_ordered_bell_numbers(self):
        order = 10
        g = (2 - RationalSeries.exponential(order)).reciprocal()
        for n in range(1, order + 1):
            fubini = g.coefficient(n) * factorial(n)
            assert fubini.denominator == 1
            assert count_packed_total(n) == 2 * fubini
