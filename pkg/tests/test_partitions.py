"""Partition combinatorics against independent counting oracles."""

from math import comb

import pytest

from schurforge.partitions import (
    Partition,
    centralizer_order,
    conjugacy_class_size,
    conjugate,
    dim_poly_eval,
    irrep_dimension,
    partitions_of,
)


def pentagonal_counts(limit):
    """p(n) by the pentagonal-number recurrence; the enumeration oracle."""
    counts = [1]
    for n in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n and g2 > n:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= n:
                total += sign * counts[n - g1]
            if g2 <= n:
                total += sign * counts[n - g2]
            k += 1
        counts.append(total)
    return counts


def test_zero_has_exactly_one_partition():
    assert partitions_of(0) == (Partition(()),)


def test_small_enumerations():
    assert [p.parts for p in partitions_of(2)] == [(2,), (1, 1)]
    assert [p.parts for p in partitions_of(4)] == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]


def test_count_of_five_is_seven():
    assert len(partitions_of(5)) == 7


def test_counts_match_pentagonal_recurrence():
    counts = pentagonal_counts(30)
    for n in range(31):
        assert len(partitions_of(n)) == counts[n]


def test_enumeration_is_reverse_lexicographic_and_duplicate_free():
    for n in range(9):
        parts = [p.parts for p in partitions_of(n)]
        assert len(set(parts)) == len(parts)
        assert parts == sorted(parts, reverse=True)


def test_conjugate_examples():
    assert conjugate(Partition((4,))) == Partition((1, 1, 1, 1))
    assert conjugate(Partition((3, 1))) == Partition((2, 1, 1))
    assert conjugate(Partition(())) == Partition(())


def test_conjugate_involution_and_size():
    for n in range(11):
        for pi in partitions_of(n):
            assert conjugate(pi).size == n
            assert conjugate(conjugate(pi)) == pi


def test_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_parse_and_str():
    assert Partition.parse("3,1,1") == Partition((3, 1, 1))
    assert Partition.parse("[]") == Partition(())
    assert str(Partition((3, 1, 1))) == "3,1,1"
    assert str(Partition(())) == "[]"


class TestDimPoly:
    def test_exterior_square(self):
        assert dim_poly_eval(Partition((1, 1)), 3) == 3

    def test_hook_shape_values(self):
        assert dim_poly_eval(Partition((2, 1)), 2) == 2
        assert dim_poly_eval(Partition((2, 1)), 1) == 0

    def test_row_and_column_shapes(self):
        for n in range(1, 7):
            for m in range(7):
                assert dim_poly_eval(Partition((n,)), m) == comb(m + n - 1, n)
                assert dim_poly_eval(Partition((1,) * n), m) == comb(m, n)

    def test_negative_argument_stays_integral(self):
        for n in range(5):
            for pi in partitions_of(n):
                for m in range(-4, 5):
                    dim_poly_eval(pi, m)  # must not raise

    def test_empty_partition(self):
        assert dim_poly_eval(Partition(()), 5) == 1


def test_centralizer_and_class_size():
    mu = Partition((2, 1))
    assert centralizer_order(mu) == 2
    assert conjugacy_class_size(mu) == 3


def test_irrep_dimension_hook_lengths():
    assert irrep_dimension(Partition((2, 1))) == 2
    assert irrep_dimension(Partition((3, 2))) == 5
    assert irrep_dimension(Partition((1, 1, 1))) == 1
