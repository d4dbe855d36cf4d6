from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from sl2ext.engine import LeafStatus, cohomology_dim, expand_trace
from sl2ext.errors import CapExceeded
from sl2ext.strings import (
    BString,
    count_c_strings,
    doubling_family,
    enumerate_b_strings,
    enumerate_c_strings,
    fibonacci,
    growth_bounds,
    is_c_string,
    partitions_of_unity,
)


def brute_partitions(m):
    """Multisets of m values 2^-j (j < m) summing to 1, by direct search."""
    parts = [Fraction(1, 2**j) for j in range(m)]
    return sum(1 for combo in combinations_with_replacement(parts, m) if sum(combo) == 1)


def test_b_strings_4_4():
    found = sorted(b.entries for b in enumerate_b_strings(4, 4))
    assert found == [(0, 2, 1, 0), (1, 1, 1, 0)]
    assert sorted(b.a_string for b in enumerate_b_strings(4, 4)) == [(0, 4), (2, 1, 1)]


def test_b_strings_1_1():
    (only,) = enumerate_b_strings(1, 1)
    assert only.entries == (1,)
    assert only.a_string == (1,)


def test_longest_b_string_without_leading_zeros():
    assert (1, 1, 1, 1, 1, 0) in {b.entries for b in enumerate_b_strings(6, 6)}
    assert all(b.entries[0] == 0 for b in enumerate_b_strings(6, 7))


def test_b_strings_match_brute_force():
    from itertools import product

    for m in range(1, 6):
        for n in range(1, 6):
            brute = set()
            for cand in product(range(m + 1), repeat=n):
                try:
                    BString(cand, m)
                except ValueError:
                    continue
                brute.add(cand)
            assert {b.entries for b in enumerate_b_strings(m, n)} == brute


def test_b_strings_recover_nontrivial_a_strings():
    for m in range(1, 9):
        for n in range(1, 9):
            recovered = [b.a_string for b in enumerate_b_strings(m, n)]
            assert len(set(recovered)) == len(recovered)
            nontrivial = {t.a_string for t in expand_trace(m, 2**n) if t.status is LeafStatus.NONTRIVIAL}
            assert set(recovered) == nontrivial


def test_bstring_validation():
    with pytest.raises(ValueError):
        BString((1, 1), 3)


def test_b_string_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_b_strings(12, 12, cap=10))


@pytest.mark.parametrize("k, count", [(1, 1), (3, 2), (4, 3), (8, 28)])
def test_count_c_strings(k, count):
    assert count_c_strings(k) == count


def test_count_c_strings_matches_enumeration():
    for k in range(1, 14):
        items = list(enumerate_c_strings(k))
        assert all(is_c_string(c) for c in items)
        assert len(set(items)) == len(items) == count_c_strings(k)
    assert sorted(enumerate_c_strings(3)) == [(1, 1, 1), (1, 2, 0)]


@pytest.mark.parametrize("m, count", [(1, 1), (4, 2), (5, 3)])
def test_partitions_of_unity(m, count):
    assert partitions_of_unity(m) == count


def test_partitions_match_brute_force():
    for m in range(1, 10):
        assert partitions_of_unity(m) == brute_partitions(m)


def test_identification_chain_beyond_tables():
    for m in range(2, 45):
        assert partitions_of_unity(m) == count_c_strings(m - 1)
    assert partitions_of_unity(40) == cohomology_dim(40, 2**40, 2)


def test_doubling_family():
    assert doubling_family(0) == {(1,)}
    assert doubling_family(1) == {(1, 2, 0), (1, 1, 1)}
    fam = doubling_family(2)
    assert fam == {(1, 2, 2, 0, 0), (1, 1, 1, 2, 0), (1, 2, 1, 1, 0), (1, 1, 1, 1, 1)}


def test_doubling_family_inside_all_c_strings():
    for t in range(0, 6):
        assert doubling_family(t) <= set(enumerate_c_strings(2 * t + 1))


def test_fibonacci():
    assert [fibonacci(i) for i in range(1, 9)] == [1, 1, 2, 3, 5, 8, 13, 21]


def test_growth_bounds():
    report = growth_bounds(30)
    assert report.ok
    assert report.counts[8] == 28 and fibonacci(7) == 13 and 28 <= 2**7
    assert report.counts[4] == 3 and fibonacci(3) == 2
    # c-strings of length m - 1 count H^m(L(2^m))
    assert report.counts[29] == 5855833 and report.counts[30] == 10506175
    assert report.ratios[29] == pytest.approx(10506175 / 5855833)
    assert 1.79 <= report.ratios[30] <= 1.80
    with pytest.raises(ValueError):
        growth_bounds(3)
