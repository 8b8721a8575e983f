import itertools

import pytest
from hypothesis import given, strategies as st

from schurq.combinat import (
    check_composition,
    coarsenings,
    compositions_of,
    dominance_compare,
    dominates,
    format_composition,
    is_coarsening,
    is_strict,
    lex_compare,
    parse_composition,
    partitions,
    sort_to_partition,
    strict_partitions,
)

compositions = st.lists(st.integers(1, 4), min_size=1, max_size=7).map(tuple)


def test_compositions_small():
    assert set(compositions_of(3)) == {(3,), (2, 1), (1, 2), (1, 1, 1)}
    assert compositions_of(1) == [(1,)]
    four = compositions_of(4)
    assert len(four) == 8 and (2, 2) in four and (1, 2, 1) in four


@pytest.mark.parametrize("n", range(1, 11))
def test_compositions_count_and_distinct(n):
    comps = compositions_of(n)
    assert len(comps) == len(set(comps)) == 2 ** (n - 1)
    assert all(sum(c) == n and min(c) > 0 for c in comps)


def test_sort_to_partition():
    assert sort_to_partition((2, 1, 2, 1)) == (2, 2, 1, 1)
    assert sort_to_partition((1, 2, 2, 3, 1, 1, 1)) == (3, 2, 2, 1, 1, 1, 1)
    assert sort_to_partition((5,)) == (5,)


def test_coarsenings_examples():
    assert set(coarsenings((1, 2, 1))) == {(1, 2, 1), (3, 1), (1, 3), (4,)}
    assert set(coarsenings((1, 1))) == {(1, 1), (2,)}
    assert is_coarsening((5, 3, 1, 2), (1, 2, 2, 3, 1, 1, 1))
    assert not is_coarsening((1, 3), (2, 2))


def test_is_coarsening_matches_generator():
    for n in range(1, 9):
        comps = compositions_of(n)
        for alpha in comps:
            gen = set(coarsenings(alpha))
            assert len(gen) == 2 ** (len(alpha) - 1)
            assert {b for b in comps if is_coarsening(b, alpha)} == gen


def test_dominance():
    assert dominance_compare((4,), (1, 1, 1, 1)) == "greater"
    assert dominance_compare((1, 1, 1, 1), (4,)) == "less"
    assert dominance_compare((3, 1), (2, 2)) == "greater"
    assert dominance_compare((3, 2, 1), (3, 2, 1)) == "equal"
    assert dominance_compare((3, 1, 1, 1), (2, 2, 2)) == "incomparable"
    assert dominates((3, 1), (2, 2)) and not dominates((2, 2), (3, 1))
    with pytest.raises(ValueError):
        dominance_compare((3,), (2,))


def test_dominance_is_a_partial_order():
    parts = list(partitions(6))
    for a, b in itertools.product(parts, repeat=2):
        ab, ba = dominance_compare(a, b), dominance_compare(b, a)
        flipped = {"greater": "less", "less": "greater"}.get(ab, ab)
        assert ba == flipped
        assert (ab == "equal") == (a == b)


def test_lex_and_strict():
    assert lex_compare((3, 2), (3, 1, 1)) == 1
    assert lex_compare((3, 1, 1), (3, 2)) == -1
    assert lex_compare((2, 1), (2, 1)) == 0
    assert lex_compare((2, 1), (2, 1, 1)) == -1
    assert is_strict((4, 3, 1)) and not is_strict((3, 2, 2, 1))


def test_partition_enumerations():
    assert [len(list(partitions(n))) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert [len(list(strict_partitions(n))) for n in range(1, 11)] == [1, 1, 2, 2, 3, 4, 5, 6, 8, 10]
    for n in range(1, 9):
        ps = list(partitions(n))
        assert ps == sorted(ps, reverse=True)
        assert list(strict_partitions(n)) == [p for p in ps if is_strict(p)]


def test_parse_and_format():
    assert parse_composition("3,1,2") == (3, 1, 2)
    assert parse_composition(" 2 , 1 ") == (2, 1)
    assert format_composition((3, 1, 2)) == "3,1,2"
    for bad in ("3,,1", "a,1", "0,2", "-1,3", "2.5"):
        with pytest.raises(ValueError):
            parse_composition(bad)
    with pytest.raises(ValueError):
        check_composition((2, 0))


@given(compositions)
def test_format_parse_round_trip(alpha):
    assert parse_composition(format_composition(alpha)) == alpha


@given(compositions)
def test_coarsening_properties(alpha):
    cs = coarsenings(alpha)
    assert alpha in cs and (sum(alpha),) in cs
    assert all(sum(b) == sum(alpha) for b in cs)
    assert all(dominates(sort_to_partition(b), sort_to_partition(alpha)) for b in cs)
