from itertools import product

import pytest

from oracles import is_tableau_reading_word, knuth_closure, ssyt
from quiverks.core import (
    canon, compositions, conjugate, horizontal_strips, is_horizontal_strip, is_semistandard,
    is_tableau_word, is_yamanouchi, knuth_equivalent, multipartitions, p_tableau, partitions,
    reading_word, rectangle, shape, tableaux, yam_tableau,
)


def test_partition_counts():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(multipartitions(2, 2)) == 5
    assert len(compositions(3, 2)) == 4


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert all(conjugate(conjugate(l)) == l for n in range(7) for l in partitions(n))


def test_canon_strips_zeros():
    assert canon([2, 1, 0, 0]) == (2, 1)


def test_reading_word_example():
    assert reading_word(((1, 1, 2), (2, 3))) == (2, 3, 1, 1, 2)


def test_rectangle_and_yamanouchi():
    assert rectangle(2, 2) == ((1, 1), (2, 2))
    assert yam_tableau((2, 1)) == ((1, 1), (2,))
    assert is_yamanouchi(reading_word(yam_tableau((3, 2, 1))))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_p_tableau_is_the_tableau_in_the_knuth_class(n):
    for u in product(range(1, 4), repeat=n):
        cls = knuth_closure(u)
        tw = [v for v in cls if is_tableau_reading_word(v)]
        assert tw == [reading_word(p_tableau(u))]
        assert all(knuth_equivalent(u, v) for v in cls)


def test_tableau_word_predicate_matches_oracle():
    for n in range(6):
        for u in product(range(1, 4), repeat=n):
            assert is_tableau_word(u) == is_tableau_reading_word(u)


def test_tableaux_match_brute_force():
    for n in range(1, 6):
        for lam in partitions(n):
            for mu in partitions(n):
                got = sorted(tableaux(lam, mu))
                assert got == ssyt(lam, mu)
                assert all(is_semistandard(T) and shape(T) == lam for T in got)


def test_horizontal_strips():
    strips = list(horizontal_strips((2, 1), 2))
    assert all(is_horizontal_strip(s, (2, 1)) for s in strips)
    assert sorted(strips) == sorted([(4, 1), (3, 2), (3, 1, 1), (2, 2, 1)])
