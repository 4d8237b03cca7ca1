from itertools import permutations

import pytest

from oracles import knuth_closure, ls_charge
from quiverks.core import partitions
from quiverks.lr_charge import (
    RectTriple, charge, enumerate_lr_multitableaux, is_lr_word, ks_via_tableaux, rotate,
    rotate_once, weight_exponent,
)
from quiverks.rsk import lr_multi
from quiverks.verify import lr_words, rect_data


def test_rect_triple_validation():
    t = RectTriple((2, 1), (2, 2), 1)
    assert (t.n, t.N, t.content()) == (4, 6, (2, 2, 1, 1))
    with pytest.raises(ValueError):
        RectTriple((1, 2), (1, 1))
    with pytest.raises(ValueError):
        RectTriple((1,), (0,))


def test_rotation_example():
    mu, eta = (2, 1), (2, 2)
    assert is_lr_word((2, 4, 2, 1, 3, 1), mu, eta)
    assert rotate((2,), (4, 2, 1, 3, 1), eta) == (4, 2, 1, 3, 2, 1)
    assert rotate_once((2, 4, 2, 1, 3, 1), mu, eta) == (4, 2, 1, 3, 2, 1)
    assert is_lr_word((4, 2, 1, 3, 2, 1), mu, eta)


def test_charge_small_values():
    assert charge((2, 1), (1, 1), (1, 1)) == 0
    assert charge((1, 2), (1, 1), (1, 1)) == 1
    assert charge((), (), ()) == 0
    assert charge((4, 2, 1, 3, 2, 1), (2, 1), (2, 2)) == 0


def test_charge_is_ls_charge_for_borel_data():
    for n in range(1, 6):
        for mu in partitions(n):
            letters = [k + 1 for k, m in enumerate(mu) for _ in range(m)]
            for u in set(permutations(letters)):
                assert charge(u, mu, (1,) * len(mu)) == ls_charge(u)


def test_charge_constant_on_knuth_closures():
    for mu, eta in rect_data(5):
        words = set(lr_words(mu, eta))
        done = set()
        for u in words:
            if u in done:
                continue
            cls = knuth_closure(u)
            assert cls <= words
            assert len({charge(v, mu, eta) for v in cls}) == 1
            done |= cls


def test_lr_tableau_counts_are_lr_coefficients():
    for mu, eta in rect_data(5, 2):
        rects = tuple((m,) * h for m, h in zip(mu, eta))
        N = sum(m * h for m, h in zip(mu, eta))
        for lam in partitions(N):
            got = sum(1 for _ in enumerate_lr_multitableaux((lam,), mu, eta, 0))
            assert got == lr_multi(lam, rects)


def test_recursion_fails_for_a_non_row_tail():
    # 132 and 312 are Knuth equivalent LR words for mu=(1,1), eta=(1,2).
    # Factoring 312 as 3.1.2 gives 1 + charge(21) = 1; factoring 132 as
    # (empty).1.32 would force at least |32| = 2.
    mu, eta = (1, 1), (1, 2)
    assert (1, 3, 2) in knuth_closure((3, 1, 2))
    assert charge((3, 1, 2), mu, eta) == charge((1, 3, 2), mu, eta) == 1
    assert charge((2, 1), (1,), (2,)) == 0


def test_weight_exponent():
    assert weight_exponent((1, 2), 3, 0) == (1, 0)
    assert weight_exponent((0, 3), 3, 2) == (2, 2)
    assert weight_exponent((3,), 3, 1) == (1,)


def test_tableau_formula_on_one_node():
    # Kostka-Foulkes column for mu = (1,1,1)
    got = {lam: ks_via_tableaux((lam,), (1, 1, 1), (1, 1, 1), 0, 1) for lam in partitions(3)}
    assert got[(3,)].terms == {(3,): 1}
    assert got[(2, 1)].terms == {(1,): 1, (2,): 1}
    assert got[(1, 1, 1)].terms == {(0,): 1}
