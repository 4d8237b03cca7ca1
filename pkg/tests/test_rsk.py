from itertools import product

from oracles import lr_lattice
from quiverks.core import knuth_equivalent, p_tableau, partitions, reading_word, shape, tableaux_max
from quiverks.rsk import (
    column_insert_row, column_insert_row_inverse, d_compatible_count, lr_coeff, lr_multi,
    overlap, p_of_word, psi, psi_inverse, rsk, rsk_inverse, star_shape,
)

ROWS = [(), (1,), (2,), (3,), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]


def test_column_insertion_agrees_with_row_insertion():
    for n in range(6):
        for u in product(range(1, 4), repeat=n):
            assert p_of_word(u) == p_tableau(u)


def test_column_insert_row_round_trip():
    for m in range(4):
        for lam in partitions(m):
            for T in tableaux_max(lam, 3):
                for u in ROWS:
                    P, (nu, lam2) = column_insert_row(u, T)
                    assert knuth_equivalent(u + reading_word(T), reading_word(P))
                    assert column_insert_row_inverse(P, lam) == (u, T)


def test_rsk_bijection_and_weights():
    seen = set()
    for ubar in product(ROWS, repeat=3):
        P, Q = rsk(ubar)
        assert shape(P) == shape(Q)
        assert rsk_inverse(P, Q, 3) == ubar
        seen.add((P, Q))
    assert len(seen) == len(ROWS) ** 3


def test_psi_with_a_seed_tableau():
    T = ((1, 2), (3,))
    ubar = ((2, 3), (1,))
    P, chain = psi(ubar, T)
    assert psi_inverse(P, chain) == (ubar, T)


def test_overlap_by_definition():
    for v in ROWS + [(1, 2, 3), (2, 2, 3)]:
        for u in ROWS + [(1, 1, 2), (1, 2, 2)]:
            best = max(c for c in range(min(len(u), len(v)) + 1)
                       if all(x < y for x, y in zip(u[:c], v[len(v) - c:])))
            assert overlap(v, u) == best
    assert overlap((2, 2, 3, 4), (1, 1, 3, 3, 4)) == 3


def test_lr_coefficients_match_lattice_words():
    for m in range(1, 6):
        for lam in partitions(m):
            for k in range(m + 1):
                for mu in partitions(k):
                    if len(mu) > len(lam) or any(x > y for x, y in zip(mu, lam)):
                        continue
                    for nu in partitions(m - k):
                        assert lr_coeff(lam, mu, nu) == lr_lattice(lam, mu, nu)


def test_compatibility_counts_give_lr_coefficients():
    for m in range(1, 5):
        for lam in partitions(m):
            for mu in partitions(m - 1):
                padded = mu + (0,) * (len(lam) - len(mu))
                if len(mu) <= len(lam):
                    assert d_compatible_count((1,), lam, padded) == lr_coeff(lam, mu, (1,))


def test_star_shape_product():
    outer, inner = star_shape(((2, 1), (1,)))
    assert (outer, inner) == ((3, 2, 1), (1, 1, 0))
    assert lr_multi((2, 1), ((1,), (1, 1))) == 1
    assert lr_multi((3,), ((1,), (1, 1))) == 0


def test_rsk_two_row_example():
    P, Q = rsk(((2, 2, 3, 4), (1, 1, 3, 3, 4)))
    assert P == p_tableau((2, 2, 3, 4, 1, 1, 3, 3, 4)) == ((1, 1, 3, 3, 3, 4), (2, 2, 4))
    assert [sum(row.count(k) for row in Q) for k in (1, 2)] == [5, 4]
