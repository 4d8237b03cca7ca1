from quiverks.catabolism import (
    all_ones, borel_datum, cat, ccat, charge_any, conjecture_sum, dim_vectors, dominates_Q0,
    enumerate_ct, explore, is_cascade_catabolizable, is_cascade_catabolizable_alt, m_vector,
)
from quiverks.core import multitableaux
from quiverks.lr_charge import charge
from quiverks.symfunc import datum_from_triple, reduced_ks

T = (((1, 1, 2, 2, 3, 3), (2, 2, 4, 4), (4, 4)), ((1, 1, 1), (2, 3), (3,)))


def test_worked_example():
    assert m_vector(T, 1) == (2, 3)
    assert ccat((0, 5), T) == (((2, 2, 3, 4, 4, 4, 4), (3, 3)), ((2, 2, 2), (3,)))


def test_single_step():
    out = cat(0, 2, T)
    assert out[0] == ((2, 2, 4, 4), (4, 4))
    assert cat(0, 3, T) is None


def test_dominance_order():
    assert dominates_Q0((2, 1), (1, 2))
    assert not dominates_Q0((1, 2), (2, 1))
    assert dominates_Q0((1, 1, 1), (1, 1, 1))
    assert not dominates_Q0((1, 1), (1, 2))


def test_dim_vectors():
    assert dim_vectors(((2,), (1, 1))) == ((2, 1), (0, 1))


def test_remove_all_at_end_on_example():
    assert ccat((0, 5), T) == ccat((1, 4), T) == ccat((2, 3), T)
    assert ccat((3, 2), T) is None


def test_cascade_and_alternative_agree():
    for mus in (((1,), (1, 1)), ((2,), (1,)), ((1, 1), (1,))):
        d = dim_vectors(mus)
        for lams in (((2,), (1,)), ((1,), (1, 1)), ((1, 1), (1,)), ((), (2, 1))):
            for Ts in multitableaux(lams, tuple(map(sum, d))):
                assert is_cascade_catabolizable(Ts, mus) == is_cascade_catabolizable_alt(Ts, mus)


def test_charge_any_sorts_content():
    assert charge_any((2, 1), 2) == charge((2, 1), (1, 1), (1, 1))
    # content (1, 2) is sorted by the reflection s_1 first
    assert charge_any((2, 1, 2), 2) == charge((2, 1, 1), (2, 1), (1, 1))


def test_special_form_sum_is_reduced_ks():
    mu = (2, 1)
    mus = ((), mu)
    assert borel_datum(mus) == datum_from_triple(mu, (1, 1), 0, 2)
    for lams in (((), (3,)), ((), (2, 1)), ((1,), (2,)), ((2,), (1,))):
        assert conjecture_sum(lams, mus) == reduced_ks(borel_datum(mus), lams, 2)


def test_all_ones_and_n1():
    lams = ((2,), (1,))
    assert all_ones(lams) == (((1, 1),), ((1,),))
    assert list(enumerate_ct(lams, ((2,), (1,)))) == [all_ones(lams)]
    assert list(enumerate_ct(lams, ((1,), (2,)))) == [all_ones(lams)]
    assert list(enumerate_ct(((1,), (2,)), ((2,), (1,)))) == []
    assert list(enumerate_ct(((1, 1), (1,)), ((2,), (1,)))) == []


def test_explorer_rows():
    rows = list(explore(2, 2))
    assert rows and all(set(r) >= {"lams", "mus", "conjecture", "reduced", "agree"} for r in rows)
