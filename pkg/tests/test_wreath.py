from fractions import Fraction
from math import factorial

from quiverks.core import multipartitions, partitions
from quiverks.wreath import (
    class_size, colored_permutations, compose, cyclotomic, cycle_type_colored, frob_R,
    frobenius_sn, inverse, mn_character, reduce_zeta, regular_character, rmu_identity,
    sign_character, to_integer_poly, trace_closed_form, trace_S_less_r, trivial_character,
    verify_frob_ind, z_lambda,
)


def test_cyclotomic():
    assert cyclotomic(1) == (-1, 1)
    assert cyclotomic(2) == (1, 1)
    assert cyclotomic(3) == (1, 1, 1)
    assert cyclotomic(4) == (1, 0, 1)


def test_zeta_reduction():
    # 1 + zeta + zeta^2 = 0 for r = 3
    assert all(c == 0 for c in reduce_zeta({0: Fraction(1), 1: Fraction(1), 2: Fraction(1)}, 3))
    assert to_integer_poly({(2, 0): Fraction(1), (2, 1): Fraction(-1)}, 2) == {2: 2}
    assert to_integer_poly({(2, 0): Fraction(1), (2, 1): Fraction(1)}, 2) == {}


def test_group_basics():
    for r in (1, 2, 3):
        for n in (1, 2, 3):
            G = list(colored_permutations(n, r))
            assert len(G) == r ** n * factorial(n)
            assert sum(class_size(t, r) for t in multipartitions(n, r)) == len(G)
            e = ((0,) * n, tuple(range(1, n + 1)))
            for x in G[:12]:
                assert compose(x, inverse(x, r), r) == e
                y = G[-1]
                c = compose(compose(y, x, r), inverse(y, r), r)
                assert cycle_type_colored(c, r) == cycle_type_colored(x, r)


def test_character_table_orthogonality():
    for n in range(1, 6):
        for a in partitions(n):
            for b in partitions(n):
                s = sum(Fraction(mn_character(a, rho) * mn_character(b, rho), z_lambda(rho))
                        for rho in partitions(n))
                assert s == (1 if a == b else 0)


def test_frobenius_sn():
    assert frobenius_sn(trivial_character(3), 3) == {(3,): {0: 1}}
    assert frobenius_sn(sign_character(3), 3) == {(1, 1, 1): {0: 1}}
    reg = frobenius_sn(regular_character(3), 3)
    assert reg == {(3,): {0: 1}, (2, 1): {0: 2}, (1, 1, 1): {0: 1}}


def test_traces_agree():
    for r in (1, 2, 3):
        for n in (1, 2, 3):
            for x in colored_permutations(n, r):
                assert trace_S_less_r(x, r) == trace_closed_form(x, r)


def test_induction_small():
    ok, lhs, rhs = verify_frob_ind(trivial_character(2), 2, 2)
    assert ok and lhs == rhs


def test_garsia_procesi_characteristic():
    assert frob_R((1, 1)) == {(2,): {0: 1}, (1, 1): {1: 1}}
    assert frob_R((2,)) == {(2,): {0: 1}}


def test_rmu_literal_node_order_mismatch():
    out = rmu_identity((2,), 2)
    assert not out["equal"]
    assert out["equal_after_node_reversal"]
    assert out["pleth_check"]
    # degree 0 sits at node 0 on the induced side and at node 1 on the HL side
    assert out["lhs"][((1, 1), ())] == {0: 1}
    assert out["hl"][((), (1, 1))] == {0: 1}
    assert out["hl"][((1, 1), ())] == {2: 1}
