"""Acceptance criteria, one test each. Every test records its verdict for
the terminal summary and prints a single pass/fail line."""
from itertools import product

import pytest


from conftest import ACCEPTANCE
from oracles import (
    is_tableau_reading_word, kf_by_charge, kf_lusztig, knuth_closure, lr_lattice, ls_charge,
)
from quiverks import catabolism as cb
from quiverks import cli, verify
from quiverks import wreath as wr
from quiverks.core import p_tableau, partitions, reading_word
from quiverks.crystal import dual_sdot
from quiverks.lr_charge import charge
from quiverks.poly import ArrowLaurent, IntegrityError
from quiverks.rsk import lr_coeff
from quiverks.symfunc import datum_from_triple, reduced_ks


def record(k, label, results=(), extra=(), literal=()):
    """results: SuiteResults; extra: (ok, message) pairs from oracles;
    literal: pairs for a statement known not to hold as written. A failure
    there marks the criterion FAIL and the test xfail."""
    failures = []
    for res in results:
        failures += [f"[{res.name}] {m}" for m in res.failures]
    failures += [msg for ok, msg in extra if not ok]
    unmet = [msg for ok, msg in literal if not ok]
    ok = not failures and not unmet
    ACCEPTANCE[k] = (ok, label)
    checked = sum(r.checked for r in results) + len(extra) + len(literal)
    print(f"criterion {k}: {'PASS' if ok else 'FAIL'} {label} ({checked} checks)")
    for res in results:
        for note in res.notes:
            print(f"  note: {note}")
    assert not failures, "\n".join(failures[:20])
    if unmet:
        pytest.xfail(f"{len(unmet)} literal cases fail, e.g. {unmet[0]}")


def test_criterion_01_three_methods_agree():
    res = verify.theorem_main(max_n=5, rs=(1, 2, 3), max_s=2)
    record(1, "tableau = recurrence = operators, r<=3, s<=2, N<=5", [res])


def test_criterion_02_one_node_kostka_foulkes():
    extra = []
    for n in range(1, 6):
        for mu in partitions(n):
            D = datum_from_triple(mu, (1,) * len(mu), 0, 2)
            for lam in partitions(n):
                got = reduced_ks(D, ((), lam), 2)
                extra.append((got == kf_by_charge(lam, mu), f"charge oracle lam={lam} mu={mu}"))
                extra.append((got == kf_lusztig(lam, mu), f"Lusztig oracle lam={lam} mu={mu}"))
    record(2, "concentrated Borel data give Kostka-Foulkes polynomials, n<=5",
           [verify.shoji(max_n=5)], extra)


def test_criterion_03_plethysm():
    record(3, "plethystic substitution of one-node functions, N<=5, r<=3",
           [verify.pleth(max_n=5, rs=(1, 2, 3))])


def test_criterion_04_running_example():
    mu, eta, i1, r = verify.RUNNING
    D = datum_from_triple(mu, eta, i1, r)
    extra = [(D == ((1, 2, (2, 2)), (0, 2, (0, 0)), (1, 2, (1, 1))), f"datum {D}")]
    record(4, "r=2, i1=1, eta=(2,2), mu=(2,1) datum and its full table",
           [verify.running_example()], extra)


def test_criterion_05_morris_involution():
    record(5, "sign-reversing involution, fixed points, embedding weights, N<=5",
           [verify.morris(max_n=5, rs=(1, 2, 3), max_s=2)])


def test_criterion_06_rotation_and_charge():
    extra = []
    for mu, eta in verify.rect_data(6):
        words = verify.lr_words(mu, eta)
        wordset = set(words)
        for u in words[:50]:
            cls = knuth_closure(u)
            extra.append((cls == verify.knuth_class(u) and cls <= wordset, f"Knuth class of {u}"))
        if all(h == 1 for h in eta):
            for u in words:
                extra.append((charge(u, mu, eta) == ls_charge(u), f"LS oracle at {u}"))
    # 132 and 312 are Knuth equivalent; only the second factors with a row tail
    extra.append((charge((3, 1, 2), (1, 1), (1, 2)) == charge((1, 3, 2), (1, 1), (1, 2)) == 1,
                  "class charge of 132"))
    record(6, "rotation, Knuth invariance, recursion on factored representatives, N<=6",
           [verify.rotation_charge(max_n=6)], extra)


def test_criterion_07_appendix():
    extra = []
    for n in range(1, 6):
        for u in product((1, 2, 3), repeat=n):
            tw = [v for v in knuth_closure(u) if is_tableau_reading_word(v)]
            extra.append((tw == [reading_word(p_tableau(u))], f"P tableau oracle at {u}"))
    for m in range(1, 6):
        for lam in partitions(m):
            for k in range(m + 1):
                for mu in partitions(k):
                    if len(mu) > len(lam) or any(a > b for a, b in zip(mu, lam)):
                        continue
                    for nu in partitions(m - k):
                        extra.append((lr_coeff(lam, mu, nu) == lr_lattice(lam, mu, nu),
                                      f"LR oracle {lam} {mu} {nu}"))
    got = dual_sdot(((2, 2, 3, 4), (1, 1, 3, 3, 4)), 1)
    extra.append((got == ((2, 2, 3, 3, 4, 4), (1, 1, 3)), f"two-row slide example gives {got}"))
    record(7, "insertion, RSK, White, LR counts, overlaps, involution, dual crystal",
           [verify.appendix(max_len=5)], extra)


def test_criterion_08_catabolism():
    T = (((1, 1, 2, 2, 3, 3), (2, 2, 4, 4), (4, 4)), ((1, 1, 1), (2, 3), (3,)))
    want = (((2, 2, 3, 4, 4, 4, 4), (3, 3)), ((2, 2, 2), (3,)))
    extra = [(cb.ccat((0, 5), T) == want, "worked catabolism example")]
    record(8, "cascade catabolism lemmas r<=3 size<=5, tableau sum on special data",
           [verify.catabolism(max_size=5, rs=(1, 2, 3))], extra)


def test_criterion_09_wreath():
    # The identity for R_mu is checked as written. It matches only once
    # node i is read as node r-1-i; that reading is asserted separately so
    # a regression there still fails hard.
    extra, literal = [], []
    for m in range(1, 5):
        for mu in partitions(m):
            out = wr.rmu_identity(mu, 2)
            extra.append((out["pleth_check"], f"plethysm side mu={mu}"))
            extra.append((out["equal_after_node_reversal"], f"R_mu identity after node reversal mu={mu}"))
            literal.append((out["equal"], f"R_mu identity as written mu={mu}"))
    record(9, "graded induction n<=3 r<=3, r=1 collapse, R_mu identity |mu|<=4 r=2",
           [verify.wreath(max_n=3, rs=(1, 2, 3), rmu_size=0)], extra, literal)


def test_criterion_10_positivity_and_integrity(monkeypatch, capsys):
    res = verify.positivity(max_n=5, rs=(1, 2, 3), max_s=2)
    with monkeypatch.context() as m:
        def broken(self, prefactor):
            raise IntegrityError("forced")
        m.setattr(ArrowLaurent, "reduce", broken)
        code = cli.main(["verify", "positivity", "--max-n", "2", "--max-r", "1"])
        capsys.readouterr()
    extra = [(code == 3, f"integrity violation exits with {code}")]
    record(10, "nonnegative reduced polynomials, monomial prefactors, integrity exit code",
           [res], extra)
