"""KS polynomials by the Morris-type recurrence, Morris data, the embedding of
LR multitableaux, and the sign-reversing involution on Morris data.

Chains of shapes stand in for recording tableaux: a chain c0 ⊂ c1 ⊂ ... has
the cells of c_k / c_{k-1} filled with the k-th letter of its alphabet.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .core import (
    Partition, Tableau, Word, canon, contains, is_semistandard,
    partitions, reading_word, shape, skew_chains,
)
from .crystal import dual_e, dual_s, pairing, w0_eta
from .lr_charge import RectTriple, enumerate_lr_multitableaux, is_lr_word, weight_arrows
from .poly import ArrowLaurent, IntegrityError
from .rsk import psi, psi_inverse, rsk

Perm = tuple[int, ...]
Chain = tuple[Partition, ...]


def inversions(w: Sequence[int]) -> int:
    return sum(1 for x in range(len(w)) for y in range(x + 1, len(w)) if w[x] > w[y])


def alpha_beta(w: Sequence[int], lam: Sequence[int], a: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split w^{-1}(lam + rho) - rho after a entries; w is one-line on 1..n."""
    lam = tuple(lam) + (0,) * (n - len(lam))
    if len(lam) > n:
        raise ValueError("partition longer than n")
    shifted = [lam[w[k] - 1] + (n - w[k]) for k in range(n)]
    x = tuple(shifted[k] - (n - 1 - k) for k in range(n))
    return x[:a], x[a:]


def _kostka(outer: Partition, inner: Partition, weight: tuple[int, ...]) -> int:
    return sum(1 for _ in skew_chains(outer, inner, weight))


@cache
def _kostka_sorted(outer: Partition, inner: Partition, weight: tuple[int, ...]) -> int:
    return _kostka(outer, inner, weight)


def kostka_number(outer: Sequence[int], inner: Sequence[int], sigma: Sequence[int]) -> int:
    """Semistandard fillings of outer/inner with content sigma."""
    if any(x < 0 for x in sigma):
        return 0
    outer, inner = canon(outer), canon(inner)
    if not contains(outer, inner):
        return 0
    # skew Kostka numbers are symmetric in the weight
    weight = tuple(sorted((x for x in sigma if x), reverse=True))
    return _kostka_sorted(outer, inner, weight)


@dataclass(frozen=True)
class Setting:
    """A (lams; mu, eta, i1) problem on the cyclic quiver with r nodes."""
    lams: tuple[Partition, ...]
    mu: tuple[int, ...]
    eta: tuple[int, ...]
    i1: int
    r: int

    def __post_init__(self):
        object.__setattr__(self, "lams", tuple(canon(l) for l in self.lams))
        object.__setattr__(self, "mu", tuple(self.mu))
        object.__setattr__(self, "eta", tuple(self.eta))
        RectTriple(self.mu, self.eta, self.i1)
        if len(self.lams) != self.r or not 0 <= self.i1 < self.r:
            raise ValueError("bad node data")
        if not self.mu:
            raise ValueError("empty rectangle data has no recurrence step")

    @property
    def n(self) -> int:
        return sum(self.eta)

    @property
    def a(self) -> int:
        return self.eta[0]

    @property
    def i(self) -> int:
        return self.i1

    @property
    def j(self) -> int:
        return (self.i1 + 1) % self.r

    @property
    def last(self) -> bool:
        return self.i1 == self.r - 1

    @property
    def nu(self) -> tuple[int, ...]:
        return (self.mu[0] if self.last else 0,) * self.a

    def tail(self) -> tuple[tuple[int, ...], tuple[int, ...], int]:
        if self.last:
            return self.mu[1:], self.eta[1:], 0
        return self.mu, self.eta, self.i1 + 1


def _arrow(r: int, i: int, k: int) -> ArrowLaurent:
    e = [0] * r
    e[i] = k
    return ArrowLaurent.monomial(e)


def _lr_weight(S, mu, eta, r) -> ArrowLaurent:
    if not mu:
        return ArrowLaurent.one(r)
    return weight_arrows(S, mu, eta)


def _terms(st: Setting) -> Iterator[tuple[Perm, int, tuple[int, ...], tuple[int, ...]]]:
    """(w, sign, alpha - nu, beta) with both weights nonnegative."""
    n, a, nu = st.n, st.a, st.nu
    lam = st.lams[st.i]
    for w in permutations(range(1, n + 1)):
        al, be = alpha_beta(w, lam, a, n)
        d = tuple(x - y for x, y in zip(al, nu))
        if any(x < 0 for x in d) or any(x < 0 for x in be):
            continue
        yield w, (-1) ** inversions(w), d, be


def _supersets(inner: Partition, k: int, max_len: int) -> Iterator[Partition]:
    for g in partitions(sum(inner) + k):
        if len(g) <= max_len and contains(g, inner):
            yield g


@cache
def ks_via_recurrence(lams: tuple[Partition, ...], mu: tuple[int, ...], eta: tuple[int, ...],
                      i1: int, r: int) -> ArrowLaurent:
    """KS polynomial (arrow variables, not reduced) by the signed sum over S_n."""
    lams = tuple(canon(l) for l in lams)
    if not mu:
        return ArrowLaurent.one(r) if not any(lams) else ArrowLaurent.zero(r)
    st = Setting(lams, mu, eta, i1, r)
    n = st.n
    if any(len(l) > n for l in lams) or sum(map(sum, lams)) != RectTriple(mu, eta).N:
        return ArrowLaurent.zero(r)
    tmu, teta, ti1 = st.tail()
    total = ArrowLaurent.zero(r)
    for w, sign, d, be in _terms(st):
        wt = _arrow(r, st.i, sum(d))
        acc = ArrowLaurent.zero(r)
        for g_i, g_j, mult in _gamma_pairs(st, d, be):
            gam = list(lams)
            gam[st.i], gam[st.j] = g_i, g_j
            acc = acc + ks_via_recurrence(tuple(gam), tmu, teta, ti1, r) * mult
        total = total + wt * acc * sign
    return total


def _gamma_pairs(st: Setting, d, be) -> Iterator[tuple[Partition, Partition, int]]:
    """New shapes at slots i and i+1 with their Kostka multiplicities."""
    n, a = st.n, st.a
    if st.r == 1:
        # slots i and i+1 coincide: fill beta first, then alpha - nu on top
        for g in partitions(sum(d) + sum(be)):
            k = kostka_number(g, (), be + d)
            if k:
                yield g, g, k
        return
    lam_j = st.lams[st.j]
    for g_i in partitions(sum(be)):
        kb = kostka_number(g_i, (), be) if len(g_i) <= n - a else 0
        if not kb:
            continue
        for g_j in _supersets(lam_j, sum(d), n):
            ka = kostka_number(g_j, lam_j, d)
            if ka:
                yield g_i, g_j, ka * kb


@cache
def ks_via_recurrence_coset(lams: tuple[Partition, ...], mu: tuple[int, ...], eta: tuple[int, ...],
                            i1: int, r: int) -> ArrowLaurent:
    """The same polynomial summed over minimal coset representatives with LR
    coefficients in place of Kostka numbers."""
    from .rsk import lr_coeff
    lams = tuple(canon(l) for l in lams)
    if not mu:
        return ArrowLaurent.one(r) if not any(lams) else ArrowLaurent.zero(r)
    st = Setting(lams, mu, eta, i1, r)
    n, a, nu = st.n, st.a, st.nu
    if any(len(l) > n for l in lams) or sum(map(sum, lams)) != RectTriple(mu, eta).N:
        return ArrowLaurent.zero(r)
    tmu, teta, ti1 = st.tail()
    lam = st.lams[st.i] + (0,) * (n - len(st.lams[st.i]))
    total = ArrowLaurent.zero(r)
    for chosen in combinations(range(1, n + 1), a):
        w = chosen + tuple(k for k in range(1, n + 1) if k not in chosen)
        al, be = alpha_beta(w, lam, a, n)
        d = tuple(x - y for x, y in zip(al, nu))
        if any(x < 0 for x in d) or any(x < 0 for x in be):
            continue
        d, be = canon(d), canon(be)
        acc = ArrowLaurent.zero(r)
        if r == 1:
            for g in partitions(sum(d) + sum(be)):
                c = lr_coeff(g, be, d)
                if c:
                    acc = acc + ks_via_recurrence_coset((g,), tmu, teta, ti1, r) * c
        else:
            lam_j = st.lams[st.j]
            for g_j in _supersets(lam_j, sum(d), n):
                c = lr_coeff(g_j, lam_j, d)
                if c:
                    gam = list(lams)
                    gam[st.i], gam[st.j] = be, g_j
                    acc = acc + ks_via_recurrence_coset(tuple(gam), tmu, teta, ti1, r) * c
        total = total + _arrow(r, st.i, sum(d)) * acc * (-1) ** inversions(w)
    return total


# ---- Morris data ----

@dataclass(frozen=True)
class SignedTerm:
    sign: int
    weight: ArrowLaurent


@dataclass(frozen=True)
class MorrisDatum:
    """w in one-line notation, the multitableau S (in the alphabet of the
    shortened data), and recording chains for slots i and i+1.

    U_i runs from the empty shape with letters a+1..n; U_next runs from
    the old shape at slot i+1 (or from the end of U_i when r = 1) with
    letters 1..a."""
    w: Perm
    S: tuple[Tableau, ...]
    U_i: Chain
    U_next: Chain


def _shift(T: Tableau, k: int) -> Tableau:
    return tuple(tuple(x + k for x in row) for row in T)


def fill(lam: Partition, word: Sequence[int]) -> Tableau:
    """The filling of lam whose reading word (bottom row first) is word."""
    rows = []
    pos = 0
    for ln in reversed(lam):
        rows.append(tuple(word[pos:pos + ln]))
        pos += ln
    return tuple(reversed(rows))


def _rotate_tableaux(Ts: Sequence[Tableau], eta) -> tuple[Tableau, ...]:
    word: Word = ()
    for T in Ts:
        word += reading_word(T)
    word = w0_eta(word, eta)
    out = []
    pos = 0
    for T in Ts:
        k = sum(map(len, T))
        U = fill(shape(T), word[pos:pos + k])
        if not is_semistandard(U):
            raise IntegrityError("rotation left a tableau shape")
        out.append(U)
        pos += k
    return tuple(out)


def _rotate_rows(rows: Sequence[Word], eta) -> tuple[Word, ...]:
    word: Word = ()
    for u in rows:
        word += tuple(u)
    word = w0_eta(word, eta)
    out = []
    pos = 0
    for u in rows:
        out.append(word[pos:pos + len(u)])
        pos += len(u)
    return tuple(out)


def _yam_chain(T: Tableau, steps: int) -> Chain:
    lam = shape(T)
    return tuple(canon(lam[:k]) for k in range(steps + 1))


def datum_sign(xi: MorrisDatum) -> int:
    return (-1) ** inversions(xi.w)


def datum_weight(st: Setting, xi: MorrisDatum) -> ArrowLaurent:
    al, _ = alpha_beta(xi.w, st.lams[st.i], st.a, st.n)
    k = sum(al) - sum(st.nu)
    tmu, teta, _ = st.tail()
    return _arrow(st.r, st.i, k) * _lr_weight(xi.S, tmu, teta, st.r)


def signed_term(st: Setting, xi: MorrisDatum) -> SignedTerm:
    return SignedTerm(datum_sign(xi), datum_weight(st, xi))


def enumerate_morris(lams: Sequence[Partition], mu, eta, i1: int, r: int) -> Iterator[MorrisDatum]:
    st = Setting(tuple(lams), mu, eta, i1, r)
    n, a = st.n, st.a
    if sum(map(sum, st.lams)) != RectTriple(st.mu, st.eta).N or any(len(l) > n for l in st.lams):
        return
    tmu, teta, ti1 = st.tail()
    for w, _, d, be in _terms(st):
        for g_i in partitions(sum(be)):
            if len(g_i) > n - a:
                continue
            for Ui in skew_chains(g_i, (), be):
                inner = g_i if r == 1 else st.lams[st.j]
                for g_j in _supersets(inner, sum(d), n):
                    for Uj in skew_chains(g_j, inner, d):
                        gam = list(st.lams)
                        gam[st.i] = g_i
                        gam[st.j] = g_j
                        for S in enumerate_lr_multitableaux(gam, tmu, teta, ti1):
                            yield MorrisDatum(w, S, Ui, Uj)


def is_morris_datum(st: Setting, xi: MorrisDatum) -> bool:
    n, a = st.n, st.a
    if sorted(xi.w) != list(range(1, n + 1)):
        return False
    al, be = alpha_beta(xi.w, st.lams[st.i], a, n)
    d = tuple(x - y for x, y in zip(al, st.nu))
    sizes_i = [sum(c) for c in xi.U_i]
    sizes_j = [sum(c) for c in xi.U_next]
    if len(xi.U_i) != n - a + 1 or len(xi.U_next) != a + 1:
        return False
    if tuple(y - x for x, y in zip(sizes_i, sizes_i[1:])) != be:
        return False
    if tuple(y - x for x, y in zip(sizes_j, sizes_j[1:])) != d:
        return False
    inner = xi.U_i[-1] if st.r == 1 else st.lams[st.j]
    if xi.U_i[0] != () or canon(xi.U_next[0]) != canon(inner):
        return False
    for c in (xi.U_i, xi.U_next):
        if list(skew_chains(c[-1], c[0], [sum(y) - sum(x) for x, y in zip(c, c[1:])])).count(tuple(c)) != 1:
            return False
    gam = list(st.lams)
    gam[st.i], gam[st.j] = xi.U_i[-1], xi.U_next[-1]
    if tuple(shape(T) for T in xi.S) != tuple(canon(g) for g in gam):
        return False
    tmu, teta, ti1 = st.tail()
    if not tmu:
        return not any(gam)
    return xi.S in set(enumerate_lr_multitableaux(gam, tmu, teta, ti1))


# ---- the embedding and the involution ----

def _rows(T: Tableau, a: int) -> tuple[Word, ...]:
    """(u_a, ..., u_1) from the first a rows of T, padded with empty rows."""
    rows = [tuple(T[k]) if k < len(T) else () for k in range(a)]
    return tuple(reversed(rows))


def iota(Ts: Sequence[Tableau], mu, eta, i1: int, r: int) -> MorrisDatum:
    Ts = tuple(tuple(tuple(row) for row in T) for T in Ts)
    st = Setting(tuple(shape(T) for T in Ts), mu, eta, i1, r)
    if not _is_lr_member(st, Ts):
        raise ValueError("not an LR multitableau for this data")
    n, a, i, j = st.n, st.a, st.i, st.j
    w = tuple(range(1, n + 1))
    S = list(Ts)
    if not st.last:
        top = _rows(Ts[i], a)
        rest = Ts[i][a:]
        S[i] = rest
        S[j], U_next = psi(top, Ts[j])
        return MorrisDatum(w, tuple(S), _yam_chain(rest, n - a), U_next)
    m1 = st.mu[0]
    top = _rows(Ts[i], a)
    for k, u in zip(range(a, 0, -1), top):
        if u[:m1] != (k,) * m1:
            raise IntegrityError("first rectangle missing from the last node")
    v = tuple(u[m1:] for u in top)
    rest = Ts[i][a:]
    L = list(Ts[:r - 1]) + [rest]
    L2 = _rotate_tableaux(L, st.eta)
    v2 = _rotate_rows(v, st.eta)
    S = list(L2) if r > 1 else [L2[0]]
    S[0], U_next = psi(v2, L2[0])
    S = tuple(_shift(T, -a) for T in S)
    return MorrisDatum(w, S, _yam_chain(rest, n - a), U_next)


def _is_lr_member(st: Setting, Ts) -> bool:
    if tuple(shape(T) for T in Ts) != st.lams or not all(is_semistandard(T) for T in Ts):
        return False
    from .core import word_of_multitableau
    if not is_lr_word(word_of_multitableau(Ts), st.mu, st.eta):
        return False
    return not any(x <= st.a for k in range(st.i1) for row in Ts[k] for x in row)


def _row_factorization(ubar: Sequence[Word]) -> bool:
    rows = list(reversed(ubar))
    lens = [len(u) for u in rows]
    if any(lens[k] < lens[k + 1] for k in range(len(lens) - 1)):
        return False
    T = tuple(u for u in rows if u)
    return is_semistandard(T)


@dataclass(frozen=True)
class _Unpacked:
    ubar: tuple[Word, ...]
    base: Tableau          # tableau under the slot-(i+1) insertion
    frozen: tuple[Tableau, ...]  # rotated tableaux kept fixed (last node case)


def _unpack(st: Setting, xi: MorrisDatum) -> _Unpacked:
    a, i, j, r = st.a, st.i, st.j, st.r
    if not st.last:
        low, e = psi_inverse(xi.S[i], xi.U_i)
        assert e == ()
        high, T = psi_inverse(xi.S[j], xi.U_next)
        return _Unpacked(low + high, T, ())
    S = tuple(_shift(T, a) for T in xi.S)
    v, W = psi_inverse(S[0], xi.U_next)
    L = (W,) + S[1:] if r > 1 else (W,)
    L2 = _rotate_tableaux(L, st.eta)
    v2 = _rotate_rows(v, st.eta)
    m1 = st.mu[0]
    high = tuple((k,) * m1 + x for k, x in zip(range(a, 0, -1), v2))
    low, e = psi_inverse(L2[-1], xi.U_i)
    assert e == ()
    return _Unpacked(low + high, (), L2)


def recording(st: Setting, xi: MorrisDatum) -> Tableau:
    return rsk(_unpack(st, xi).ubar)[1]


def has_violation(st: Setting, xi: MorrisDatum) -> bool:
    return not _row_factorization(_unpack(st, xi).ubar)


def violation_index(Q: Tableau) -> int | None:
    """p such that the rightmost p-unpaired letter p+1 of word(Q) is found
    first when scanning from the right."""
    w = reading_word(Q)
    unpaired: dict[int, set[int]] = {}
    for pos in range(len(w) - 1, -1, -1):
        x = w[pos]
        if x < 2:
            continue
        if x - 1 not in unpaired:
            unpaired[x - 1] = set(pairing(w, x - 1)[1])
        if pos in unpaired[x - 1]:
            return x - 1
    return None


def phi(st: Setting, xi: MorrisDatum) -> MorrisDatum:
    n, a, i, j = st.n, st.a, st.i, st.j
    up = _unpack(st, xi)
    if _row_factorization(up.ubar):
        if xi.w != tuple(range(1, n + 1)):
            raise IntegrityError("no violation with w != id")
        return xi
    p = violation_index(rsk(up.ubar)[1])
    if p is None:
        raise IntegrityError("violation with Yamanouchi recording tableau")
    e = dual_e(up.ubar, p)
    if e is None:
        raise IntegrityError("dual raising operator undefined")
    ub = dual_s(e, p)
    w = list(xi.w)
    w[p - 1], w[p] = w[p], w[p - 1]
    w = tuple(w)
    low, high = ub[:n - a], ub[n - a:]
    if not st.last:
        S = list(xi.S)
        S[i], U_i = psi(low, ())
        S[j], U_next = psi(high, up.base)
        return MorrisDatum(w, tuple(S), U_i, U_next)
    m1 = st.mu[0]
    v2 = []
    for k, u in zip(range(a, 0, -1), high):
        if u[:m1] != (k,) * m1:
            raise IntegrityError("rectangle prefix lost under the dual crystal move")
        v2.append(u[m1:])
    S_last, U_i = psi(low, ())
    L2 = list(up.frozen)
    L2[-1] = S_last
    L = _rotate_tableaux(L2, st.eta)
    v = _rotate_rows(tuple(v2), st.eta)
    S = list(L)
    S[0], U_next = psi(v, L[0])
    return MorrisDatum(w, tuple(_shift(T, -a) for T in S), U_i, U_next)


def iota_inverse(st: Setting, xi: MorrisDatum) -> tuple[Tableau, ...]:
    """The LR multitableau whose embedding is xi (xi must have no violation)."""
    up = _unpack(st, xi)
    if not _row_factorization(up.ubar):
        raise ValueError("datum has a violation")
    rows = tuple(u for u in reversed(up.ubar) if u)
    Ts = list(st.lams)
    if not st.last:
        Ts = list(xi.S)
        Ts[st.i] = rows
        Ts[st.j] = up.base
        return tuple(Ts)
    Ts = list(up.frozen[:-1]) if st.r > 1 else []
    Ts.append(rows)
    return tuple(Ts)


def morris_sum(lams, mu, eta, i1: int, r: int) -> ArrowLaurent:
    st = Setting(tuple(lams), mu, eta, i1, r)
    total = ArrowLaurent.zero(r)
    for xi in enumerate_morris(lams, mu, eta, i1, r):
        total = total + datum_weight(st, xi) * datum_sign(xi)
    return total
