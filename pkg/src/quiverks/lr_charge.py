"""LR words and multitableaux for rectangle data, rotation, and charge."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterator, Sequence

from .core import (
    Partition, Tableau, Word, canon, multitableaux, p_tableau, reading_word,
    rectangle, restrict, word_of_multitableau,
)
from .crystal import w0_eta


@dataclass(frozen=True)
class RectTriple:
    """Rectangle data: mu keeps its length (zero parts allowed), eta has
    positive entries, i1 is a node."""
    mu: tuple[int, ...]
    eta: tuple[int, ...]
    i1: int = 0

    def __post_init__(self):
        mu, eta = tuple(self.mu), tuple(self.eta)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "eta", eta)
        if len(mu) != len(eta):
            raise ValueError("mu and eta must have the same length")
        if any(x < 0 for x in mu) or any(mu[k] < mu[k + 1] for k in range(len(mu) - 1)):
            raise ValueError(f"mu must be weakly decreasing and nonnegative: {mu}")
        if any(h <= 0 for h in eta):
            raise ValueError(f"eta entries must be positive: {eta}")

    @property
    def n(self) -> int:
        return sum(self.eta)

    @property
    def N(self) -> int:
        return sum(m * h for m, h in zip(self.mu, self.eta))

    def content(self) -> tuple[int, ...]:
        out: list[int] = []
        for m, h in zip(self.mu, self.eta):
            out.extend([m] * h)
        return tuple(out)


@dataclass(frozen=True)
class LRContext:
    intervals: tuple[tuple[int, int], ...]
    rects: tuple[Tableau, ...]


@cache
def lr_context(mu: tuple[int, ...], eta: tuple[int, ...]) -> LRContext:
    ivs, rects = [], []
    lo = 1
    for m, h in zip(mu, eta):
        ivs.append((lo, lo + h - 1))
        rects.append(rectangle(m, h, lo))
        lo += h
    return LRContext(tuple(ivs), tuple(rects))


def is_lr_word(u: Sequence[int], mu: Sequence[int], eta: Sequence[int]) -> bool:
    ctx = lr_context(tuple(mu), tuple(eta))
    u = tuple(u)
    if any(x < 1 or x > sum(eta) for x in u):
        return False
    return all(
        p_tableau(restrict(u, lo, hi)) == Y
        for (lo, hi), Y in zip(ctx.intervals, ctx.rects)
    )


def rotate(u: Sequence[int], v: Sequence[int], eta: Sequence[int]) -> Word:
    """(w0 v)(w0 u), each factor acted on separately."""
    return w0_eta(v, eta) + w0_eta(u, eta)


def rotate_once(u: Sequence[int], mu: Sequence[int], eta: Sequence[int]) -> Word:
    if not is_lr_word(u, mu, eta):
        raise ValueError("not an LR word")
    u = tuple(u)
    if not u:
        return u
    return rotate(u[:1], u[1:], eta)


def _split_first_rectangle(u: Word, mu1: int, eta1: int) -> tuple[Word, Word]:
    """Return (S, v) with S Y_1 v Knuth equivalent to u.

    The letters 1..eta1 of P(u) fill its top-left eta1 x mu1 rectangle; the
    rest of those rows reads v, the rows below read S."""
    P = p_tableau(u)
    if len(P) < eta1:
        raise ValueError("first rectangle not found")
    tails = []
    for k in range(eta1):
        row = P[k]
        if row[:mu1] != (k + 1,) * mu1 or any(x <= eta1 for x in row[mu1:]):
            raise ValueError("first rectangle not found")
        tails.append(row[mu1:])
    S = reading_word(P[eta1:])
    v = reading_word(tails)
    return S, v


@cache
def _charge(u: Word, mu: tuple[int, ...], eta: tuple[int, ...]) -> int:
    if not mu:
        if u:
            raise ValueError("nonempty word for empty data")
        return 0
    m1, h1 = mu[0], eta[0]
    if m1 == 0:
        # zero rectangle: nothing to strip, just relabel
        S, v = u, ()
    else:
        S, v = _split_first_rectangle(u, m1, h1)
    rest = eta[1:]
    vv = tuple(x - h1 for x in v)
    SS = tuple(x - h1 for x in S)
    nxt = w0_eta(vv, rest) + w0_eta(SS, rest)
    return len(v) + _charge(nxt, mu[1:], rest)


def charge(u: Sequence[int], mu: Sequence[int], eta: Sequence[int]) -> int:
    u, mu, eta = tuple(u), tuple(mu), tuple(eta)
    if not is_lr_word(u, mu, eta):
        raise ValueError(f"not a ({mu},{eta})-LR word: {u}")
    return _charge(p_word(u), mu, eta)


def p_word(u: Word) -> Word:
    return reading_word(p_tableau(u))


def enumerate_lr_multitableaux(lams: Sequence[Partition], mu: Sequence[int], eta: Sequence[int],
                               i1: int = 0) -> Iterator[tuple[Tableau, ...]]:
    mu, eta = tuple(mu), tuple(eta)
    lams = tuple(canon(l) for l in lams)
    tri = RectTriple(mu, eta, i1)
    if sum(map(sum, lams)) != tri.N:
        return
    top = eta[0] if eta else 0
    for Ts in multitableaux(lams, tri.content()):
        if any(x <= top for i in range(i1) for row in Ts[i] for x in row):
            continue
        if is_lr_word(word_of_multitableau(Ts), mu, eta):
            yield Ts


def charge_multitableau(Ts: Sequence[Tableau], mu: Sequence[int], eta: Sequence[int]) -> int:
    return charge(word_of_multitableau(Ts), mu, eta)


def weight_exponent(sizes: Sequence[int], N: int, c: int) -> tuple[int, ...]:
    """Arrow exponent vector of t_{hat Q1}^{sizes - N e_{r-1}} times the
    cycle product to the power c. Arrow i joins node i to node i+1."""
    r = len(sizes)
    out = []
    acc = 0
    for i in range(r - 1):
        acc += sizes[i]
        out.append(acc + c)
    out.append(c)
    return tuple(out)


def weight_arrows(Ts: Sequence[Tableau], mu: Sequence[int], eta: Sequence[int]):
    from .poly import ArrowLaurent
    sizes = tuple(sum(len(row) for row in T) for T in Ts)
    N = sum(m * h for m, h in zip(mu, eta))
    c = charge_multitableau(Ts, mu, eta)
    return ArrowLaurent.monomial(weight_exponent(sizes, N, c))


def ks_via_tableaux(lams: Sequence[Partition], mu: Sequence[int], eta: Sequence[int], i1: int, r: int):
    """Sum of weight_arrows over the LR multitableaux of shape lams."""
    from .poly import ArrowLaurent
    out = ArrowLaurent.zero(r)
    for Ts in enumerate_lr_multitableaux(lams, mu, eta, i1):
        out = out + weight_arrows(Ts, mu, eta)
    return out
