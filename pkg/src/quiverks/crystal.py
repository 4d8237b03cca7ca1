"""Type A crystal operators on words, reflections, and the dual crystal on
row-word tuples."""
from __future__ import annotations

from functools import cache
from typing import Sequence

from .core import Word, reading_word
from . import rsk as _rsk


def pairing(u: Sequence[int], i: int) -> tuple[list[int], list[int]]:
    """Positions of the unpaired i's and unpaired (i+1)'s.

    An i+1 opens a bracket and a later i closes it.
    """
    opened: list[int] = []
    lone_i: list[int] = []
    for pos, x in enumerate(u):
        if x == i + 1:
            opened.append(pos)
        elif x == i:
            if opened:
                opened.pop()
            else:
                lone_i.append(pos)
    return lone_i, opened


def epsilon(u: Sequence[int], i: int) -> int:
    return len(pairing(u, i)[1])


def phi(u: Sequence[int], i: int) -> int:
    return len(pairing(u, i)[0])


def paired_count(u: Sequence[int], i: int) -> int:
    lone_i, lone_j = pairing(u, i)
    return sum(1 for x in u if x == i) - len(lone_i)


def _rewrite(u: Sequence[int], i: int, new_phi: int) -> Word:
    lone_i, lone_j = pairing(u, i)
    pos = lone_i + lone_j
    w = list(u)
    for k, p in enumerate(pos):
        w[p] = i if k < new_phi else i + 1
    return tuple(w)


def e(u: Sequence[int], i: int) -> Word | None:
    lone_i, lone_j = pairing(u, i)
    if not lone_j:
        return None
    return _rewrite(u, i, len(lone_i) + 1)


def f(u: Sequence[int], i: int) -> Word | None:
    lone_i, lone_j = pairing(u, i)
    if not lone_i:
        return None
    return _rewrite(u, i, len(lone_i) - 1)


def s(u: Sequence[int], i: int) -> Word:
    lone_i, lone_j = pairing(u, i)
    return _rewrite(u, i, len(lone_j))


def sdot(u: Sequence[int], i: int) -> Word:
    v = e(u, i)
    if v is None:
        raise ValueError("sdot needs epsilon > 0")
    return s(v, i)


@cache
def longest_word(m: int, alt: bool = False) -> tuple[int, ...]:
    """A reduced word for the longest element of S_m, as a product read left
    to right: s1 (s2 s1) (s3 s2 s1) ..., or s_{m-1} (s_{m-2} s_{m-1}) ... when
    alt is set."""
    out: list[int] = []
    for k in range(1, m):
        seg = list(range(k, 0, -1))
        if alt:
            seg = [m - j for j in seg]
        out.extend(seg)
    return tuple(out)


@cache
def _block_word(eta: tuple[int, ...], alt: bool) -> tuple[int, ...]:
    out: list[int] = []
    off = 0
    for m in eta:
        out.extend(off + j for j in longest_word(m, alt))
        off += m
    return tuple(out)


def w0_eta(u: Sequence[int], eta: Sequence[int], alt: bool = False) -> Word:
    """Act by the longest element of the Young subgroup of eta through
    crystal reflections. The rightmost factor acts first."""
    w = tuple(u)
    for i in reversed(_block_word(tuple(eta), alt)):
        w = s(w, i)
    return w


# ---- dual crystal on row-word tuples ----
# A tuple ubar is stored as (u_n, ..., u_1), so u_k sits at index n - k.

def _q_word_op(ubar: Sequence[Word], op) -> tuple[Word, ...] | None:
    P, Q = _rsk.rsk(ubar)
    w = op(reading_word(Q))
    if w is None:
        return None
    return _rsk.rsk_inverse(P, _refill(Q, w), len(ubar))


def _refill(T, w: Word):
    rows = []
    pos = 0
    for row in reversed(T):
        rows.append(tuple(w[pos:pos + len(row)]))
        pos += len(row)
    return tuple(reversed(rows))


def dual_epsilon(ubar: Sequence[Word], i: int) -> int:
    return epsilon(reading_word(_rsk.rsk(ubar)[1]), i)


def dual_phi(ubar: Sequence[Word], i: int) -> int:
    return phi(reading_word(_rsk.rsk(ubar)[1]), i)


def dual_e_rsk(ubar: Sequence[Word], i: int) -> tuple[Word, ...] | None:
    return _q_word_op(ubar, lambda w: e(w, i))


def dual_f_rsk(ubar: Sequence[Word], i: int) -> tuple[Word, ...] | None:
    return _q_word_op(ubar, lambda w: f(w, i))


def dual_s_rsk(ubar: Sequence[Word], i: int) -> tuple[Word, ...]:
    return _q_word_op(ubar, lambda w: s(w, i))


def dual_sdot_rsk(ubar: Sequence[Word], i: int) -> tuple[Word, ...] | None:
    return _q_word_op(ubar, lambda w: sdot(w, i) if epsilon(w, i) else None)


def jeu_two_rows(v: Sequence[int], u: Sequence[int], len_u: int) -> tuple[Word, Word]:
    """Re-split the two-row skew tableau with top row u and bottom row v so
    that the top row has length len_u, by jeu de taquin slides."""
    if not 0 <= len_u <= len(u) + len(v):
        raise ValueError("bad row length")
    v, u = tuple(v), tuple(u)
    while len(u) < len_u:
        v, u = _slide_up(v, u)
    while len(u) > len_u:
        v, u = _slide_down(v, u)
    return v, u


def _slide_up(v: Word, u: Word) -> tuple[Word, Word]:
    # with maximal overlap, a hole opened just left of the top row has a
    # bottom cell under it and must end up sliding down
    start = len(v) - _rsk.overlap(v, u)
    if start == 0:
        raise ValueError("no box to move up")
    top: list = [None] * start + list(u)
    bot: list = list(v)
    j = start - 1
    while True:
        right = top[j + 1] if j + 1 < len(top) else None
        below = bot[j] if j < len(bot) else None
        if below is None:
            raise AssertionError("slide left the top row")
        if right is not None and right < below:
            top[j], top[j + 1] = right, None
            j += 1
        else:
            top[j] = below
            bot.pop(j)
            break
    return tuple(bot), tuple(x for x in top if x is not None)


def _slide_down(v: Word, u: Word) -> tuple[Word, Word]:
    # a hole opened after the bottom row slides left/up
    start = len(v) - _rsk.overlap(v, u)
    top: list = [None] * start + list(u)
    bot: list = list(v) + [None]
    j = len(v)
    while True:
        left = bot[j - 1] if j >= 1 else None
        above = top[j] if j < len(top) else None
        if left is None and above is None:
            raise ValueError("no box to move down")
        if above is None or (left is not None and left > above):
            bot[j], bot[j - 1] = left, None
            j -= 1
        else:
            bot[j], top[j] = above, None
            break
    return tuple(x for x in bot if x is not None), tuple(x for x in top if x is not None)


def _pair_slots(ubar: Sequence[Word], i: int) -> tuple[int, int]:
    n = len(ubar)
    return n - (i + 1), n - i


def _replace_pair(ubar, i, top_len):
    hi, lo = _pair_slots(ubar, i)
    v, u = jeu_two_rows(ubar[hi], ubar[lo], top_len)
    out = list(ubar)
    out[hi], out[lo] = v, u
    return tuple(out)


def dual_epsilon_jeu(ubar: Sequence[Word], i: int) -> int:
    hi, lo = _pair_slots(ubar, i)
    return len(ubar[hi]) - _rsk.overlap(ubar[hi], ubar[lo])


def dual_e(ubar: Sequence[Word], i: int) -> tuple[Word, ...] | None:
    """e_i on the recording tableau, through a two-row slide."""
    if dual_epsilon_jeu(ubar, i) == 0:
        return None
    hi, lo = _pair_slots(ubar, i)
    return _replace_pair(ubar, i, len(ubar[lo]) + 1)


def dual_s(ubar: Sequence[Word], i: int) -> tuple[Word, ...]:
    hi, lo = _pair_slots(ubar, i)
    return _replace_pair(ubar, i, len(ubar[hi]))


def dual_sdot(ubar: Sequence[Word], i: int) -> tuple[Word, ...] | None:
    if dual_epsilon_jeu(ubar, i) == 0:
        return None
    hi, lo = _pair_slots(ubar, i)
    return _replace_pair(ubar, i, len(ubar[hi]) - 1)
