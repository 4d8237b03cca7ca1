"""Partitions, words, tableaux and multitableaux.

Partitions are tuples of positive ints. Words are tuples of positive ints.
A tableau is a tuple of rows, each row a tuple. Multi-objects are tuples
indexed by node.
"""
from __future__ import annotations

from functools import cache
from itertools import product
from typing import Iterator, Sequence

Partition = tuple[int, ...]
Word = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def canon(parts: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)) or (p and p[-1] < 0):
        raise ValueError(f"not a partition: {parts}")
    return tuple(x for x in p if x > 0)


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def staircase(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


@cache
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


@cache
def compositions(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Weak compositions of n into k parts."""
    if k == 0:
        return ((),) if n == 0 else ()
    return tuple((a,) + rest for a in range(n, -1, -1) for rest in compositions(n - a, k - 1))


@cache
def multipartitions(n: int, r: int) -> tuple[tuple[Partition, ...], ...]:
    """All r-tuples of partitions of total size n, in the output order
    (size vector reverse-lex, then components)."""
    out = []
    for sizes in compositions(n, r):
        for combo in product(*(partitions(m) for m in sizes)):
            out.append(tuple(combo))
    return tuple(out)


def mp_sizes(lams: Sequence[Partition]) -> tuple[int, ...]:
    return tuple(sum(l) for l in lams)


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def part(lam: Sequence[int], i: int) -> int:
    return lam[i] if i < len(lam) else 0


def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    if not contains(outer, inner):
        return False
    return all(part(inner, i) >= part(outer, i + 1) for i in range(len(outer)))


def horizontal_strips(inner: Partition, k: int, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions kappa with kappa/inner a horizontal strip of size k."""
    rows = len(inner) + 1
    if max_len is not None:
        rows = min(rows, max_len)
        if len(inner) > max_len:
            return

    def rec(i: int, left: int, acc: list[int]):
        if i == rows:
            if left == 0:
                yield canon(acc)
            return
        cur = part(inner, i)
        cap = left if i == 0 else min(left, part(inner, i - 1) - cur)
        for add in range(cap, -1, -1):
            acc.append(cur + add)
            yield from rec(i + 1, left - add, acc)
            acc.pop()

    yield from rec(0, k, [])


def vertical_strips(inner: Partition, k: int) -> Iterator[Partition]:
    for c in horizontal_strips(conjugate(inner), k):
        yield conjugate(c)


def horizontal_strips_inside(outer: Partition, k: int) -> Iterator[Partition]:
    """Partitions kappa with outer/kappa a horizontal strip of size k."""
    n = len(outer)

    def rec(i: int, left: int, acc: list[int]):
        if i == n:
            if left == 0:
                yield canon(acc)
            return
        cur = outer[i]
        lo = part(outer, i + 1)
        for rem in range(0, min(left, cur - lo) + 1):
            acc.append(cur - rem)
            yield from rec(i + 1, left - rem, acc)
            acc.pop()

    yield from rec(0, k, [])


def vertical_strips_inside(outer: Partition, k: int) -> Iterator[Partition]:
    for c in horizontal_strips_inside(conjugate(outer), k):
        yield conjugate(c)


# ---- tableaux ----

def shape(T: Tableau) -> Partition:
    return tuple(len(row) for row in T if row)


def reading_word(T: Sequence[Sequence[int]]) -> Word:
    out: list[int] = []
    for row in reversed(T):
        out.extend(row)
    return tuple(out)


def word_of_multitableau(Ts: Sequence[Tableau]) -> Word:
    out: list[int] = []
    for T in Ts:
        out.extend(reading_word(T))
    return tuple(out)


def is_semistandard(T: Tableau) -> bool:
    for i, row in enumerate(T):
        if not row:
            return False
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
        if i and (len(row) > len(T[i - 1]) or any(T[i - 1][j] >= row[j] for j in range(len(row)))):
            return False
    return True


def content(u: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    if n is None:
        n = max(u, default=0)
    c = [0] * n
    for x in u:
        c[x - 1] += 1
    return tuple(c)


def yam_tableau(lam: Partition) -> Tableau:
    """The tableau of shape and weight lam (row k filled with k)."""
    return tuple((k + 1,) * p for k, p in enumerate(lam) if p)


def rectangle(width: int, height: int, start: int = 1) -> Tableau:
    if width == 0:
        return ()
    return tuple((start + k,) * width for k in range(height))


def chain_to_skew_rows(chain: Sequence[Partition]) -> tuple[tuple[int, ...], ...]:
    """Rows of the skew tableau whose letter-k cells are chain[k]/chain[k-1]."""
    outer = chain[-1]
    rows = []
    for i in range(len(outer)):
        row: list[int] = []
        for k in range(1, len(chain)):
            row.extend([k] * (part(chain[k], i) - part(chain[k - 1], i)))
        rows.append(tuple(row))
    return tuple(rows)


def skew_chains(outer: Partition, inner: Partition, weight: Sequence[int]) -> Iterator[tuple[Partition, ...]]:
    """Chains inner=c0 ⊂ ... ⊂ cm=outer of horizontal strips of the given sizes."""
    if any(w < 0 for w in weight) or not contains(outer, inner):
        return
    if sum(outer) - sum(inner) != sum(weight):
        return

    def rec(k: int, cur: Partition, acc: list[Partition]):
        if k == len(weight):
            if cur == outer:
                yield tuple(acc)
            return
        for nxt in horizontal_strips(cur, weight[k], len(outer)):
            if contains(outer, nxt):
                acc.append(nxt)
                yield from rec(k + 1, nxt, acc)
                acc.pop()

    yield from rec(0, canon(inner), [canon(inner)])


def chain_to_tableau(chain: Sequence[Partition]) -> Tableau:
    return tuple(r for r in chain_to_skew_rows(chain) if r)


def tableaux(lam: Partition, weight: Sequence[int]) -> Iterator[Tableau]:
    """Semistandard tableaux of shape lam with the given content."""
    for ch in skew_chains(lam, (), weight):
        yield chain_to_tableau(ch)


def tableaux_max(lam: Partition, n: int) -> Iterator[Tableau]:
    """Semistandard tableaux of shape lam with letters in [n]."""
    for w in compositions(sum(lam), n):
        yield from tableaux(lam, w)


def multitableaux(lams: Sequence[Partition], weight: Sequence[int]) -> Iterator[tuple[Tableau, ...]]:
    """Multitableaux of shape lams whose total content is weight."""
    n = len(weight)

    def rec(i: int, left: tuple[int, ...], acc: list[Tableau]):
        if i == len(lams):
            if not any(left):
                yield tuple(acc)
            return
        m = sum(lams[i])
        for w in compositions(m, n):
            if all(w[j] <= left[j] for j in range(n)):
                rest = tuple(left[j] - w[j] for j in range(n))
                for T in tableaux(lams[i], w):
                    acc.append(T)
                    yield from rec(i + 1, rest, acc)
                    acc.pop()

    yield from rec(0, tuple(weight), [])


# ---- insertion and Knuth ----

def row_insert(T: Tableau, x: int) -> Tableau:
    rows = [list(r) for r in T]
    for row in rows:
        for j, y in enumerate(row):
            if y > x:
                row[j], x = x, y
                break
        else:
            row.append(x)
            return tuple(tuple(r) for r in rows)
    rows.append([x])
    return tuple(tuple(r) for r in rows)


@cache
def p_tableau(u: Word) -> Tableau:
    """Schensted P-tableau by row insertion."""
    T: Tableau = ()
    for x in u:
        T = row_insert(T, x)
    return T


def knuth_equivalent(u: Sequence[int], v: Sequence[int]) -> bool:
    return p_tableau(tuple(u)) == p_tableau(tuple(v))


def is_tableau_word(u: Sequence[int]) -> bool:
    u = tuple(u)
    return reading_word(p_tableau(u)) == u


def restrict(u: Sequence[int], lo: int, hi: int) -> Word:
    """Subword of letters in the interval [lo, hi]."""
    return tuple(x for x in u if lo <= x <= hi)


def is_yamanouchi(u: Sequence[int], n: int | None = None) -> bool:
    from .crystal import epsilon

    if n is None:
        n = max(u, default=1)
    return all(epsilon(u, i) == 0 for i in range(1, n))


def is_almost_yamanouchi(u: Sequence[int], n: int | None = None) -> bool:
    from .crystal import epsilon

    if n is None:
        n = max(u, default=1)
    return all(epsilon(u, i) == 0 for i in range(2, n))
