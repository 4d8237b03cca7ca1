"""Column insertion, the RSK correspondence on row-word tuples, the map
(ubar, T) -> (P, U) with its inverse, compatibility, and LR coefficients.

Row-word tuples are stored as (u_n, ..., u_1): the last entry is inserted
first. Recording tableaux are kept as shape chains.
"""
from __future__ import annotations

from functools import cache
from typing import Sequence

from .core import (
    Partition, Tableau, Word, canon, chain_to_skew_rows, is_horizontal_strip,
    knuth_equivalent, part, reading_word, shape, skew_chains,
    tableaux, yam_tableau,
)


def column_insert(T: Tableau, x: int) -> Tableau:
    """Insert x into the first column; x bumps the smallest entry >= x."""
    cols = _columns(T)
    j = 0
    while True:
        if j == len(cols):
            cols.append([x])
            break
        col = cols[j]
        for k, y in enumerate(col):
            if y >= x:
                col[k], x = x, y
                break
        else:
            col.append(x)
            break
        j += 1
    return _from_columns(cols)


def _columns(T: Tableau) -> list[list[int]]:
    if not T:
        return []
    return [[row[j] for row in T if len(row) > j] for j in range(len(T[0]))]


def _from_columns(cols: list[list[int]]) -> Tableau:
    if not cols:
        return ()
    return tuple(tuple(c[i] for c in cols if len(c) > i) for i in range(len(cols[0])))


def _reverse_column_bump(T: Tableau, row: int) -> tuple[Tableau, int]:
    """Undo a column insertion that ended at the last cell of the given row."""
    cols = _columns(T)
    j = len(T[row]) - 1
    z = cols[j].pop(row)
    if not cols[j]:
        cols.pop()
    for c in range(j - 1, -1, -1):
        col = cols[c]
        k = max(k for k, y in enumerate(col) if y <= z)
        col[k], z = z, col[k]
    return _from_columns(cols), z


def p_of_word(u: Sequence[int], T: Tableau = ()) -> Tableau:
    """P(u word(T)) by column inserting u from right to left into T."""
    for x in reversed(u):
        T = column_insert(T, x)
    return T


def column_insert_row(u: Word, T: Tableau) -> tuple[Tableau, tuple[Partition, Partition]]:
    P = p_of_word(u, T)
    return P, (shape(P), shape(T))


def column_insert_row_inverse(P: Tableau, lam: Partition) -> tuple[Word, Tableau]:
    lam = canon(lam)
    nu = shape(P)
    if not is_horizontal_strip(nu, lam):
        raise ValueError(f"{nu}/{lam} is not a horizontal strip")
    # the last letter inserted created the rightmost new cell
    cells = []
    for i in range(len(nu)):
        for j in range(part(lam, i), nu[i]):
            cells.append((j, i))
    cells.sort(reverse=True)
    out: list[int] = []
    for j, i in cells:
        P, x = _reverse_column_bump(P, i)
        out.append(x)
    return tuple(out), P


def psi(ubar: Sequence[Word], T: Tableau = ()) -> tuple[Tableau, tuple[Partition, ...]]:
    """(P(u_n...u_1 T), chain of shapes after each row word)."""
    chain = [shape(T)]
    P = T
    for u in reversed(ubar):
        P = p_of_word(u, P)
        chain.append(shape(P))
    return P, tuple(chain)


def psi_inverse(P: Tableau, chain: Sequence[Partition]) -> tuple[tuple[Word, ...], Tableau]:
    if shape(P) != canon(chain[-1]):
        raise ValueError("chain does not end at shape(P)")
    words: list[Word] = []
    for k in range(len(chain) - 1, 0, -1):
        u, P = column_insert_row_inverse(P, chain[k - 1])
        words.append(u)
    return tuple(words), P


def chain_of_tableau(Q: Tableau, n: int) -> tuple[Partition, ...]:
    return tuple(canon([sum(1 for x in row if x <= k) for row in Q]) for k in range(n + 1))


def tableau_of_chain(chain: Sequence[Partition]) -> Tableau:
    return tuple(r for r in chain_to_skew_rows(chain) if r)


def rsk(ubar: Sequence[Word]) -> tuple[Tableau, Tableau]:
    P, chain = psi(ubar)
    return P, tableau_of_chain(chain)


def rsk_inverse(P: Tableau, Q: Tableau, n: int) -> tuple[Word, ...]:
    words, T = psi_inverse(P, chain_of_tableau(Q, n))
    assert T == ()
    return words


def overlap(v: Sequence[int], u: Sequence[int]) -> int:
    """Largest c such that the last c letters of v sit strictly below the
    first c letters of u in a two-row tableau."""
    best = 0
    for c in range(1, min(len(u), len(v)) + 1):
        tail = v[len(v) - c:]
        if all(u[j] < tail[j] for j in range(c)):
            best = c
    return best


def is_compatible(Q: Tableau, outer: Partition, inner: Partition) -> bool:
    return knuth_equivalent(
        reading_word(yam_tableau(canon(outer))),
        reading_word(Q) + reading_word(yam_tableau(canon(inner))),
    )


def star_shape(parts: Sequence[Partition]) -> tuple[Partition, Partition]:
    """Outer and inner shapes of parts[-1] * ... * parts[0]: parts[0] sits
    furthest northeast. Returns a skew shape (outer, inner) with the inner
    rows kept at full length, zero rows included."""
    blocks = [canon(p) for p in parts if sum(p)]
    outer: list[int] = []
    inner: list[int] = []
    for b, lam in enumerate(blocks):
        off = sum(q[0] for q in blocks[b + 1:])
        outer.extend(off + x for x in lam)
        inner.extend(off for _ in lam)
    return tuple(outer), tuple(inner)


def d_compatible_count(lam: Partition, outer: Sequence[int], inner: Sequence[int]) -> int:
    weight = tuple(o - i for o, i in zip(outer, inner))
    return sum(1 for Q in tableaux(canon(lam), weight) if is_compatible(Q, canon(outer), canon(inner)))


@cache
def lr_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^lam_{mu,nu}: LR tableaux of shape lam/mu and content nu."""
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    from .crystal import epsilon
    count = 0
    for ch in skew_chains(lam, mu, nu):
        w = reading_word(chain_to_skew_rows(ch))
        if all(epsilon(w, i) == 0 for i in range(1, len(nu))):
            count += 1
    return count


@cache
def lr_multi(lam: Partition, parts: tuple[Partition, ...]) -> int:
    """Coefficient of s_lam in the product of s_p over parts."""
    parts = tuple(p for p in parts if p)
    if not parts:
        return 1 if not lam else 0
    if len(parts) == 1:
        return 1 if lam == parts[0] else 0
    last = parts[-1]
    total = 0
    from .core import partitions
    m = sum(lam) - sum(last)
    for mu in partitions(m):
        c = lr_coeff(lam, mu, last)
        if c:
            total += c * lr_multi(mu, parts[:-1])
    return total
