"""Row catabolism on multitableaux, cascading catabolism, and the
catabolizable tableau sum."""
from __future__ import annotations

from typing import Iterator, Sequence

from .core import (
    Partition, Tableau, canon, content, multipartitions, multitableaux,
    p_tableau, reading_word, word_of_multitableau,
)
from .crystal import s as reflect
from .lr_charge import charge
from .poly import IntegrityError
from .symfunc import Datum, reduced_ks

MultiTableau = tuple[Tableau, ...]
DimVector = tuple[int, ...]


def m_vector(Ts: Sequence[Tableau], k: int) -> DimVector:
    return tuple(sum(row.count(k) for row in T) for T in Ts)


def dominates_Q0(d: Sequence[int], f: Sequence[int]) -> bool:
    """d - f is a nonnegative combination of e_i - e_{i+1}, 0 <= i < r-1."""
    diff = [x - y for x, y in zip(d, f)]
    if sum(diff):
        return False
    acc = 0
    for x in diff[:-1]:
        acc += x
        if acc < 0:
            return False
    return True


def cat(i: int, p: int, Ts: Sequence[Tableau], letter: int = 1) -> MultiTableau | None:
    """Strip the first row of node i, drop p copies of letter and insert the
    rest into node i+1. None when the first row has fewer than p copies."""
    Ts = tuple(tuple(tuple(row) for row in T) for T in Ts)
    r = len(Ts)
    T = Ts[i]
    row = T[0] if T else ()
    if row.count(letter) < p:
        return None
    if row[:p] != (letter,) * p:
        raise ValueError(f"letter {letter} is not the smallest in node {i}")
    v = row[p:]
    out = list(Ts)
    if r == 1:
        out[0] = p_tableau(v + reading_word(T[1:]))
        return tuple(out)
    j = (i + 1) % r
    out[i] = T[1:]
    out[j] = p_tableau(v + reading_word(Ts[j]))
    return tuple(out)


def ccat(d: Sequence[int], Ts: Sequence[Tableau], letter: int = 1) -> MultiTableau | None:
    out: MultiTableau | None = tuple(Ts)
    for i, p in enumerate(d):
        out = cat(i, p, out, letter)
        if out is None:
            return None
    return out


def dim_vectors(mus: Sequence[Sequence[int]]) -> tuple[DimVector, ...]:
    """mu_1., ..., mu_n. read off a multipartition."""
    n = max((len(m) for m in mus), default=0)
    return tuple(tuple(m[k] if k < len(m) else 0 for m in mus) for k in range(n))


def is_cascade_catabolizable(Ts: Sequence[Tableau], mus: Sequence[Sequence[int]]) -> bool:
    ds = dim_vectors(mus)
    word = word_of_multitableau(Ts)
    if any(x > len(ds) or x < 1 for x in word):
        return False
    if content(word, len(ds)) != tuple(map(sum, ds)):
        return False
    cur: MultiTableau | None = tuple(Ts)
    for k, d in enumerate(ds, 1):
        cur = ccat(d, cur, k)
        if cur is None:
            return False
    if any(cur):
        raise IntegrityError("cascade left letters behind")
    return True


def is_cascade_catabolizable_alt(Ts: Sequence[Tableau], mus: Sequence[Sequence[int]]) -> bool:
    """The same test through dominance of letter censuses, removing each
    letter at the last node."""
    ds = dim_vectors(mus)
    word = word_of_multitableau(Ts)
    if any(x > len(ds) or x < 1 for x in word):
        return False
    if content(word, len(ds)) != tuple(map(sum, ds)):
        return False
    cur = tuple(Ts)
    r = len(cur)
    for k, d in enumerate(ds, 1):
        if not dominates_Q0(m_vector(cur, k), d):
            return False
        cur = ccat((0,) * (r - 1) + (sum(d),), cur, k)
        assert cur is not None
    return True


def enumerate_ct(lams: Sequence[Partition], mus: Sequence[Sequence[int]]) -> Iterator[MultiTableau]:
    ds = dim_vectors(mus)
    weight = tuple(map(sum, ds))
    lams = tuple(canon(l) for l in lams)
    if sum(map(sum, lams)) != sum(weight):
        return
    for Ts in multitableaux(lams, weight):
        if is_cascade_catabolizable(Ts, mus):
            yield Ts


def charge_any(u: Sequence[int], n: int) -> int:
    """Charge of a word with letters in [n], sorting its content into a
    partition by crystal reflections first."""
    u = tuple(u)
    c = list(content(u, n))
    changed = True
    while changed:
        changed = False
        for k in range(n - 1):
            if c[k] < c[k + 1]:
                u = reflect(u, k + 1)
                c[k], c[k + 1] = c[k + 1], c[k]
                changed = True
    return charge(u, tuple(c), (1,) * n)


def conjecture_sum(lams: Sequence[Partition], mus: Sequence[Sequence[int]]) -> tuple[int, ...]:
    n = len(dim_vectors(mus))
    out: dict[int, int] = {}
    for Ts in enumerate_ct(lams, mus):
        c = charge_any(word_of_multitableau(Ts), n)
        out[c] = out.get(c, 0) + 1
    if not out:
        return ()
    return tuple(out.get(k, 0) for k in range(max(out) + 1))


def borel_datum(mus: Sequence[Sequence[int]]) -> Datum:
    """Even periodic Borel datum: node sequence 0..r-1 repeated, one-row
    weights read from mus."""
    r = len(mus)
    out = []
    for d in dim_vectors(mus):
        for i in range(r):
            out.append((i, 1, (d[i],)))
    return tuple(out)


def explore(r: int, max_size: int) -> Iterator[dict]:
    """Compare the catabolizable sum with the reduced KS polynomial on all
    (lams, mus) with |mus| = |lams| <= max_size. Rows only; nothing asserted."""
    for size in range(1, max_size + 1):
        for mus in multipartitions(size, r):
            D = borel_datum(mus)
            special = all(not m for m in mus[:-1])
            for lams in multipartitions(size, r):
                conj = conjecture_sum(lams, mus)
                try:
                    red = reduced_ks(D, lams, r)
                    err = None
                except IntegrityError as exc:
                    red, err = None, str(exc)
                yield {
                    "lams": lams, "mus": mus, "special": special,
                    "conjecture": conj, "reduced": red, "error": err,
                    "agree": conj == red,
                }


def single_row_multipartitions(x: int, r: int) -> Iterator[tuple[Partition, ...]]:
    from .core import compositions
    for c in compositions(x, r):
        yield tuple(canon((k,)) for k in c)


def all_ones(lams: Sequence[Partition]) -> MultiTableau:
    return tuple(tuple((1,) * k for k in canon(l)) for l in lams)

