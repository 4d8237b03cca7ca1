"""Graded characters of the wreath product Z/r ~ S_n, Frobenius
characteristics, and graded induction from S_n.

Scalars are polynomials in the grading variable with coefficients in
Q[Z/r], stored as {(degree, power of zeta): Fraction}. Integrality is
checked after reducing modulo the r-th cyclotomic polynomial.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import permutations, product
from math import factorial
from typing import Callable, Iterator, Mapping, Sequence

from .core import Partition, canon, conjugate, multipartitions, partitions
from .poly import IntegrityError
from .rsk import lr_multi

Scalar = dict[tuple[int, int], Fraction]
UniPoly = dict[int, int]
ColoredPerm = tuple[tuple[int, ...], tuple[int, ...]]  # (colors, one-line w on 1..n)


# ---- Z/r scalars ----

def sc_mul(x: Mapping, y: Mapping, r: int) -> Scalar:
    out: Scalar = {}
    for (d1, z1), c1 in x.items():
        for (d2, z2), c2 in y.items():
            k = (d1 + d2, (z1 + z2) % r)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def sc_add_into(out: Scalar, x: Mapping, scale=1) -> None:
    for k, c in x.items():
        out[k] = out.get(k, 0) + c * scale
        if not out[k]:
            del out[k]


@cache
def cyclotomic(r: int) -> tuple[int, ...]:
    """Coefficients (constant first) of the r-th cyclotomic polynomial."""
    num = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            num = _divide_exact(num, list(cyclotomic(d)))
    return tuple(num)


def _divide_exact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1] // den[-1]
        q[k] = c
        for j, d in enumerate(den):
            num[k + j] -= c * d
    if any(num):
        raise ArithmeticError("inexact division")
    return q


def reduce_zeta(coeffs: Mapping[int, Fraction], r: int) -> list[Fraction]:
    """Canonical form of sum c_k zeta^k modulo the cyclotomic polynomial."""
    phi = cyclotomic(r)
    deg = len(phi) - 1
    v = [Fraction(0)] * max(r, deg + 1)
    for k, c in coeffs.items():
        v[k % r] += c
    for k in range(len(v) - 1, deg - 1, -1):
        c = v[k]
        if c:
            for j, p in enumerate(phi):
                v[k - deg + j] -= c * p
    return v[:deg]


def to_integer_poly(x: Mapping, r: int) -> UniPoly:
    """Read an exact scalar as an integer polynomial in the grading variable."""
    by_deg: dict[int, dict[int, Fraction]] = {}
    for (d, z), c in x.items():
        by_deg.setdefault(d, {})[z] = by_deg.setdefault(d, {}).get(z, 0) + c
    out: UniPoly = {}
    for d, zs in by_deg.items():
        v = reduce_zeta(zs, r)
        if any(v[1:]) or v[0].denominator != 1:
            raise IntegrityError(f"non-integral coefficient at degree {d}: {v}")
        if v[0]:
            out[d] = int(v[0])
    return out


# ---- groups and cycle types ----

def cycles(w: Sequence[int]) -> list[list[int]]:
    """Cycles of a one-line permutation on 1..n."""
    seen: set[int] = set()
    out = []
    for k in range(1, len(w) + 1):
        if k in seen:
            continue
        cyc = []
        x = k
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = w[x - 1]
        out.append(cyc)
    return out


def cycle_type(w: Sequence[int]) -> Partition:
    return canon(sorted((len(c) for c in cycles(w)), reverse=True))


def colored_permutations(n: int, r: int) -> Iterator[ColoredPerm]:
    for w in permutations(range(1, n + 1)):
        for g in product(range(r), repeat=n):
            yield g, w


def compose(x: ColoredPerm, y: ColoredPerm, r: int) -> ColoredPerm:
    """Product xy in the semidirect product, with (g, w) acting on
    monomials by x_k -> zeta^{g_{w(k)}} x_{w(k)}."""
    (g, w), (h, v) = x, y
    n = len(w)
    wv = tuple(w[v[k] - 1] for k in range(n))
    # y sends x_k to h_{v(k)} x_{v(k)}, then x scales x_{v(k)} by g_{wv(k)}
    col = [0] * n
    for k in range(n):
        col[wv[k] - 1] = (g[wv[k] - 1] + h[v[k] - 1]) % r
    return tuple(col), wv


def inverse(x: ColoredPerm, r: int) -> ColoredPerm:
    g, w = x
    n = len(w)
    winv = [0] * n
    for k in range(n):
        winv[w[k] - 1] = k + 1
    col = [0] * n
    for k in range(n):
        col[winv[k] - 1] = (-g[k]) % r
    return tuple(col), tuple(winv)


def cycle_type_colored(x: ColoredPerm, r: int) -> tuple[Partition, ...]:
    g, w = x
    parts: list[list[int]] = [[] for _ in range(r)]
    for c in cycles(w):
        color = sum(g[k - 1] for k in c) % r
        parts[color].append(len(c))
    return tuple(canon(sorted(p, reverse=True)) for p in parts)


def z_lambda(lam: Partition) -> int:
    out = 1
    for k in set(lam):
        m = lam.count(k)
        out *= k ** m * factorial(m)
    return out


def class_size(tau: Sequence[Partition], r: int) -> int:
    n = sum(map(sum, tau))
    z = 1
    for p in tau:
        z *= z_lambda(canon(p)) * r ** len(canon(p))
    return r ** n * factorial(n) // z


# ---- characters of S_n ----

@cache
def mn_character(lam: Partition, rho: Partition) -> int:
    """Murnaghan-Nakayama rule on beta numbers."""
    lam, rho = canon(lam), canon(rho)
    if sum(lam) != sum(rho):
        return 0
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    L = len(lam)
    beta = [lam[i] + L - 1 - i for i in range(L)]
    total = 0
    bs = set(beta)
    for b in beta:
        if b - k >= 0 and b - k not in bs:
            sign = (-1) ** sum(1 for c in beta if b - k < c < b)
            nb = sorted((bs - {b}) | {b - k}, reverse=True)
            mu = canon([nb[i] - (L - 1 - i) for i in range(L)])
            total += sign * mn_character(mu, rest)
    return total


def schur_to_class_function(f: Mapping[Partition, Mapping[int, int]], n: int) -> dict[Partition, UniPoly]:
    out: dict[Partition, UniPoly] = {}
    for rho in partitions(n):
        acc: UniPoly = {}
        for lam, poly in f.items():
            x = mn_character(canon(lam), rho)
            for d, c in poly.items():
                acc[d] = acc.get(d, 0) + x * c
        out[rho] = {d: c for d, c in acc.items() if c}
    return out


def frobenius_sn(char: Mapping[Partition, Mapping[int, int]], n: int) -> dict[Partition, UniPoly]:
    """(1/n!) sum_w Tr(w) p_{type(w)} in the Schur basis."""
    out: dict[Partition, UniPoly] = {}
    for lam in partitions(n):
        acc: dict[int, Fraction] = {}
        for rho in partitions(n):
            x = mn_character(lam, rho)
            for d, c in char.get(rho, {}).items():
                acc[d] = acc.get(d, 0) + Fraction(c * x, z_lambda(rho))
        poly = {}
        for d, c in acc.items():
            if c.denominator != 1:
                raise IntegrityError(f"non-integral Frobenius coefficient {c}")
            if c:
                poly[d] = int(c)
        if poly:
            out[lam] = poly
    return out


def trivial_character(n: int) -> dict[Partition, UniPoly]:
    return {rho: {0: 1} for rho in partitions(n)}


def sign_character(n: int) -> dict[Partition, UniPoly]:
    return {rho: {0: (-1) ** (n - len(rho))} for rho in partitions(n)}


def regular_character(n: int) -> dict[Partition, UniPoly]:
    return {rho: ({0: factorial(n)} if rho == (1,) * n else {}) for rho in partitions(n)}


# ---- traces on polynomials with exponents below r ----

def trace_S_less_r(x: ColoredPerm, r: int) -> Scalar:
    """Graded trace on the span of monomials with all exponents below r,
    read off the diagonal of the monomial basis."""
    g, w = x
    n = len(w)
    out: Scalar = {}
    for m in product(range(r), repeat=n):
        image = [0] * n
        for k in range(n):
            image[w[k] - 1] = m[k]
        if tuple(image) != m:
            continue
        z = sum(g[w[k] - 1] * m[k] for k in range(n)) % r
        key = (sum(m), z)
        out[key] = out.get(key, 0) + 1
    return out


def trace_closed_form(x: ColoredPerm, r: int) -> Scalar:
    g, w = x
    cs = cycles(w)
    colors = [sum(g[k - 1] for k in c) % r for c in cs]
    out: Scalar = {}
    for js in product(range(r), repeat=len(cs)):
        z = sum(i * j for i, j in zip(colors, js)) % r
        d = sum(j * len(c) for j, c in zip(js, cs))
        out[(d, z)] = out.get((d, z), 0) + 1
    return out


# ---- power sums and Frobenius for the wreath product ----

def _mult_expansion(a: Mapping, b: Mapping, r: int) -> dict:
    out: dict = {}
    for k1, s1 in a.items():
        for k2, s2 in b.items():
            key = tuple(canon(sorted(x + y, reverse=True)) for x, y in zip(k1, k2))
            cur = out.setdefault(key, {})
            sc_add_into(cur, sc_mul(s1, s2, r))
            if not cur:
                del out[key]
    return out


def _transform(expansion: Mapping, r: int, sign: int, scale: Fraction) -> dict:
    out: dict = {}
    for key, sc in expansion.items():
        acc = {tuple(() for _ in range(r)): dict(sc)}
        for i, part in enumerate(key):
            for s in part:
                gen = {}
                for j in range(r):
                    k = tuple((s,) if q == j else () for q in range(r))
                    gen[k] = {(0, (sign * i * j) % r): scale}
                acc = _mult_expansion(acc, gen, r)
        for k, v in acc.items():
            cur = out.setdefault(k, {})
            sc_add_into(cur, v)
            if not cur:
                del out[k]
    return out


def fourier_p_hat_to_p(expansion: Mapping, r: int) -> dict:
    """Rewrite class power sums as irreducible power sums:
    phat^{(i)}_s = sum_j zeta^{-ij} p^{(j)}_s."""
    return _transform(expansion, r, -1, Fraction(1))


def fourier_p_to_p_hat(expansion: Mapping, r: int) -> dict:
    """p^{(j)}_s = r^{-1} sum_i zeta^{ij} phat^{(i)}_s."""
    return _transform(expansion, r, 1, Fraction(1, r))


def p_to_schur(expansion: Mapping, r: int) -> dict[tuple[Partition, ...], Scalar]:
    out: dict = {}
    for key, sc in expansion.items():
        n = [sum(p) for p in key]
        for mp in product(*(partitions(k) for k in n)):
            x = 1
            for lam, rho in zip(mp, key):
                x *= mn_character(lam, rho)
                if not x:
                    break
            if x:
                cur = out.setdefault(tuple(mp), {})
                sc_add_into(cur, sc, x)
                if not cur:
                    del out[tuple(mp)]
    return out


def frobenius_wreath(trace: Callable[[ColoredPerm], Mapping], n: int, r: int) -> dict[tuple[Partition, ...], UniPoly]:
    """|G|^{-1} sum_g Tr(g) phat_{type(g)} by full enumeration, in the
    tensor Schur basis."""
    by_class: dict = {}
    count = 0
    for x in colored_permutations(n, r):
        count += 1
        key = cycle_type_colored(x, r)
        cur = by_class.setdefault(key, {})
        sc_add_into(cur, trace(x))
    scale = Fraction(1, count)
    by_class = {k: {kk: vv * scale for kk, vv in v.items()} for k, v in by_class.items()}
    schur = p_to_schur(fourier_p_hat_to_p(by_class, r), r)
    out = {}
    for mp, sc in schur.items():
        poly = to_integer_poly(sc, r)
        if poly:
            out[mp] = poly
    return out


def frobenius_wreath_classes(char: Mapping[tuple[Partition, ...], Mapping], n: int, r: int) -> dict:
    """The same map from a class function given on colored cycle types."""
    by_class = {}
    G = r ** n * factorial(n)
    for tau in multipartitions(n, r):
        sc = char.get(tau)
        if sc:
            by_class[tau] = {k: Fraction(v) * class_size(tau, r) / G for k, v in sc.items()}
    schur = p_to_schur(fourier_p_hat_to_p(by_class, r), r)
    out = {}
    for mp, sc in schur.items():
        poly = to_integer_poly(sc, r)
        if poly:
            out[mp] = poly
    return out


# ---- graded induction ----

def ind_trace(char_M: Mapping[Partition, Mapping[int, int]], r: int) -> Callable[[ColoredPerm], Scalar]:
    """Trace of S_{<r} tensor M with the grading of M dilated by r."""
    def trace(x: ColoredPerm) -> Scalar:
        poly = char_M.get(cycle_type(x[1]), {})
        m = {(d * r, 0): Fraction(c) for d, c in poly.items() if c}
        return sc_mul(trace_S_less_r(x, r), m, r)
    return trace


def ind_frobenius(char_M: Mapping[Partition, Mapping[int, int]], n: int, r: int) -> dict:
    return frobenius_wreath(ind_trace(char_M, r), n, r)


def pleth_graded(f: Mapping[Partition, Mapping[int, int]], r: int, shifts: Sequence[int],
                 dilate: int = 1) -> dict[tuple[Partition, ...], UniPoly]:
    """f(t^dilate)[sum_i t^{shifts[i]} X^{(i)}] in the tensor Schur basis."""
    out: dict = {}
    for lam, poly in f.items():
        lam = canon(lam)
        for mp in multipartitions(sum(lam), r):
            c = lr_multi(lam, tuple(canon(p) for p in mp))
            if not c:
                continue
            shift = sum(s * sum(p) for s, p in zip(shifts, mp))
            cur = out.setdefault(mp, {})
            for d, x in poly.items():
                k = d * dilate + shift
                cur[k] = cur.get(k, 0) + c * x
    return {mp: {d: c for d, c in p.items() if c} for mp, p in out.items() if any(p.values())}


def verify_frob_ind(char_M: Mapping[Partition, Mapping[int, int]], n: int, r: int) -> tuple[bool, dict, dict]:
    lhs = ind_frobenius(char_M, n, r)
    frob = frobenius_sn(char_M, n)
    rhs = pleth_graded(frob, r, list(range(r)), dilate=r)
    return lhs == rhs, lhs, rhs


def omega_tensor(F: Mapping[tuple[Partition, ...], UniPoly]) -> dict:
    return {tuple(conjugate(p) for p in mp): dict(v) for mp, v in F.items()}


def frob_R(mu: Partition) -> dict[Partition, UniPoly]:
    """Graded Frobenius characteristic of the Garsia-Procesi module, taken as
    omega of the one-node parabolic HL function for columns of heights mu."""
    from .symfunc import hl_triple, single_node
    mu = canon(mu)
    F = single_node(hl_triple((1,) * len(mu), mu, 0, 1))
    return {conjugate(lam): dict(p) for lam, p in F.items()}


def rmu_identity(mu: Partition, r: int) -> dict:
    """Compare omega Frob(Ind R_mu) with the specialized quiver HL function.

    Both node orders of the substitution are reported; 'reversed' puts
    t^{r-1-i} on node i."""
    from .symfunc import hl_triple, specialize
    mu = canon(mu)
    n = sum(mu)
    fr = frob_R(mu)
    char = schur_to_class_function(fr, n)
    lhs = omega_tensor(ind_frobenius(char, n, r))
    hl = specialize(hl_triple((1,) * len(mu), mu, 0, r))
    rev = {tuple(reversed(mp)): p for mp, p in lhs.items()}
    return {
        "lhs": lhs, "hl": hl,
        "equal": lhs == hl,
        "equal_after_node_reversal": rev == hl,
        "pleth_check": lhs == omega_tensor(pleth_graded(fr, r, list(range(r)), dilate=r)),
    }
