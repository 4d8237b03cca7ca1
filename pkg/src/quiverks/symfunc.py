"""Tensor symmetric functions in the Schur basis with arrow-variable
coefficients, creation operators and quiver Hall-Littlewood functions."""
from __future__ import annotations

from functools import cache
from typing import Mapping, Sequence

from .core import (
    Partition, canon, conjugate, horizontal_strips, horizontal_strips_inside,
    multipartitions, partitions, vertical_strips_inside,
)
from .poly import ArrowLaurent, IntegrityError
from .rsk import d_compatible_count, star_shape

MultiPartition = tuple[Partition, ...]
Datum = tuple[tuple[int, int, tuple[int, ...]], ...]


class TensorSym:
    """Finite Schur expansion: multipartition -> {arrow exponent: int}."""

    __slots__ = ("r", "data")

    def __init__(self, r: int, data: Mapping[MultiPartition, Mapping[tuple[int, ...], int]] | None = None):
        self.r = r
        self.data: dict[MultiPartition, dict[tuple[int, ...], int]] = {}
        for mp, poly in (data or {}).items():
            poly = {e: c for e, c in poly.items() if c}
            if poly:
                self.data[mp] = poly

    @classmethod
    def one(cls, r: int) -> "TensorSym":
        return cls(r, {((),) * r: {(0,) * r: 1}})

    def coeff(self, mp: Sequence[Sequence[int]]) -> ArrowLaurent:
        key = tuple(canon(p) for p in mp)
        return ArrowLaurent(self.r, self.data.get(key, {}))

    def items(self):
        for mp in sorted(self.data, key=mp_order_key):
            yield mp, ArrowLaurent(self.r, self.data[mp])

    def __eq__(self, other):
        return isinstance(other, TensorSym) and self.r == other.r and self.data == other.data

    def __add__(self, other: "TensorSym") -> "TensorSym":
        out = _copy(self.data)
        _add_into(out, other.data, 1, None)
        return TensorSym(self.r, out)

    def __sub__(self, other: "TensorSym") -> "TensorSym":
        out = _copy(self.data)
        _add_into(out, other.data, -1, None)
        return TensorSym(self.r, out)

    def __bool__(self):
        return bool(self.data)

    def map_coeffs(self, fn) -> "TensorSym":
        """Apply fn to every exponent vector (coefficients are kept)."""
        out: dict = {}
        for mp, poly in self.data.items():
            d = out.setdefault(mp, {})
            for e, c in poly.items():
                e2 = fn(e)
                d[e2] = d.get(e2, 0) + c
        return TensorSym(self.r, out)

    def __repr__(self):
        return " + ".join(f"({c!r})*s{list(map(list, mp))}" for mp, c in self.items()) or "0"


def mp_order_key(mp: MultiPartition):
    """Size vector (largest first), then partitions in reverse lex order."""
    return (tuple(-sum(p) for p in mp), tuple(tuple(-x for x in p) for p in mp))


def _copy(data):
    return {mp: dict(p) for mp, p in data.items()}


def _add_into(out, data, scale, shift):
    for mp, poly in data.items():
        d = out.setdefault(mp, {})
        for e, c in poly.items():
            if shift is not None:
                e = tuple(a + b for a, b in zip(e, shift))
            v = d.get(e, 0) + c * scale
            if v:
                d[e] = v
            else:
                d.pop(e, None)
        if not d:
            del out[mp]


# ---- Lusztig data ----

def datum_from_triple(mu: Sequence[int], eta: Sequence[int], i1: int, r: int) -> Datum:
    mu, eta = tuple(mu), tuple(eta)
    if len(mu) != len(eta):
        raise ValueError("mu and eta must have the same length")
    if any(mu[k] < mu[k + 1] for k in range(len(mu) - 1)) or any(x < 0 for x in mu):
        raise ValueError(f"mu must be a weakly decreasing sequence: {mu}")
    if any(h <= 0 for h in eta):
        raise ValueError("eta entries must be positive")
    if not 0 <= i1 < r:
        raise ValueError(f"i1 must be a node in 0..{r - 1}")
    out = []
    for k, (m, h) in enumerate(zip(mu, eta)):
        start = i1 if k == 0 else 0
        for i in range(start, r):
            out.append((i, h, (m,) * h if i == r - 1 else (0,) * h))
    return tuple(out)


def is_periodic(D: Datum, r: int) -> bool:
    if not D:
        return True
    return D[-1][0] == r - 1 and all(D[k + 1][0] == (D[k][0] + 1) % r for k in range(len(D) - 1))


def is_even(D: Datum) -> bool:
    return not D or D[0][0] == 0


def is_borel(D: Datum) -> bool:
    return all(a == 1 for _, a, _ in D)


def is_rectangular(D: Datum) -> bool:
    return all(len(set(m)) <= 1 for _, _, m in D)


def is_concentrated(D: Datum, node: int) -> bool:
    return all(not any(m) for i, _, m in D if i != node)


def is_dominant(D: Datum, r: int) -> bool:
    for node in range(r):
        w = [x for i, _, m in D if i == node for x in m]
        if any(w[k] < w[k + 1] for k in range(len(w) - 1)):
            return False
    return True


def is_balanced(D: Datum, r: int) -> bool:
    return is_periodic(D, r) and all(
        D[k][1] == D[k + 1][1] for k in range(len(D) - 1) if D[k][0] != r - 1
    )


# ---- Pieri moves ----

@cache
def _mult_h(lam: Partition, k: int) -> tuple[Partition, ...]:
    return tuple(horizontal_strips(lam, k))


@cache
def _skew_h(lam: Partition, b: int) -> tuple[Partition, ...]:
    return tuple(horizontal_strips_inside(lam, b)) if b <= sum(lam) else ()


@cache
def _skew_e(lam: Partition, a: int) -> tuple[Partition, ...]:
    return tuple(vertical_strips_inside(lam, a)) if a <= sum(lam) else ()


def _replace(mp: MultiPartition, i: int, lam: Partition) -> MultiPartition:
    return mp[:i] + (lam,) + mp[i + 1:]


@cache
def _h_on_basis(i: int, d: int, mp: MultiPartition) -> tuple[tuple[MultiPartition, int, int], ...]:
    """H^{(i)}_d on one Schur function: triples (multipartition, power of
    t_{i,i+1}, coefficient)."""
    r = len(mp)
    j = (i + 1) % r
    out: dict[tuple[MultiPartition, int], int] = {}
    for b in range(sum(mp[j]) + 1):
        for kb in _skew_h(mp[j], b):
            m1 = _replace(mp, j, kb)
            for a in range(sum(m1[i]) + 1):
                k = d + a + b
                if k < 0:
                    continue
                sign = -1 if a % 2 else 1
                for ka in _skew_e(m1[i], a):
                    for kk in _mult_h(ka, k):
                        key = (_replace(m1, i, kk), b)
                        out[key] = out.get(key, 0) + sign
    return tuple((mp2, b, c) for (mp2, b), c in out.items() if c)


def apply_H(i: int, d: int, F: TensorSym) -> TensorSym:
    r = F.r
    out: dict = {}
    for mp, poly in F.data.items():
        for mp2, b, c in _h_on_basis(i, d, mp):
            dd = out.setdefault(mp2, {})
            for e, x in poly.items():
                e2 = e[:i] + (e[i] + b,) + e[i + 1:]
                v = dd.get(e2, 0) + c * x
                if v:
                    dd[e2] = v
                else:
                    dd.pop(e2, None)
    return TensorSym(r, out)


@cache
def r_expansion(a: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Coefficients of prod_{k<l} (1 - z_l/z_k) as (exponent, coeff)."""
    poly = {(0,) * a: 1}
    for k in range(a):
        for l in range(k + 1, a):
            new: dict[tuple[int, ...], int] = {}
            for e, c in poly.items():
                new[e] = new.get(e, 0) + c
                e2 = list(e)
                e2[l] += 1
                e2[k] -= 1
                e2 = tuple(e2)
                new[e2] = new.get(e2, 0) - c
            poly = {e: c for e, c in new.items() if c}
    return tuple(sorted(poly.items()))


def straighten(alpha: Sequence[int]) -> tuple[int, Partition]:
    """s_alpha for an integer vector via the Jacobi-Trudi determinant:
    returns (sign, partition), sign 0 when it vanishes."""
    a = len(alpha)
    v = [alpha[k] + a - 1 - k for k in range(a)]
    if any(x < 0 for x in v) or len(set(v)) < a:
        return 0, ()
    sign = 1
    for x in range(a):
        for y in range(x + 1, a):
            if v[x] < v[y]:
                sign = -sign
    v.sort(reverse=True)
    return sign, canon([v[k] - (a - 1 - k) for k in range(a)])


@cache
def schur_mult(kappa: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    from .rsk import lr_coeff
    if not kappa:
        return ((nu, 1),)
    if not nu:
        return ((kappa, 1),)
    out = []
    for lam in partitions(sum(kappa) + sum(nu)):
        c = lr_coeff(lam, kappa, nu)
        if c:
            out.append((lam, c))
    return tuple(out)


@cache
def _g_perp(mp: MultiPartition, i: int, m: int) -> tuple[tuple[MultiPartition, int, int], ...]:
    """Skewing by h_m[t X^{(i+1)} - X^{(i)}]: triples (mp, t-power, coeff)."""
    j = (i + 1) % len(mp)
    out: dict[tuple[MultiPartition, int], int] = {}
    for b in range(m + 1):
        sign = -1 if (m - b) % 2 else 1
        for kb in _skew_h(mp[j], b):
            m1 = _replace(mp, j, kb)
            for ka in _skew_e(m1[i], m - b):
                key = (_replace(m1, i, ka), b)
                out[key] = out.get(key, 0) + sign
    return tuple((k, b, c) for (k, b), c in out.items() if c)


@cache
def _g_perp_multi(mp: MultiPartition, i: int, ms: tuple[int, ...]) -> tuple[tuple[MultiPartition, int, int], ...]:
    if not ms:
        return ((mp, 0, 1),)
    out: dict[tuple[MultiPartition, int], int] = {}
    for mp1, b1, c1 in _g_perp(mp, i, ms[0]):
        for mp2, b2, c2 in _g_perp_multi(mp1, i, ms[1:]):
            key = (mp2, b1 + b2)
            out[key] = out.get(key, 0) + c1 * c2
    return tuple((k, b, c) for (k, b), c in out.items() if c)


def _bounded_sequences(a: int, total: int):
    if a == 0:
        yield ()
        return
    for x in range(total + 1):
        for rest in _bounded_sequences(a - 1, total - x):
            yield (x,) + rest


@cache
def _hpar_on_basis(i: int, beta: tuple[int, ...], mp: MultiPartition) -> tuple[tuple[MultiPartition, int, int], ...]:
    """Parabolic operator on one Schur function. Inside a block the operator
    product is normally ordered: all multiplications sit to the left of all
    skewings, and R(Z) times the multiplication part is a Jacobi-Trudi
    determinant."""
    a = len(beta)
    j = (i + 1) % len(mp)
    bound = sum(mp[i]) + (sum(mp[j]) if j != i else 0)
    out: dict[tuple[MultiPartition, int], int] = {}
    for ms in _bounded_sequences(a, bound):
        sign, kappa = straighten([b + m for b, m in zip(beta, ms)])
        if not sign:
            continue
        for mp1, tb, c in _g_perp_multi(mp, i, tuple(sorted(ms))):
            for lam, c2 in schur_mult(kappa, mp1[i]):
                key = (_replace(mp1, i, lam), tb)
                out[key] = out.get(key, 0) + sign * c * c2
    return tuple((k, b, c) for (k, b), c in out.items() if c)


def apply_H_parabolic(i: int, a: int, beta: Sequence[int], F: TensorSym) -> TensorSym:
    beta = tuple(beta)
    if len(beta) != a:
        raise ValueError("beta must have length a")
    out: dict = {}
    for mp, poly in F.data.items():
        for mp2, b, c in _hpar_on_basis(i, beta, mp):
            dd = out.setdefault(mp2, {})
            for e, x in poly.items():
                e2 = e[:i] + (e[i] + b,) + e[i + 1:]
                v = dd.get(e2, 0) + c * x
                if v:
                    dd[e2] = v
                else:
                    dd.pop(e2, None)
    return TensorSym(F.r, {k: v for k, v in out.items() if v})


def apply_H_parabolic_composed(i: int, a: int, beta: Sequence[int], F: TensorSym) -> TensorSym:
    """R(Z) times the plain composite H(z_1)...H(z_a); kept for comparison."""
    beta = tuple(beta)
    memo: dict[tuple[int, ...], TensorSym] = {(): F}

    def run(degs: tuple[int, ...]) -> TensorSym:
        if degs not in memo:
            memo[degs] = apply_H(i, degs[0], run(degs[1:]))
        return memo[degs]

    out: dict = {}
    for gam, c in r_expansion(a):
        degs = tuple(b - g for b, g in zip(beta, gam))
        _add_into(out, run(degs).data, c, None)
    return TensorSym(F.r, out)


@cache
def quiver_hl(datum: Datum, r: int) -> TensorSym:
    F = TensorSym.one(r)
    for i, a, m in reversed(datum):
        F = apply_H_parabolic(i, a, m, F)
    return F


def hl_triple(mu: Sequence[int], eta: Sequence[int], i1: int, r: int) -> TensorSym:
    return quiver_hl(datum_from_triple(mu, eta, i1, r), r)


# ---- KS polynomials ----

def prefactor(sizes: Sequence[int], datum: Datum, r: int) -> tuple[int, ...] | None:
    """Exponent of t_{hat Q1}^{lam - mu(.)}, or None off the root lattice."""
    d = list(sizes)
    for i, _, m in datum:
        d[i] -= sum(m)
    if sum(d):
        return None
    out, acc = [], 0
    for i in range(r - 1):
        acc += d[i]
        out.append(acc)
    out.append(0)
    return tuple(out)


def ks_polynomial(datum: Datum, lams: Sequence[Sequence[int]], r: int) -> ArrowLaurent:
    return quiver_hl(datum, r).coeff(lams)


def reduced_ks(datum: Datum, lams: Sequence[Sequence[int]], r: int) -> tuple[int, ...]:
    """Reduced KS polynomial as a coefficient tuple; raises IntegrityError
    if the arrow polynomial does not factor as required."""
    K = ks_polynomial(datum, lams, r)
    pre = prefactor([sum(p) for p in lams], datum, r)
    if pre is None:
        if K:
            raise IntegrityError(f"nonzero coefficient off the root lattice at {lams}")
        return ()
    return K.reduce(pre)


def reduced_table(datum: Datum, r: int) -> dict[MultiPartition, tuple[int, ...]]:
    F = quiver_hl(datum, r)
    return {mp: reduced_ks(datum, mp, r) for mp in sorted(F.data, key=mp_order_key)}


# ---- plethysm and omega ----

@cache
def _compat(lam: Partition, mp: MultiPartition) -> int:
    outer, inner = star_shape(mp)
    return d_compatible_count(lam, outer, inner)


def plethysm_schur(lam: Partition, r: int) -> TensorSym:
    """s_lam[Y] with Y = sum_i t_{i,i+1}...t_{r-2,r-1} X^{(i)}."""
    lam = canon(lam)
    out: dict = {}
    for mp in multipartitions(sum(lam), r):
        c = _compat(lam, mp)
        if c:
            acc, exp = 0, []
            for i in range(r - 1):
                acc += sum(mp[i])
                exp.append(acc)
            exp.append(0)
            out[mp] = {tuple(exp): c}
    return TensorSym(r, out)


def plethysm_Y(f: Mapping[Partition, Mapping[int, int]], r: int) -> TensorSym:
    """Apply the substitution X -> Y to sum_lam f[lam](t) s_lam, sending t to
    the cycle product t_{01}...t_{r-1,0}. f maps partitions to {power: coeff}."""
    out: dict = {}
    for lam, poly in f.items():
        base = plethysm_schur(lam, r)
        for k, c in poly.items():
            _add_into(out, base.data, c, (k,) * r)
    return TensorSym(r, out)


def single_node(F: TensorSym) -> dict[Partition, dict[int, int]]:
    if F.r != 1:
        raise ValueError("expected a one-node function")
    return {mp[0]: {e[0]: c for e, c in poly.items()} for mp, poly in F.data.items()}


def omega(F: TensorSym) -> TensorSym:
    return TensorSym(F.r, {tuple(conjugate(p) for p in mp): dict(poly) for mp, poly in F.data.items()})


def specialize(F: TensorSym) -> dict[MultiPartition, dict[int, int]]:
    """Set every arrow variable to one variable."""
    out: dict = {}
    for mp, poly in F.data.items():
        d: dict[int, int] = {}
        for e, c in poly.items():
            d[sum(e)] = d.get(sum(e), 0) + c
        d = {k: v for k, v in d.items() if v}
        if d:
            out[mp] = d
    return out
