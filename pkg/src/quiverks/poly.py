"""Exact Laurent polynomials in the arrow variables and polynomials in t."""
from __future__ import annotations

from typing import Iterable, Mapping


class IntegrityError(ArithmeticError):
    """A proved identity failed on computed data."""


class ArrowLaurent:
    """Integer Laurent polynomial in t_{0,1}, ..., t_{r-1,0}.

    Exponent vectors have length r; position i is the arrow i -> i+1.
    """

    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.r = r
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff: int = 1) -> "ArrowLaurent":
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    @classmethod
    def one(cls, r: int) -> "ArrowLaurent":
        return cls(r, {(0,) * r: 1})

    @classmethod
    def zero(cls, r: int) -> "ArrowLaurent":
        return cls(r)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = ArrowLaurent(self.r, {(0,) * self.r: other})
        return isinstance(other, ArrowLaurent) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "ArrowLaurent") -> "ArrowLaurent":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return ArrowLaurent(self.r, out)

    def __neg__(self):
        return ArrowLaurent(self.r, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ArrowLaurent(self.r, {e: c * other for e, c in self.terms.items()})
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return ArrowLaurent(self.r, out)

    __rmul__ = __mul__

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def specialize(self) -> "UniLaurent":
        """Set every arrow variable equal to one variable."""
        out: dict[int, int] = {}
        for e, c in self.terms.items():
            out[sum(e)] = out.get(sum(e), 0) + c
        return {k: v for k, v in out.items() if v}

    def reduce(self, prefactor: tuple[int, ...]) -> tuple[int, ...]:
        """Divide by the monomial with the given exponent and read the
        quotient as a polynomial in the cycle product t_{01}...t_{r-1,0}.

        Raises IntegrityError if that is impossible or a coefficient is
        negative."""
        coeffs: dict[int, int] = {}
        for e, c in self.terms.items():
            q = [a - b for a, b in zip(e, prefactor)]
            if len(set(q)) > 1 or q[0] < 0:
                raise IntegrityError(f"not a polynomial in the cycle product: {self!r} / {prefactor}")
            coeffs[q[0]] = c
        if any(c < 0 for c in coeffs.values()):
            raise IntegrityError(f"negative coefficient in {self!r}")
        if not coeffs:
            return ()
        return tuple(coeffs.get(k, 0) for k in range(max(coeffs) + 1))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"t{i}{(i + 1) % self.r}" + (f"^{x}" if x != 1 else "")
                for i, x in enumerate(e) if x
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


UniLaurent = dict


def unipoly_str(coeffs: Iterable[int], var: str = "t") -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            parts.append(str(c))
        else:
            parts.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(parts) if parts else "0"


def unipoly_trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)
