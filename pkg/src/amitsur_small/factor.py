"""Factorization over a number field K' = Q[s]/(M) by Trager's norm method.

For squarefree ``f`` in K'[x], pick a shift ``c`` such that the norm
``N(x) = Res_s(M(s), f(x - c*s))`` is squarefree, factor ``N`` over Q, and
pull each rational factor back with a gcd over K'.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count
from typing import Sequence

from .arith import QPoly, interpolate, is_squarefree, resultant, zassenhaus_factor
from .numfield import NFElement, NumberField, nf_new


def _strip(cs) -> tuple:
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


class NFPoly:
    """Polynomial in x with coefficients in a number field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: Sequence = ()):
        self.field = field
        self.coeffs: tuple[NFElement, ...] = _strip(field(c) for c in coeffs)

    @classmethod
    def x(cls, field: NumberField) -> NFPoly:
        return cls(field, [0, 1])

    @classmethod
    def from_qpoly(cls, field: NumberField, f: QPoly) -> NFPoly:
        return cls(field, list(f.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> NFElement:
        return self.coeffs[-1] if self.coeffs else self.field.zero()

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _lift(self, other) -> NFPoly:
        if isinstance(other, NFPoly):
            return other
        if isinstance(other, (int, Fraction, NFElement)):
            return NFPoly(self.field, [other])
        if isinstance(other, QPoly):
            return NFPoly.from_qpoly(self.field, other)
        return NotImplemented

    def __add__(self, other) -> NFPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for k, c in enumerate(b):
            res[k] = res[k] + c
        return NFPoly(self.field, res)

    __radd__ = __add__

    def __neg__(self) -> NFPoly:
        return NFPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other) -> NFPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> NFPoly:
        return (-self) + other

    def __mul__(self, other) -> NFPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return NFPoly(self.field)
        res = [self.field.zero()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        res[i + j] = res[i + j] + ai * bj
        return NFPoly(self.field, res)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> NFPoly:
        result = NFPoly(self.field, [1])
        for _ in range(e):
            result = result * self
        return result

    def __divmod__(self, other: NFPoly) -> tuple[NFPoly, NFPoly]:
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        inv = other.lc.inverse()
        db = other.degree
        rem = list(self.coeffs)
        if len(rem) - 1 < db:
            return NFPoly(self.field), self
        quot = [self.field.zero()] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            c = c * inv
            quot[k - db] = c
            for i in range(db + 1):
                rem[k - db + i] = rem[k - db + i] - c * other.coeffs[i]
        return NFPoly(self.field, quot), NFPoly(self.field, rem[:db])

    def __floordiv__(self, other: NFPoly) -> NFPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: NFPoly) -> NFPoly:
        return divmod(self, other)[1]

    def monic(self) -> NFPoly:
        if not self.coeffs or self.lc == 1:
            return self
        inv = self.lc.inverse()
        return NFPoly(self.field, [c * inv for c in self.coeffs])

    def derivative(self) -> NFPoly:
        return NFPoly(self.field, [c * k for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, v) -> NFElement:
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def compose(self, inner: NFPoly) -> NFPoly:
        acc = NFPoly(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def to_qpoly(self) -> QPoly:
        return QPoly(c.to_rational() for c in self.coeffs)

    def to_strings(self) -> list:
        return [c.to_strings() for c in self.coeffs]

    def __repr__(self) -> str:
        return f"NFPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            ctext = str(c)
            if " " in ctext:
                ctext = f"({ctext})"
            if not mono:
                terms.append(ctext)
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{ctext}*{mono}")
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def nf_gcd(a: NFPoly, b: NFPoly) -> NFPoly:
    while b:
        a, b = b, a % b
    return a.monic()


def nf_squarefree(f: NFPoly) -> list[tuple[NFPoly, int]]:
    """Yun's squarefree decomposition over a characteristic-zero field."""
    f = f.monic()
    if f.degree < 1:
        return []
    out = []
    df = f.derivative()
    a = nf_gcd(f, df)
    b = f // a
    c = df // a
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        g = nf_gcd(b, d)
        if g.degree > 0:
            out.append((g, k))
        b = b // g
        c = d // g
        d = c - b.derivative()
        k += 1
    return out


def norm_poly(f: NFPoly) -> QPoly:
    """``Res_s(M(s), f(x, s))`` for monic-modulus M, by evaluation and interpolation.

    ``f`` evaluated at an integer point is an element of K' whose norm is
    ``Res(M, rep)``; the norm has degree ``deg f * [K':Q]``.
    """
    K = f.field
    deg = f.degree * K.degree
    xs = list(range(deg + 1))
    ys = []
    for x0 in xs:
        v = f(Fraction(x0))
        ys.append(resultant(K.modulus, v.rep) if v else Fraction(0))
    return interpolate(xs, ys)


def _shift_order():
    yield 0
    for k in count(1):
        yield k
        yield -k


def shifted(f: NFPoly, c: int) -> NFPoly:
    """``f(x - c*s)``."""
    K = f.field
    if c == 0:
        return f
    return f.compose(NFPoly(K, [-c * K.gen(), 1]))


def unshifted(f: NFPoly, c: int) -> NFPoly:
    """``f(x + c*s)``."""
    return shifted(f, -c)


@dataclass
class NFFactorization:
    field_modulus: QPoly
    input: NFPoly
    factors: list[tuple[NFPoly, int]]
    shift_used: int
    norms: list[QPoly] = field(default_factory=list)

    @property
    def irreducible(self) -> bool:
        return (len(self.factors) == 1 and self.factors[0][1] == 1
                and self.factors[0][0].degree == self.input.degree)

    def product(self) -> NFPoly:
        acc = NFPoly(self.input.field, [self.input.lc])
        for g, k in self.factors:
            acc = acc * g ** k
        return acc

    def verify(self) -> bool:
        return self.product() == self.input and sum(g.degree * k for g, k in self.factors) == self.input.degree


def _factor_squarefree(f: NFPoly, rng) -> tuple[list[NFPoly], int, QPoly]:
    for c in _shift_order():
        fc = shifted(f, c)
        N = norm_poly(fc)
        if is_squarefree(N):
            break
    facs = zassenhaus_factor(N, rng)
    if len(facs) == 1:
        return [f], c, N
    out = []
    for g, _ in facs:
        h = nf_gcd(fc, NFPoly.from_qpoly(f.field, g))
        out.append(unshifted(h, c))
    return out, c, N


def _as_nfpoly(f, K: NumberField) -> NFPoly:
    if isinstance(f, NFPoly):
        if f.field != K:
            raise ValueError("polynomial lives over a different field")
        return f
    if isinstance(f, QPoly):
        return NFPoly.from_qpoly(K, f)
    return NFPoly(K, f)


def coefficient_field(field_modulus: QPoly, name: str = "s") -> NumberField:
    """``Q[s]/(field_modulus)``; raises NotAFieldError when reducible."""
    return nf_new(field_modulus, name=name)


def trager_factor(f, field_modulus: QPoly, rng: random.Random | None = None) -> NFFactorization:
    """Complete factorization of ``f`` into monic irreducibles over Q[s]/(field_modulus)."""
    K = coefficient_field(field_modulus)
    f = _as_nfpoly(f, K)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    factors = []
    shift = 0
    norms = []
    for part, mult in nf_squarefree(f):
        if part.degree == 1:
            factors.append((part, mult))
            continue
        facs, shift, N = _factor_squarefree(part, rng)
        norms.append(N)
        factors.extend((g, mult) for g in facs)
    factors.sort(key=lambda gm: (gm[0].degree, [c.c for c in gm[0].coeffs], gm[1]))
    return NFFactorization(field_modulus, f, factors, shift, norms)


def nf_irreducible(f, field_modulus: QPoly) -> bool:
    fac = trager_factor(f, field_modulus)
    return fac.irreducible
