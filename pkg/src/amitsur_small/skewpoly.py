"""Polynomial rings D[x] and D[x, y] over a cyclic algebra D.

Both variables are central.  Ideal-theoretic operations use LEFT ideals:
"g divides f" means ``f = h * g`` (f lies in ``D[x] g``), quotients sit on
the left of divisors, and monicization multiplies by ``lc(g)^-1`` on the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cycalg import AlgElement, CyclicAlgebra, NotInvertibleError, alg_inverse
from .numfield import NFElement


def _strip(cs) -> tuple:
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


class SkewPoly:
    """``sum_k a_k x^k`` with ``a_k`` in D, ascending degree."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: CyclicAlgebra, coeffs: Sequence = ()):
        self.alg = alg
        self.coeffs: tuple[AlgElement, ...] = _strip(_coerce(alg, c) for c in coeffs)

    @classmethod
    def x(cls, alg: CyclicAlgebra) -> SkewPoly:
        return cls(alg, [alg.zero(), alg.one()])

    @classmethod
    def constant(cls, alg: CyclicAlgebra, a) -> SkewPoly:
        return cls(alg, [a])

    @classmethod
    def from_rational(cls, alg: CyclicAlgebra, poly) -> SkewPoly:
        """Embed a rational polynomial (central coefficients)."""
        return cls(alg, [alg.scalar(c) for c in poly.coeffs])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> AlgElement:
        return self.coeffs[-1] if self.coeffs else self.alg.zero()

    def __getitem__(self, k: int) -> AlgElement:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.alg.zero()

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, AlgElement, NFElement)):
            other = SkewPoly(self.alg, [other])
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _lift(self, other) -> SkewPoly:
        if isinstance(other, SkewPoly):
            return other
        if isinstance(other, (int, Fraction, AlgElement, NFElement)):
            return SkewPoly(self.alg, [other])
        return NotImplemented

    def __add__(self, other) -> SkewPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for k, c in enumerate(b):
            res[k] = res[k] + c
        return SkewPoly._raw(self.alg, res)

    __radd__ = __add__

    def __neg__(self) -> SkewPoly:
        return SkewPoly._raw(self.alg, [-c for c in self.coeffs])

    def __sub__(self, other) -> SkewPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> SkewPoly:
        return (-self) + other

    def __mul__(self, other) -> SkewPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return spoly_mul(self, other)

    def __rmul__(self, other) -> SkewPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return spoly_mul(other, self)

    def __pow__(self, e: int) -> SkewPoly:
        result = SkewPoly(self.alg, [1])
        for _ in range(e):
            result = result * self
        return result

    @classmethod
    def _raw(cls, alg, coeffs) -> SkewPoly:
        p = object.__new__(cls)
        p.alg = alg
        p.coeffs = _strip(coeffs)
        return p

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> SkewPoly:
        """``lc^-1 * self`` (left multiplication preserves ``D[x] self``)."""
        if not self.coeffs or self.is_monic():
            return self
        inv = alg_inverse(self.lc)
        return SkewPoly._raw(self.alg, [inv * c for c in self.coeffs])

    def right_eval(self, r: AlgElement) -> AlgElement:
        """``sum_l a_l r^l``, the remainder of division by ``x - r``."""
        acc = self.alg.zero()
        power = self.alg.one()
        for c in self.coeffs:
            acc = acc + c * power
            power = power * r
        return acc

    def to_strings(self) -> list:
        return [c.to_strings() for c in self.coeffs]

    def __repr__(self) -> str:
        return f"SkewPoly({self})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            ctext = str(c)
            if not mono:
                alone = len(terms) == 0
                terms.append(ctext if alone or " " not in ctext.lstrip("-") else f"({ctext})")
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            elif " " in ctext:
                terms.append(f"({ctext})*{mono}")
            else:
                terms.append(f"{ctext}*{mono}")
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def _coerce(alg: CyclicAlgebra, c) -> AlgElement:
    if isinstance(c, AlgElement):
        return c
    if isinstance(c, NFElement):
        return alg.from_field(c)
    return alg.scalar(c)


def spoly_mul(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    if a.alg is not b.alg and a.alg != b.alg:
        raise ValueError("polynomials over different algebras")
    if not a.coeffs or not b.coeffs:
        return SkewPoly(a.alg)
    res = [a.alg.zero()] * (len(a.coeffs) + len(b.coeffs) - 1)
    for k, ak in enumerate(a.coeffs):
        if not ak:
            continue
        for l, bl in enumerate(b.coeffs):
            if bl:
                res[k + l] = res[k + l] + ak * bl
    return SkewPoly._raw(a.alg, res)


def spoly_divmod(a: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """``a = q*g + r`` with ``deg r < deg g`` (quotient on the left)."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    try:
        inv = alg_inverse(g.lc)
    except NotInvertibleError as exc:
        raise NotInvertibleError("leading coefficient of divisor is not invertible") from exc
    alg = a.alg
    dg = g.degree
    rem = list(a.coeffs)
    if len(rem) - 1 < dg:
        return SkewPoly(alg), a
    quot = [alg.zero()] * (len(rem) - dg)
    gc = g.coeffs
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if not c:
            continue
        c = c * inv
        quot[k - dg] = c
        off = k - dg
        for i in range(dg):
            if gc[i]:
                rem[off + i] = rem[off + i] - c * gc[i]
        rem[k] = alg.zero()
    return SkewPoly._raw(alg, quot), SkewPoly._raw(alg, rem[:dg])


@dataclass(frozen=True)
class BezoutCertificate:
    """``g = u*f1 + v*f2`` with ``g`` monic and right-dividing ``f1`` and ``f2``."""

    g: SkewPoly
    u: SkewPoly
    v: SkewPoly
    f1: SkewPoly
    f2: SkewPoly

    def verify(self) -> bool:
        if not self.g.is_monic():
            return False
        if self.u * self.f1 + self.v * self.f2 != self.g:
            return False
        return not spoly_divmod(self.f1, self.g)[1] and not spoly_divmod(self.f2, self.g)[1]


def left_ideal_gcd(f1: SkewPoly, f2: SkewPoly) -> BezoutCertificate:
    """Monic generator of ``D[x] f1 + D[x] f2`` with Bezout cofactors."""
    if not f1 and not f2:
        raise ValueError("left gcd of two zero polynomials")
    alg = f1.alg
    one, zero = SkewPoly(alg, [1]), SkewPoly(alg)
    r0, r1 = f1, f2
    u0, u1 = one, zero
    v0, v1 = zero, one
    while r1:
        q, r = spoly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    inv = alg_inverse(r0.lc)
    g = SkewPoly._raw(alg, [inv * c for c in r0.coeffs])
    u = SkewPoly._raw(alg, [inv * c for c in u0.coeffs])
    v = SkewPoly._raw(alg, [inv * c for c in v0.coeffs])
    return BezoutCertificate(g, u, v, f1, f2)


def left_gcd_generator(f1: SkewPoly, f2: SkewPoly) -> SkewPoly:
    """Monic generator of ``D[x] f1 + D[x] f2`` without tracking cofactors."""
    if not f1 and not f2:
        raise ValueError("left gcd of two zero polynomials")
    r0, r1 = f1, f2
    while r1:
        r0, r1 = r1, spoly_divmod(r0, r1)[1]
    return r0.monic()


def j_commutator(g: SkewPoly, d: AlgElement) -> SkewPoly:
    """``g*d - d*g``, i.e. ``sum_l (a_l d - d a_l) x^l`` since x is central."""
    return SkewPoly._raw(g.alg, [a * d - d * a for a in g.coeffs])


def wedderburn_split(f: SkewPoly, r: AlgElement) -> SkewPoly | None:
    """``h`` with ``f = h*(x - r)`` when ``r`` is a right root of ``f``, else None."""
    if not f:
        raise ValueError("zero polynomial")
    if f.right_eval(r):
        return None
    alg = f.alg
    # synthetic division: h_{k-1} = a_k + h_k r
    n = f.degree
    h = [alg.zero()] * n
    carry = alg.zero()
    for k in range(n, 0, -1):
        carry = f.coeffs[k] + carry * r if k < n else f.coeffs[k]
        h[k - 1] = carry
    return SkewPoly._raw(alg, h)


class BiPoly:
    """``sum_k C_k(x) y^k`` with ``C_k`` in D[x]; x and y are central."""

    __slots__ = ("alg", "y_coeffs")

    def __init__(self, alg: CyclicAlgebra, y_coeffs: Sequence = ()):
        self.alg = alg
        cs = [c if isinstance(c, SkewPoly) else SkewPoly(alg, [c]) for c in y_coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.y_coeffs: tuple[SkewPoly, ...] = tuple(cs)

    @classmethod
    def y(cls, alg: CyclicAlgebra) -> BiPoly:
        return cls(alg, [SkewPoly(alg), SkewPoly(alg, [1])])

    @classmethod
    def from_skew(cls, p: SkewPoly) -> BiPoly:
        return cls(p.alg, [p])

    @property
    def y_degree(self) -> int:
        return len(self.y_coeffs) - 1

    @property
    def x_degree(self) -> int:
        return max((c.degree for c in self.y_coeffs), default=-1)

    def __bool__(self) -> bool:
        return bool(self.y_coeffs)

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.y_coeffs == other.y_coeffs

    def __hash__(self) -> int:
        return hash(self.y_coeffs)

    def _lift(self, other) -> BiPoly:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, SkewPoly):
            return BiPoly(self.alg, [other])
        if isinstance(other, (int, Fraction, AlgElement, NFElement)):
            return BiPoly(self.alg, [SkewPoly(self.alg, [other])])
        return NotImplemented

    def __add__(self, other) -> BiPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.y_coeffs, other.y_coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for k, c in enumerate(b):
            res[k] = res[k] + c
        return BiPoly(self.alg, res)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly(self.alg, [-c for c in self.y_coeffs])

    def __sub__(self, other) -> BiPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> BiPoly:
        return (-self) + other

    def __mul__(self, other) -> BiPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return bipoly_mul(self, other)

    def __rmul__(self, other) -> BiPoly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return bipoly_mul(other, self)

    def __pow__(self, e: int) -> BiPoly:
        result = BiPoly(self.alg, [SkewPoly(self.alg, [1])])
        for _ in range(e):
            result = result * self
        return result

    def to_strings(self) -> list:
        return [c.to_strings() for c in self.y_coeffs]

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        if not self.y_coeffs:
            return "0"
        parts = []
        for k in range(len(self.y_coeffs) - 1, -1, -1):
            c = self.y_coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("y" if k == 1 else f"y^{k}")
            ctext = str(c)
            if not mono:
                alone = len(parts) == 0
                parts.append(ctext if alone or " " not in ctext.lstrip("-") else f"({ctext})")
            elif c == 1:
                parts.append(mono)
            elif " " in ctext.lstrip("-"):
                parts.append(f"({ctext})*{mono}")
            else:
                parts.append(f"{ctext}*{mono}")
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def bipoly_mul(a: BiPoly, b: BiPoly) -> BiPoly:
    if not a.y_coeffs or not b.y_coeffs:
        return BiPoly(a.alg)
    res = [SkewPoly(a.alg)] * (len(a.y_coeffs) + len(b.y_coeffs) - 1)
    for k, ak in enumerate(a.y_coeffs):
        if not ak:
            continue
        for l, bl in enumerate(b.y_coeffs):
            if bl:
                res[k + l] = res[k + l] + ak * bl
    return BiPoly(a.alg, res)


def _times_right(c: SkewPoly, d: AlgElement) -> SkewPoly:
    return SkewPoly._raw(c.alg, [a * d for a in c.coeffs])


def bipoly_reduce_y(P: BiPoly) -> SkewPoly:
    """``sum_k C_k(x) j^k``: the representative of ``P`` modulo ``D[x, y](y - j)``."""
    alg = P.alg
    out = SkewPoly(alg)
    jk = alg.one()
    for c in P.y_coeffs:
        out = out + _times_right(c, jk)
        jk = jk * alg.j
    return out


def bipoly_reduce_y_ext(P: BiPoly) -> tuple[BiPoly, SkewPoly]:
    """``(Q, r)`` with ``P = Q*(y - j) + r`` and ``r`` free of y.

    Uses ``C_k (y^k - j^k) = C_k (sum_a y^a j^(k-1-a)) (y - j)``.
    """
    alg = P.alg
    d = len(P.y_coeffs)
    jpow = [alg.one()]
    for _ in range(max(d, 1)):
        jpow.append(jpow[-1] * alg.j)
    q = [SkewPoly(alg)] * max(d - 1, 0)
    for k, c in enumerate(P.y_coeffs):
        for a in range(k):
            q[a] = q[a] + _times_right(c, jpow[k - 1 - a])
    return BiPoly(alg, q), bipoly_reduce_y(P)


def y_minus_j(alg: CyclicAlgebra) -> BiPoly:
    return BiPoly(alg, [SkewPoly(alg, [-alg.j]), SkewPoly(alg, [1])])
