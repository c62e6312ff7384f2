"""Polynomials over a prime field F_q and their factorization.

Factoring goes squarefree decomposition -> distinct-degree -> equal-degree
(Cantor-Zassenhaus) splitting.  The equal-degree step is randomized; pass a
seeded :class:`random.Random` for reproducible runs.
"""

from __future__ import annotations

import random
from typing import Iterable

from .qpoly import QPoly


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_from(start: int = 2):
    n = max(start, 2)
    while True:
        if is_prime(n):
            yield n
        n += 1


def _strip(cs: list) -> tuple:
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


class FFPoly:
    """Polynomial over F_q, coefficients in ``[0, q)`` ascending."""

    __slots__ = ("q", "coeffs")

    def __init__(self, q: int, coeffs: Iterable[int] = ()):
        self.q = q
        self.coeffs: tuple[int, ...] = _strip([int(c) % q for c in coeffs])

    @classmethod
    def _raw(cls, q: int, coeffs: tuple) -> FFPoly:
        p = object.__new__(cls)
        p.q = q
        p.coeffs = coeffs
        return p

    @classmethod
    def from_qpoly(cls, f, q: int) -> FFPoly:
        """Reduce a rational polynomial mod ``q`` (denominators must be units)."""
        out = []
        for c in f.coeffs:
            if c.denominator % q == 0:
                raise ValueError(f"coefficient {c} is not {q}-integral")
            out.append(c.numerator * pow(c.denominator, -1, q))
        return cls(q, out)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FFPoly):
            return NotImplemented
        return self.q == other.q and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.q, self.coeffs))

    def __repr__(self) -> str:
        return f"FFPoly({self.q}, {list(self.coeffs)})"

    def __str__(self) -> str:
        return f"{QPoly(self.coeffs).to_text()} (mod {self.q})"

    def sort_key(self):
        return (len(self.coeffs), tuple(reversed(self.coeffs)))

    def __add__(self, other: FFPoly) -> FFPoly:
        q = self.q
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for k, c in enumerate(b):
            res[k] = (res[k] + c) % q
        return FFPoly._raw(q, _strip(res))

    def __neg__(self) -> FFPoly:
        return FFPoly._raw(self.q, tuple((-c) % self.q for c in self.coeffs))

    def __sub__(self, other: FFPoly) -> FFPoly:
        return self + (-other)

    def __mul__(self, other) -> FFPoly:
        q = self.q
        if isinstance(other, int):
            return FFPoly(q, [c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FFPoly._raw(q, ())
        res = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    res[i + j] += ai * bj
        return FFPoly._raw(q, _strip([c % q for c in res]))

    __rmul__ = __mul__

    def __divmod__(self, other: FFPoly) -> tuple[FFPoly, FFPoly]:
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial mod q")
        q = self.q
        db = other.degree
        rem = list(self.coeffs)
        if len(rem) - 1 < db:
            return FFPoly._raw(q, ()), self
        inv = pow(other.lc, -1, q)
        quot = [0] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] % q
            if not c:
                continue
            c = c * inv % q
            quot[k - db] = c
            off = k - db
            for i in range(db + 1):
                rem[off + i] = (rem[off + i] - c * bc[i]) % q
        return FFPoly._raw(q, _strip(quot)), FFPoly._raw(q, _strip(rem[:db]))

    def __floordiv__(self, other: FFPoly) -> FFPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: FFPoly) -> FFPoly:
        return divmod(self, other)[1]

    def monic(self) -> FFPoly:
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        inv = pow(self.coeffs[-1], -1, self.q)
        return FFPoly._raw(self.q, tuple(c * inv % self.q for c in self.coeffs))

    def derivative(self) -> FFPoly:
        return FFPoly(self.q, [k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, v: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * v + c) % self.q
        return acc

    def powmod(self, e: int, mod: FFPoly) -> FFPoly:
        result = FFPoly._raw(self.q, (1,)) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            e >>= 1
            if e:
                base = (base * base) % mod
        return result


def ff_gcd(a: FFPoly, b: FFPoly) -> FFPoly:
    while b:
        a, b = b, a % b
    return a.monic()


def ff_xgcd(a: FFPoly, b: FFPoly) -> tuple[FFPoly, FFPoly, FFPoly]:
    """``(g, s, t)`` with ``g = s*a + t*b`` monic."""
    q = a.q
    r0, r1 = a, b
    s0, s1 = FFPoly(q, [1]), FFPoly(q)
    t0, t1 = FFPoly(q), FFPoly(q, [1])
    while r1:
        quo, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if not r0:
        return r0, s0, t0
    inv = pow(r0.lc, -1, q)
    return r0 * inv, s0 * inv, t0 * inv


def _pth_root(f: FFPoly) -> FFPoly:
    # f has only exponents divisible by q; Frobenius is the identity on F_q
    q = f.q
    return FFPoly(q, f.coeffs[::q])


def ff_squarefree(f: FFPoly) -> list[tuple[FFPoly, int]]:
    """Squarefree decomposition of a monic polynomial over F_q."""
    q = f.q
    out: dict[FFPoly, int] = {}

    def rec(g: FFPoly, mult: int) -> None:
        if g.degree < 1:
            return
        dg = g.derivative()
        if not dg:
            rec(_pth_root(g), mult * q)
            return
        c = ff_gcd(g, dg)
        w = g // c
        k = 1
        while w.degree > 0:
            y = ff_gcd(w, c)
            fac = w // y
            if fac.degree > 0:
                out[fac] = out.get(fac, 0) + k * mult
            w = y
            c = c // y
            k += 1
        if c.degree > 0:
            rec(_pth_root(c), mult * q)

    rec(f.monic(), 1)
    return list(out.items())


def distinct_degree(f: FFPoly) -> list[tuple[FFPoly, int]]:
    """Split a monic squarefree ``f`` into products of equal-degree irreducibles.

    Returns ``(g_d, d)`` pairs, ``g_d`` the product of all degree-``d`` factors.
    """
    q = f.q
    out = []
    x = FFPoly(q, [0, 1])
    h = x
    rest = f
    d = 0
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(q, rest)
        g = ff_gcd(rest, h - x)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def equal_degree(f: FFPoly, d: int, rng: random.Random) -> list[FFPoly]:
    """Cantor-Zassenhaus splitting of ``f`` (monic, squarefree, all factors of degree ``d``)."""
    q = f.q
    if f.degree == d:
        return [f]
    n = f.degree
    while True:
        a = FFPoly(q, [rng.randrange(q) for _ in range(n)])
        if a.degree < 1:
            continue
        if q == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t = a % f
            acc = t
            for _ in range(d - 1):
                t = (t * t) % f
                acc = acc + t
            b = acc
        else:
            b = a.powmod((q**d - 1) // 2, f) - FFPoly(q, [1])
        g = ff_gcd(f, b)
        if 0 < g.degree < n:
            return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


def modp_factor(f: FFPoly, rng: random.Random | None = None) -> list[tuple[FFPoly, int]]:
    """Monic irreducible factors of ``f`` over F_q with multiplicities.

    ``f`` equals ``lc(f)`` times the product of the returned powers.
    """
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if rng is None:
        rng = random.Random(0)
    out = []
    for part, mult in ff_squarefree(f):
        for block, d in distinct_degree(part):
            for fac in equal_degree(block, d, rng):
                out.append((fac, mult))
    out.sort(key=lambda fm: (fm[0].sort_key(), fm[1]))
    return out


def ff_is_irreducible(f: FFPoly) -> bool:
    """Rabin-style check via distinct-degree splitting."""
    if f.degree < 1:
        return False
    f = f.monic()
    if ff_gcd(f, f.derivative()).degree > 0:
        return False
    dd = distinct_degree(f)
    return len(dd) == 1 and dd[0][1] == f.degree
