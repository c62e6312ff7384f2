"""Dense univariate polynomials over the rationals.

Coefficients are stored in ascending degree as :class:`fractions.Fraction`;
the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return parse_rational(c)
    return Fraction(c)


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if not s:
        raise ValueError("empty rational")
    if "." in s or "e" in s.lower():
        raise ValueError(f"not an exact rational: {s!r}")
    return Fraction(s)


def fmt_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _strip(cs: list) -> tuple:
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


class QPoly:
    """Polynomial with rational coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs: tuple[Fraction, ...] = _strip([_frac(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple) -> QPoly:
        # trusted constructor: coeffs already Fractions and stripped
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def x(cls) -> QPoly:
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def constant(cls, c) -> QPoly:
        return cls([c])

    @classmethod
    def monomial(cls, c, k: int) -> QPoly:
        return cls([0] * k + [c])

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> QPoly:
        if not self.coeffs:
            return self
        c = self.coeffs[-1]
        if c == 1:
            return self
        return QPoly._raw(tuple(a / c for a in self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == QPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly([{', '.join(fmt_rational(c) for c in self.coeffs)}])"

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
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono and a == 1:
                body = mono
            elif mono:
                body = f"{fmt_rational(a)}*{mono}"
            else:
                body = fmt_rational(a)
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> QPoly:
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly([other])
        return NotImplemented

    def __add__(self, other) -> QPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for k, c in enumerate(b):
            res[k] += c
        return QPoly._raw(_strip(res))

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> QPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> QPoly:
        return (-self) + other

    def __mul__(self, other) -> QPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly._raw(())
        res = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                res[i + j] += ai * bj
        return QPoly._raw(_strip(res))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QPoly:
        if n < 0:
            raise ValueError("negative power")
        result = QPoly._raw((Fraction(1),))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other) -> tuple[QPoly, QPoly]:
        return qpoly_divmod(self, self._coerce(other))

    def __floordiv__(self, other) -> QPoly:
        return qpoly_divmod(self, self._coerce(other))[0]

    def __mod__(self, other) -> QPoly:
        return qpoly_divmod(self, self._coerce(other))[1]

    def scale(self, c) -> QPoly:
        c = _frac(c)
        if not c:
            return QPoly._raw(())
        return QPoly._raw(tuple(a * c for a in self.coeffs))

    def __call__(self, value):
        """Horner evaluation; ``value`` may be any ring element supporting + and *."""
        if not self.coeffs:
            return Fraction(0) if isinstance(value, (int, Fraction)) else value * 0
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * value + c
        return acc

    def compose(self, inner: QPoly) -> QPoly:
        acc = QPoly._raw(())
        for c in reversed(self.coeffs):
            acc = acc * inner + QPoly._raw((c,)) if c else acc * inner
        return acc

    def derivative(self) -> QPoly:
        return QPoly._raw(_strip([k * c for k, c in enumerate(self.coeffs)][1:]))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_strings(self) -> list[str]:
        return [fmt_rational(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Sequence) -> QPoly:
        return cls(parse_rational(s) if isinstance(s, str) else s for s in items)


def qpoly_divmod(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    """Euclidean division ``a = q*b + r`` with ``deg r < deg b``."""
    if not b.coeffs:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b.coeffs) - 1
    if len(a.coeffs) - 1 < db:
        return QPoly._raw(()), a
    rem = list(a.coeffs)
    inv_lc = 1 / b.coeffs[-1]
    q = [Fraction(0)] * (len(rem) - db)
    bc = b.coeffs
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        c *= inv_lc
        q[k - db] = c
        off = k - db
        for i in range(db + 1):
            rem[off + i] -= c * bc[i]
    return QPoly._raw(_strip(q)), QPoly._raw(_strip(rem[:db]))


def qpoly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd; raises if both inputs vanish."""
    if not a and not b:
        raise ValueError("gcd of two zero polynomials is undefined")
    while b:
        a, b = b, qpoly_divmod(a, b)[1]
    return a.monic()


def qpoly_xgcd(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly, QPoly]:
    """Return ``(g, s, t)`` with ``g = s*a + t*b`` and ``g`` monic."""
    if not a and not b:
        raise ValueError("gcd of two zero polynomials is undefined")
    r0, r1 = a, b
    s0, s1 = QPoly([1]), QPoly()
    t0, t1 = QPoly(), QPoly([1])
    while r1:
        q, r = qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c = r0.lc
    return r0.scale(1 / c), s0.scale(1 / c), t0.scale(1 / c)


def resultant(a: QPoly, b: QPoly) -> Fraction:
    """Resultant of ``a`` and ``b``, i.e. the Sylvester determinant.

    Computed with the Euclidean recurrence
    ``res(a, b) = (-1)^(deg a * deg b) * lc(b)^(deg a - deg r) * res(b, r)``
    where ``r = a mod b``.
    """
    if not a or not b:
        raise ValueError("resultant of a zero polynomial")
    acc = Fraction(1)
    while True:
        m, n = a.degree, b.degree
        if n == 0:
            return acc * b.lc ** m
        if m == 0:
            return acc * a.lc ** n
        r = qpoly_divmod(a, b)[1]
        if not r:
            return Fraction(0)
        if (m * n) % 2:
            acc = -acc
        acc *= b.lc ** (m - r.degree)
        a, b = b, r


def squarefree_decomposition(f: QPoly) -> list[tuple[QPoly, int]]:
    """Yun's algorithm: monic squarefree, pairwise coprime ``a_k`` with
    ``monic(f) = prod a_k^k``.  Only nonconstant parts are returned."""
    if not f:
        raise ValueError("squarefree decomposition of zero")
    f = f.monic()
    if f.degree < 1:
        return []
    out = []
    df = f.derivative()
    a = qpoly_gcd(f, df)
    b = f // a
    c = df // a
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        g = qpoly_gcd(b, d)
        if g.degree > 0:
            out.append((g, k))
        b = b // g
        c = d // g
        d = c - b.derivative()
        k += 1
    return out


def is_squarefree(f: QPoly) -> bool:
    return qpoly_gcd(f, f.derivative()).degree == 0


def interpolate(xs: Sequence, ys: Sequence) -> QPoly:
    """Newton interpolation through the points ``(xs[k], ys[k])``."""
    xs = [Fraction(v) for v in xs]
    coef = [Fraction(v) for v in ys]
    n = len(xs)
    for level in range(1, n):
        for k in range(n - 1, level - 1, -1):
            coef[k] = (coef[k] - coef[k - 1]) / (xs[k] - xs[k - level])
    poly = QPoly([coef[-1]])
    for k in range(n - 2, -1, -1):
        poly = poly * QPoly([-xs[k], 1]) + coef[k]
    return poly
