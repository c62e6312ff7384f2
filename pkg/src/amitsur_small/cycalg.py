"""Cyclic algebras D = (K/Q, sigma, beta) of odd prime degree p.

An element is stored as coordinates ``(c_0, ..., c_{p-1})`` in K meaning
``sum_k j^k * c_k``: powers of j on the left, field coefficients on the
right.  The defining relations ``j c j^-1 = sigma(c)`` and ``j^p = beta``
then give the rewriting rule ``c * j^b = j^b * sigma^-b(c)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .arith import FFPoly, QPoly, ff_is_irreducible, fmt_rational, is_prime
from .numfield import Automorphism, NFElement, NumberField, automorphism_order, field_norm


class NotInvertibleError(ArithmeticError):
    pass


class CyclicAlgebra:
    def __init__(self, field: NumberField, sigma: Automorphism, beta):
        p = field.degree
        if p < 3 or not is_prime(p):
            raise ValueError(f"degree {p} is not an odd prime")
        if sigma.field != field:
            raise ValueError("automorphism belongs to a different field")
        if automorphism_order(sigma) != p:
            raise ValueError("sigma does not generate a cyclic group of order p")
        beta = Fraction(beta)
        if not beta:
            raise ValueError("beta must be nonzero")
        self.p = p
        self.field = field
        self.sigma = sigma
        self.beta = beta
        pows = [None] * p
        cur = sigma ** 0
        for k in range(p):
            pows[k] = cur
            cur = sigma.compose(cur)
        self._sigma_pows = pows
        self.division: DivisionWitness | None = None

    def __repr__(self) -> str:
        return (f"CyclicAlgebra(p={self.p}, m={self.field.modulus.to_text('t')}, "
                f"sigma(t)={self.sigma.image}, beta={fmt_rational(self.beta)})")

    def __eq__(self, other) -> bool:
        return (isinstance(other, CyclicAlgebra) and self.field == other.field
                and self.sigma == other.sigma and self.beta == other.beta)

    def __hash__(self) -> int:
        return hash((self.field, self.sigma, self.beta))

    def twist(self, c: NFElement, k: int) -> NFElement:
        """``sigma^k(c)`` for any integer ``k``."""
        return self._sigma_pows[k % self.p](c)

    # -- constructors ------------------------------------------------------

    def element(self, coords: Sequence) -> AlgElement:
        if len(coords) != self.p:
            raise ValueError(f"expected {self.p} coordinates")
        return AlgElement(self, tuple(self.field(c) for c in coords))

    def zero(self) -> AlgElement:
        z = self.field.zero()
        return AlgElement(self, (z,) * self.p)

    def one(self) -> AlgElement:
        return self.scalar(1)

    def scalar(self, q) -> AlgElement:
        return self.from_field(self.field(Fraction(q)))

    def from_field(self, c: NFElement) -> AlgElement:
        z = self.field.zero()
        return AlgElement(self, (self.field(c),) + (z,) * (self.p - 1))

    def j_power(self, k: int, c=None) -> AlgElement:
        """``j^k * c``; ``k`` must lie in ``[0, p)``."""
        z = self.field.zero()
        coords = [z] * self.p
        coords[k] = self.field.one() if c is None else self.field(c)
        return AlgElement(self, tuple(coords))

    @property
    def i(self) -> AlgElement:
        return self.from_field(self.field.gen())

    @property
    def j(self) -> AlgElement:
        return self.j_power(1)

    def basis(self) -> list[AlgElement]:
        """Q-basis ``j^k t^l`` ordered by ``(k, l)``."""
        out = []
        for k in range(self.p):
            for l in range(self.p):
                e = [0] * self.p
                e[l] = 1
                out.append(self.j_power(k, self.field(e)))
        return out

    def from_vector(self, v: Sequence) -> AlgElement:
        p = self.p
        return AlgElement(self, tuple(self.field(v[k * p:(k + 1) * p]) for k in range(p)))

    def parse_element(self, data) -> AlgElement:
        if len(data) != self.p:
            raise ValueError(f"expected {self.p} coordinate arrays")
        coords = []
        for row in data:
            poly = QPoly.from_strings(row)
            if poly.degree >= self.p:
                raise ValueError("coordinate has degree >= p")
            coords.append(self.field(poly))
        return AlgElement(self, tuple(coords))

    @property
    def certified(self) -> bool:
        return self.division is not None

    def certify_division(self, preferred: int | None = None) -> DivisionWitness | None:
        w = find_division_witness(self, preferred)
        self.division = w
        return w


class AlgElement:
    __slots__ = ("alg", "coords")

    def __init__(self, alg: CyclicAlgebra, coords: tuple):
        self.alg = alg
        self.coords = coords

    def _lift(self, other) -> AlgElement:
        if isinstance(other, AlgElement):
            if other.alg is not self.alg and other.alg != self.alg:
                raise ValueError("elements of different algebras")
            return other
        if isinstance(other, (int, Fraction)):
            return self.alg.scalar(other)
        if isinstance(other, NFElement):
            return self.alg.from_field(other)
        return NotImplemented

    def __add__(self, other) -> AlgElement:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return AlgElement(self.alg, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> AlgElement:
        return AlgElement(self.alg, tuple(-a for a in self.coords))

    def __sub__(self, other) -> AlgElement:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return AlgElement(self.alg, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other) -> AlgElement:
        return (-self) + other

    def __mul__(self, other) -> AlgElement:
        if isinstance(other, (int, Fraction)):
            return AlgElement(self.alg, tuple(a * other for a in self.coords))
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return alg_mul(self, other)

    def __rmul__(self, other) -> AlgElement:
        if isinstance(other, (int, Fraction)):
            return self * other
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return alg_mul(other, self)

    def __pow__(self, e: int) -> AlgElement:
        if e < 0:
            return alg_inverse(self) ** (-e)
        result = self.alg.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __bool__(self) -> bool:
        return any(self.coords)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, NFElement)):
            other = self._lift(other)
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def is_central(self) -> bool:
        return self.coords[0].is_rational() and not any(self.coords[1:])

    def to_vector(self) -> list[Fraction]:
        return [x for c in self.coords for x in c.c]

    def to_strings(self) -> list[list[str]]:
        return [c.to_strings() for c in self.coords]

    def __repr__(self) -> str:
        return f"AlgElement({self})"

    def __str__(self) -> str:
        terms = []
        for k in range(self.alg.p - 1, -1, -1):
            c = self.coords[k]
            if not c:
                continue
            jk = "" if k == 0 else ("j" if k == 1 else f"j^{k}")
            ctext = str(c).replace("t", "i")
            if not jk:
                terms.append(ctext)
            elif c.is_rational():
                q = c.c[0]
                if q == 1:
                    terms.append(jk)
                elif q == -1:
                    terms.append(f"-{jk}")
                else:
                    terms.append(f"{fmt_rational(q)}*{jk}")
            elif " " in ctext or ctext.startswith("-"):
                terms.append(f"{jk}*({ctext})")
            else:
                terms.append(f"{jk}*{ctext}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def alg_mul(a: AlgElement, b: AlgElement) -> AlgElement:
    """Product using ``(j^r c)(j^s d) = j^(r+s) sigma^-s(c) d`` and ``j^p = beta``."""
    alg = a.alg
    if b.alg is not alg and b.alg != alg:
        raise ValueError("elements of different algebras")
    p = alg.p
    beta = alg.beta
    out = list(alg.zero().coords)
    for s, d in enumerate(b.coords):
        if not d:
            continue
        for r, c in enumerate(a.coords):
            if not c:
                continue
            term = alg.twist(c, -s) * d
            k = r + s
            if k >= p:
                k -= p
                term = term * beta
            out[k] = out[k] + term
    return AlgElement(alg, tuple(out))


def left_regular_matrix(a: AlgElement) -> list[list[NFElement]]:
    """Matrix of ``x -> a*x`` on D as a right K-space with basis ``j^0..j^(p-1)``."""
    alg = a.alg
    p = alg.p
    zero = alg.field.zero()
    mat = [[zero] * p for _ in range(p)]
    for k in range(p):
        for l, c in enumerate(a.coords):
            if not c:
                continue
            entry = alg.twist(c, -k)
            row = l + k
            if row >= p:
                row -= p
                entry = entry * alg.beta
            mat[row][k] = entry
    return mat


def reduced_norm(a: AlgElement) -> Fraction:
    d = linalg.det(left_regular_matrix(a), a.alg.field.one())
    if not d.is_rational():
        raise AssertionError(f"reduced norm {d} is not rational")
    return d.c[0]


def reduced_trace(a: AlgElement) -> Fraction:
    mat = left_regular_matrix(a)
    tr = a.alg.field.zero()
    for k in range(a.alg.p):
        tr = tr + mat[k][k]
    if not tr.is_rational():
        raise AssertionError(f"reduced trace {tr} is not rational")
    return tr.c[0]


def alg_inverse(a: AlgElement) -> AlgElement:
    alg = a.alg
    if not a:
        raise NotInvertibleError("not invertible: zero element")
    rhs = list(alg.one().coords)
    x = linalg.solve(left_regular_matrix(a), rhs, alg.field.one())
    if x is None:
        raise NotInvertibleError(f"not invertible: reduced norm of {a} vanishes")
    return AlgElement(alg, tuple(x))


def _column_matrix(vectors: list[list[Fraction]]) -> list[list[Fraction]]:
    return [list(row) for row in zip(*vectors)]


def min_poly(a: AlgElement) -> QPoly:
    """Monic minimal polynomial of ``a`` over Q (via Q-linear dependence of powers)."""
    alg = a.alg
    one = Fraction(1)
    powers = [alg.one().to_vector()]
    cur = alg.one()
    for k in range(1, alg.p * alg.p + 1):
        cur = cur * a
        powers.append(cur.to_vector())
        null = linalg.nullspace(_column_matrix(powers), k + 1, one)
        if null:
            v = null[0]
            return QPoly(x / v[k] for x in v)
    raise AssertionError("no polynomial relation found among p^2 + 1 powers")


def in_F_of_j(a: AlgElement) -> list[Fraction] | None:
    """Rational coordinates ``lam`` with ``a = sum lam_k j^k``, or None.

    The elements ``j^k t^l`` form a Q-basis, so ``a`` lies in Q[j] exactly
    when every coordinate ``c_k`` is a rational constant.
    """
    if all(c.is_rational() for c in a.coords):
        return [c.c[0] for c in a.coords]
    return None


def conjugating_element(a: AlgElement, r: AlgElement) -> AlgElement:
    """An invertible ``c`` with ``c*a = r*c``."""
    alg = a.alg
    if min_poly(a) != min_poly(r):
        raise ValueError("not conjugate: minimal polynomials differ")
    cols = [(e * a - r * e).to_vector() for e in alg.basis()]
    n = alg.p * alg.p
    null = linalg.nullspace(_column_matrix(cols), n, Fraction(1))
    candidates = [alg.from_vector(v) for v in null]
    if candidates:
        candidates.append(sum(candidates[1:], candidates[0]))
    for c in candidates:
        if reduced_norm(c):
            return c
    raise ValueError("not conjugate: no invertible solution of X*a = r*X")


@dataclass(frozen=True)
class ZeroDivisorWitness:
    u: AlgElement
    u_minus_1: AlgElement
    cofactor: AlgElement

    def verify(self) -> bool:
        p = self.u.alg.p
        return (self.u ** p == 1 and bool(self.u_minus_1) and bool(self.cofactor)
                and not (self.u_minus_1 * self.cofactor))


def zero_divisor_witness(alg: CyclicAlgebra, t: NFElement) -> ZeroDivisorWitness:
    """For ``N(t) = 1/beta`` the element ``u = t*j`` has ``u^p = 1``, so ``u - 1`` divides zero."""
    t = alg.field(t)
    if field_norm(alg.sigma, t) != 1 / alg.beta:
        raise ValueError("norm precondition fails: N(t) != 1/beta")
    u = alg.from_field(t) * alg.j
    if u ** alg.p != 1:
        raise AssertionError("u^p != 1 despite N(t) = 1/beta")
    left = u - 1
    right = alg.one()
    cur = alg.one()
    for _ in range(alg.p - 1):
        cur = cur * u
        right = right + cur
    if not left or not right:
        raise ValueError("witness degenerate: a factor vanishes")
    if left * right:
        raise AssertionError("(u - 1)(1 + u + ... + u^(p-1)) != 0")
    return ZeroDivisorWitness(u, left, right)


@dataclass(frozen=True)
class DivisionWitness:
    """``m`` is inert at ``prime_q`` and ``p`` does not divide ``v_q(beta)``,
    so ``beta`` is not a norm from K and the algebra is a division ring."""

    prime_q: int
    residual_factor: FFPoly
    beta_valuation: int

    def verify(self, alg: CyclicAlgebra) -> bool:
        w = division_witness(alg, self.prime_q)
        return w == self

    def to_json(self) -> dict:
        return {
            "prime_q": self.prime_q,
            "residual_factor": list(self.residual_factor.coeffs),
            "beta_valuation": self.beta_valuation,
        }


def valuation(q: Fraction, prime: int) -> int:
    q = Fraction(q)
    if not q:
        raise ValueError("valuation of zero")
    v = 0
    num, den = q.numerator, q.denominator
    while num % prime == 0:
        num //= prime
        v += 1
    while den % prime == 0:
        den //= prime
        v -= 1
    return v


def division_witness(alg: CyclicAlgebra, q: int) -> DivisionWitness | None:
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    m = alg.field.modulus
    if any(c.denominator % q == 0 for c in m.coeffs):
        return None
    mq = FFPoly.from_qpoly(m, q)
    if not ff_is_irreducible(mq):
        return None
    v = valuation(alg.beta, q)
    if v % alg.p == 0:
        return None
    return DivisionWitness(q, mq, v)


def _prime_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def find_division_witness(alg: CyclicAlgebra, preferred: int | None = None) -> DivisionWitness | None:
    """Try ``preferred`` first, then every prime dividing beta's numerator or denominator.

    Only those primes can give ``v_q(beta)`` prime to p.
    """
    cands = sorted(set(_prime_divisors(alg.beta.numerator) + _prime_divisors(alg.beta.denominator)))
    if preferred is not None:
        cands = [preferred] + [q for q in cands if q != preferred]
    for q in cands:
        w = division_witness(alg, q)
        if w is not None:
            return w
    return None
