"""Number fields K = Q[t]/(m) and automorphisms given by the image of t."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .arith import QPoly, fmt_rational, qpoly_xgcd, zassenhaus_factor


class NotAFieldError(ValueError):
    pass


class NumberField:
    """``Q[t]/(modulus)`` for a monic irreducible ``modulus``.

    Use :func:`nf_new` (or the constructor with ``check=True``) to verify
    irreducibility; ``check=False`` is reserved for callers that already hold
    a proof.
    """

    def __init__(self, modulus: QPoly, check: bool = True, name: str = "t"):
        if not modulus.is_monic():
            raise ValueError("modulus must be monic")
        if modulus.degree < 1:
            raise NotAFieldError("not a field: constant modulus")
        if check:
            facs = zassenhaus_factor(modulus)
            if len(facs) != 1 or facs[0][1] != 1:
                raise NotAFieldError(f"not a field: {modulus.to_text(name)} is reducible")
        self.modulus = modulus
        self.degree = modulus.degree
        self.name = name
        n = self.degree
        # rows: t^k mod m for k = n .. 2n-2, as length-n coefficient lists
        red = []
        tail = [-c for c in modulus.coeffs[:n]]
        cur = list(tail)
        for _ in range(n - 1):
            red.append(cur)
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if top:
                cur = [a + top * b for a, b in zip(cur, tail)]
        self._reduction = red

    def __repr__(self) -> str:
        return f"NumberField({self.modulus.to_text(self.name)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(self.modulus)

    def __call__(self, value) -> NFElement:
        if isinstance(value, NFElement):
            if value.field != self:
                raise ValueError("element of a different field")
            return value
        if isinstance(value, QPoly):
            return NFElement(self, self._reduce(list(value.coeffs)))
        if isinstance(value, (int, Fraction)):
            return NFElement(self, self._reduce([Fraction(value)]))
        return NFElement(self, self._reduce([Fraction(c) for c in value]))

    def gen(self) -> NFElement:
        return self(QPoly.x())

    def zero(self) -> NFElement:
        return NFElement(self, (Fraction(0),) * self.degree)

    def one(self) -> NFElement:
        return self(1)

    def _reduce(self, cs: list) -> tuple:
        n = self.degree
        if len(cs) <= n:
            return tuple(cs) + (Fraction(0),) * (n - len(cs))
        if len(cs) > 2 * n - 1:
            r = QPoly(cs) % self.modulus
            return self._reduce(list(r.coeffs))
        out = list(cs[:n])
        for k in range(n, len(cs)):
            c = cs[k]
            if c:
                row = self._reduction[k - n]
                for i in range(n):
                    out[i] += c * row[i]
        return tuple(out)


class NFElement:
    """Element of a :class:`NumberField`, stored as ``degree`` dense coefficients."""

    __slots__ = ("field", "c")

    def __init__(self, field: NumberField, c: tuple):
        self.field = field
        self.c = c

    @property
    def rep(self) -> QPoly:
        return QPoly(self.c)

    def _lift(self, other) -> NFElement:
        if isinstance(other, NFElement):
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other) -> NFElement:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return NFElement(self.field, tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self) -> NFElement:
        return NFElement(self.field, tuple(-a for a in self.c))

    def __sub__(self, other) -> NFElement:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return NFElement(self.field, tuple(a - b for a, b in zip(self.c, other.c)))

    def __rsub__(self, other) -> NFElement:
        return (-self) + other

    def __mul__(self, other) -> NFElement:
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, tuple(a * other for a in self.c))
        if not isinstance(other, NFElement):
            return NotImplemented
        a, b = self.c, other.c
        n = len(a)
        prod = [Fraction(0)] * (2 * n - 1)
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n):
                    bj = b[j]
                    if bj:
                        prod[i + j] += ai * bj
        return NFElement(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inverse(self) -> NFElement:
        return nf_inv(self)

    def __truediv__(self, other) -> NFElement:
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero in number field")
            return NFElement(self.field, tuple(a / other for a in self.c))
        return self * nf_inv(other)

    def __rtruediv__(self, other) -> NFElement:
        return nf_inv(self) * other

    def __pow__(self, e: int) -> NFElement:
        if e < 0:
            return nf_inv(self) ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __bool__(self) -> bool:
        return any(self.c)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.c[0] == other and not any(self.c[1:])
        if isinstance(other, NFElement):
            return self.c == other.c and self.field == other.field
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def to_strings(self) -> list[str]:
        return [fmt_rational(a) for a in self.c]

    def __repr__(self) -> str:
        return f"NFElement({self})"

    def __str__(self) -> str:
        return self.rep.to_text(self.field.name)


def nf_new(modulus: QPoly, name: str = "t") -> NumberField:
    """Build ``Q[t]/(modulus)``, refusing reducible moduli."""
    return NumberField(modulus, check=True, name=name)


def nf_inv(a: NFElement) -> NFElement:
    if not a:
        raise ZeroDivisionError("inverse of zero in number field")
    g, s, _ = qpoly_xgcd(a.rep, a.field.modulus)
    if g.degree != 0:
        raise NotAFieldError("element shares a factor with the modulus")
    return a.field(s)


class Automorphism:
    """Q-algebra endomorphism of K determined by the image of the generator."""

    def __init__(self, field: NumberField, image):
        self.field = field
        self.image = field(image)
        if field.modulus(self.image):
            raise ValueError("not an automorphism: image is not a root of the modulus")
        imgs = [field.one()]
        for _ in range(field.degree - 1):
            imgs.append(imgs[-1] * self.image)
        self._basis_images = imgs

    def __call__(self, a) -> NFElement:
        return apply_automorphism(self, a)

    def __eq__(self, other) -> bool:
        return isinstance(other, Automorphism) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"Automorphism(t -> {self.image})"

    def compose(self, other: Automorphism) -> Automorphism:
        """``self ∘ other``."""
        return Automorphism(self.field, self(other.image))

    def __pow__(self, k: int) -> Automorphism:
        if k < 0:
            k %= automorphism_order(self)
        result = identity(self.field)
        for _ in range(k):
            result = self.compose(result)
        return result

    def is_identity(self) -> bool:
        return self.image == self.field.gen()


def identity(field: NumberField) -> Automorphism:
    return Automorphism(field, field.gen())


def apply_automorphism(s: Automorphism, a) -> NFElement:
    field = s.field
    if isinstance(a, (int, Fraction)):
        return field(a)
    n = field.degree
    out = [Fraction(0)] * n
    for coeff, img in zip(a.c, s._basis_images):
        if coeff:
            for i in range(n):
                out[i] += coeff * img.c[i]
    return NFElement(field, tuple(out))


def automorphism_order(s: Automorphism) -> int:
    field = s.field
    t = field.gen()
    if field.modulus(s.image):
        raise ValueError("not an automorphism")
    cur = s.image
    for k in range(1, field.degree + 1):
        if cur == t:
            return k
        cur = s(cur)
    raise ValueError("not an automorphism: no iterate returns to the identity")


def field_norm(s: Automorphism, a: NFElement) -> Fraction:
    """Product of the Galois conjugates ``a * s(a) * ... * s^(p-1)(a)``."""
    p = s.field.degree
    acc = a
    cur = a
    for _ in range(p - 1):
        cur = s(cur)
        acc = acc * cur
    if not acc.is_rational():
        raise AssertionError(f"norm {acc} is not rational; reduction is broken")
    return acc.c[0]


def parse_element(field: NumberField, items: Sequence) -> NFElement:
    coeffs = QPoly.from_strings(items)
    if coeffs.degree >= field.degree:
        raise ValueError("element representative has degree >= field degree")
    return field(coeffs)
