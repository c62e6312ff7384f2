"""Factorization over Q: squarefree split, modular factoring, Hensel lifting
and brute-force subset recombination (Zassenhaus)."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations

from .ffpoly import FFPoly, ff_xgcd, modp_factor, primes_from
from .qpoly import QPoly, squarefree_decomposition

# number of good primes whose modular factorizations are compared
PRIME_TRIALS = 8


# -- integer polynomials mod m (lists of ints, ascending) --------------------

def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _mod(a, m: int) -> list:
    return _trim([c % m for c in a])


def _sym(a, m: int) -> list:
    h = m // 2
    return _trim([(c % m) - m if (c % m) > h else c % m for c in a])


def _add(a, b, m: int) -> list:
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for k, c in enumerate(b):
        res[k] += c
    return _mod(res, m)


def _sub(a, b, m: int) -> list:
    return _add(a, [-c for c in b], m)


def _mul(a, b, m: int) -> list:
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] += ai * bj
    return _mod(res, m)


def _divmod_monic(a, b, m: int) -> tuple[list, list]:
    # b monic
    db = len(b) - 1
    rem = [c % m for c in a]
    if len(rem) - 1 < db:
        return [], _trim(rem)
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] % m
        if not c:
            continue
        quot[k - db] = c
        for i in range(db + 1):
            rem[k - db + i] -= c * b[i]
    return _mod(quot, m), _mod(rem[:db], m)


def _int_coeffs(f: QPoly) -> list:
    if not f.is_integral():
        raise ValueError("expected integer coefficients")
    return [int(c) for c in f.coeffs]


def primitive_part(f: QPoly) -> tuple[Fraction, list]:
    """Return ``(content, F)`` with ``f = content * F``, ``F`` primitive in Z[x], lc(F) > 0."""
    den = reduce(math.lcm, (c.denominator for c in f.coeffs), 1)
    ints = [int(c * den) for c in f.coeffs]
    g = reduce(math.gcd, ints, 0)
    if ints[-1] < 0:
        g = -g
    return Fraction(g, den), [c // g for c in ints]


# -- Hensel lifting -----------------------------------------------------------

def _hensel_step(f, g, h, s, t, m):
    """One quadratic step mod m -> m^2 (h monic, s*g + t*h = 1 mod m)."""
    m2 = m * m
    e = _sub(f, _mul(g, h, m2), m2)
    q, r = _divmod_monic(_mul(s, e, m2), h, m2)
    g1 = _add(_add(g, _mul(t, e, m2), m2), _mul(q, g, m2), m2)
    h1 = _add(h, r, m2)
    b = _sub(_add(_mul(s, g1, m2), _mul(t, h1, m2), m2), [1], m2)
    c, d = _divmod_monic(_mul(s, b, m2), h1, m2)
    s1 = _sub(s, d, m2)
    t1 = _sub(_sub(t, _mul(t, b, m2), m2), _mul(c, g1, m2), m2)
    return g1, h1, s1, t1


def _lift_pair(f: list, g0: list, h0: list, prime: int, k: int) -> tuple[list, list]:
    # h0 monic mod prime; returns (g, h) mod prime**k with h monic
    gp = FFPoly(prime, g0)
    hp = FFPoly(prime, h0)
    one, s, t = ff_xgcd(gp, hp)
    if one.degree != 0:
        raise ValueError("seed factors are not coprime mod p")
    g, h = list(gp.coeffs), list(hp.coeffs)
    s, t = list(s.coeffs), list(t.coeffs)
    target = prime**k
    m = prime
    while m < target:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m *= m
    return _mod(g, target), _mod(h, target)


def hensel_lift(f: QPoly, g0: FFPoly, h0: FFPoly, prime: int, target_exponent: int) -> tuple[QPoly, QPoly]:
    """Lift ``f = g0*h0 (mod prime)`` to a factorization mod ``prime**target_exponent``.

    The returned ``g, h`` have coefficients in ``[0, prime**target_exponent)``
    and reduce to ``g0, h0`` mod ``prime``.
    """
    fi = _int_coeffs(f)
    if not fi or fi[-1] % prime == 0:
        raise ValueError("leading coefficient must be a unit mod p")
    if g0.q != prime or h0.q != prime:
        raise ValueError("seed factors live over the wrong prime field")
    if FFPoly(prime, fi) != g0 * h0:
        raise ValueError("seed factors do not multiply to f mod p")
    if g0.degree + h0.degree != len(fi) - 1:
        raise ValueError("seed degrees do not add up to deg f")
    if h0.degree < 1:
        # nothing to lift on the h side
        target = prime**target_exponent
        inv = pow(h0.lc, -1, target)
        g = _mod([c * inv for c in fi], target)
        return QPoly(g), QPoly([h0.lc])
    lc_h = h0.lc
    g_seed = g0 * lc_h
    h_seed = h0.monic()
    g, h = _lift_pair(fi, list(g_seed.coeffs), list(h_seed.coeffs), prime, target_exponent)
    target = prime**target_exponent
    inv = pow(lc_h, -1, target)
    g = _mod([c * inv for c in g], target)
    h = _mod([c * lc_h for c in h], target)
    return QPoly(g), QPoly(h)


def _multi_lift(F: list, factors: list[FFPoly], prime: int, k: int) -> list[list]:
    """Lift monic modular factors of F (F = lc * prod) to monic factors mod prime**k."""
    target = prime**k
    lifted = []
    current = F
    rest = list(factors)
    while len(rest) > 1:
        phi = rest.pop(0)
        others = reduce(lambda a, b: a * b, rest) * (current[-1] % prime)
        g, h = _lift_pair(current, list(others.coeffs), list(phi.coeffs), prime, k)
        lifted.append(h)
        current = _sym(g, target)
    inv = pow(current[-1], -1, target)
    lifted.append(_mod([c * inv for c in current], target))
    return lifted


# -- Zassenhaus ---------------------------------------------------------------

def mignotte_bound(F: list) -> int:
    """Bound on coefficients of ``lc(F) * g`` for any factor ``g`` of ``F``."""
    n = len(F) - 1
    norm2 = math.isqrt(sum(c * c for c in F)) + 1
    return (math.isqrt(n + 1) + 1) * 2**n * norm2 * abs(F[-1])


@dataclass(frozen=True)
class ModularData:
    prime: int
    factor_degrees: tuple[int, ...]
    exponent: int


def _good_prime_factorizations(F: list, rng: random.Random, trials: int):
    lc = F[-1]
    n = len(F) - 1
    found = []
    for q in primes_from(2):
        if lc % q == 0:
            continue
        fq = FFPoly(q, F)
        if fq.degree != n:
            continue
        facs = modp_factor(fq, rng)
        if any(mult > 1 for _, mult in facs):
            continue  # q divides the discriminant
        found.append((q, [fac for fac, _ in facs]))
        if len(found) >= trials:
            break
    return found


def _subset_sums(degrees) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _trial_divide(F: list, G: list) -> list | None:
    """Exact division F / G in Z[x], or None."""
    if len(G) > len(F):
        return None
    if G[0] and F[0] % G[0]:
        return None
    rem = list(F)
    dg = len(G) - 1
    quot = [0] * (len(F) - dg)
    for k in range(len(F) - 1, dg - 1, -1):
        c = rem[k]
        if not c:
            continue
        if c % G[-1]:
            return None
        c //= G[-1]
        quot[k - dg] = c
        for i in range(dg + 1):
            rem[k - dg + i] -= c * G[i]
    if any(rem[:dg]):
        return None
    return _trim(quot)


def _primitive_int(a: list) -> list:
    g = reduce(math.gcd, a, 0)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def factor_squarefree_int(F: list, rng: random.Random | None = None,
                          trials: int = PRIME_TRIALS) -> tuple[list[list], ModularData | None]:
    """Irreducible factors in Z[x] of a primitive squarefree ``F`` with lc > 0."""
    n = len(F) - 1
    if n <= 1:
        return [F], None
    if rng is None:
        rng = random.Random(0)
    cands = _good_prime_factorizations(F, rng, trials)
    allowed = set(range(n + 1))
    for _, facs in cands:
        allowed &= _subset_sums(fac.degree for fac in facs)
    # fewest modular factors wins; ties go to the smaller prime
    prime, facs = min(cands, key=lambda c: (len(c[1]), c[0]))
    bound = mignotte_bound(F)
    k = 1
    while prime**k <= 2 * bound:
        k += 1
    info = ModularData(prime, tuple(f.degree for f in facs), k)
    if len(facs) == 1 or not (allowed - {0, n}):
        return [F], info
    target = prime**k
    lifted = _multi_lift(F, facs, prime, k)
    result = []
    remaining = list(range(len(lifted)))
    current = F
    size = 1
    while 2 * size <= len(remaining):
        hit = None
        for subset in combinations(remaining, size):
            deg = sum(len(lifted[i]) - 1 for i in subset)
            if deg not in allowed:
                continue
            b = current[-1]
            g = [b]
            for i in subset:
                g = _mul(g, lifted[i], target)
            g = _primitive_int(_sym(g, target))
            quot = _trial_divide(current, g)
            if quot is not None:
                hit = subset, g, quot
                break
        if hit is None:
            size += 1
            continue
        subset, g, quot = hit
        result.append(g)
        remaining = [i for i in remaining if i not in subset]
        current = _primitive_int(quot)
    result.append(current)
    return result, info


def zassenhaus_factor(f: QPoly, rng: random.Random | None = None) -> list[tuple[QPoly, int]]:
    """Monic irreducible factors of ``f`` over Q with multiplicities.

    ``f == lc(f) * prod(g**k)``.  Output is sorted by degree, then coefficients.
    """
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    out = []
    for part, mult in squarefree_decomposition(f):
        _, F = primitive_part(part)
        facs, _ = factor_squarefree_int(F, rng)
        for g in facs:
            out.append((QPoly(g).monic(), mult))
    out.sort(key=lambda gm: (gm[0].degree, gm[0].coeffs, gm[1]))
    return out


def is_irreducible(f: QPoly) -> bool:
    if f.degree < 1:
        return False
    facs = zassenhaus_factor(f)
    return len(facs) == 1 and facs[0][1] == 1


def irreducibility_record(f: QPoly) -> dict:
    """Factorization of a nonconstant polynomial together with the modular
    data that drove it, for embedding in certificates."""
    facs = zassenhaus_factor(f)
    info = None
    if len(facs) == 1 and facs[0][1] == 1 and f.degree > 1:
        _, F = primitive_part(f)
        _, info = factor_squarefree_int(F)
    return {
        "poly": f.to_strings(),
        "factors": [[g.to_strings(), k] for g, k in facs],
        "irreducible": len(facs) == 1 and facs[0][1] == 1,
        "prime": info.prime if info else None,
        "modular_degrees": list(info.factor_degrees) if info else None,
    }
