import math
import random
from fractions import Fraction
from pathlib import Path

import pytest

from amitsur_small.arith import QPoly
from amitsur_small.cycalg import CyclicAlgebra
from amitsur_small.numfield import Automorphism, nf_new

ROOT = Path(__file__).resolve().parent.parent
CONFIGS = ROOT / "configs"

M3 = QPoly([-1, -2, 1, 1])
M5 = QPoly([1, 3, -3, -4, 1, 1])


def make_algebra(modulus, beta):
    K = nf_new(modulus)
    sigma = Automorphism(K, K([-2, 0, 1]))
    return CyclicAlgebra(K, sigma, Fraction(beta))


@pytest.fixture(scope="session")
def fix3():
    alg = make_algebra(M3, 2)
    alg.certify_division(2)
    return alg


@pytest.fixture(scope="session")
def fix3s():
    return make_algebra(M3, 1)


@pytest.fixture(scope="session")
def fix5():
    alg = make_algebra(M5, 2)
    alg.certify_division(2)
    return alg


SMALL = [Fraction(v) for v in (-2, -1, 0, 1, 2, 3)] + [Fraction(1, 2), Fraction(-2, 3)]


def rand_rational(rng: random.Random) -> Fraction:
    return rng.choice(SMALL)


def rand_field(K, rng):
    return K([rand_rational(rng) for _ in range(K.degree)])


def rand_elem(alg, rng, density=0.6):
    p = alg.p
    coords = [[rand_rational(rng) if rng.random() < density else 0 for _ in range(p)] for _ in range(p)]
    return alg.element([alg.field(c) for c in coords])


def rand_nonzero_elem(alg, rng):
    while True:
        a = rand_elem(alg, rng)
        if a:
            return a


def rand_spoly(alg, rng, max_deg=3):
    from amitsur_small.skewpoly import SkewPoly

    d = rng.randint(0, max_deg)
    return SkewPoly(alg, [rand_elem(alg, rng, 0.3) for _ in range(d + 1)])


def rand_bipoly(alg, rng, max_y=2, max_x=2):
    from amitsur_small.skewpoly import BiPoly, SkewPoly

    return BiPoly(alg, [SkewPoly(alg, [rand_elem(alg, rng, 0.25) for _ in range(rng.randint(0, max_x) + 1)])
                        for _ in range(rng.randint(0, max_y) + 1)])


# -- factorization oracles --------------------------------------------------

X = QPoly.x()

IRREDUCIBLES = [X - 1, X + 2, X**2 + 1, X**2 - 2, X**2 + X + 1, X**3 - 2, X**3 + X + 1,
                X**4 + 1, X**4 - 10 * X**2 + 1, QPoly([-1, -2, 1, 1]), X**5 - X - 1,
                QPoly([1, 3, -3, -4, 1, 1]), X**6 + X**3 + 1, 2 * X + 3, X**2 - 3 * X - 5]


def random_product(rng, max_total=25):
    factors, total = [], 0
    while True:
        g = rng.choice(IRREDUCIBLES)
        if total + g.degree > max_total or (factors and rng.random() < 0.25):
            break
        factors.append(g)
        total += g.degree
    if not factors:
        factors = [X - 1]
    prod = QPoly([rng.choice([1, -1, 2, Fraction(3, 5)])])
    for g in factors:
        prod = prod * g
    return prod, factors


def zsqrt2_roots(f):
    """All roots u + v*sqrt2 (u, v integers) of a monic f with coefficients in Z[sqrt2]."""
    def emb(c, sign):
        return float(c.c[0]) + sign * math.sqrt(2) * float(c.c[1])
    bound = 1 + max(abs(emb(c, sg)) for c in f.coeffs[:-1] for sg in (1, -1))
    U = int(bound) + 1
    V = int(bound / math.sqrt(2)) + 1
    K = f.field
    return [K([u, v]) for u in range(-U, U + 1) for v in range(-V, V + 1) if not f(K([u, v]))]
