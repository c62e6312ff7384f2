import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from amitsur_small.arith import (
    FFPoly,
    QPoly,
    fmt_rational,
    hensel_lift,
    interpolate,
    irreducibility_record,
    is_irreducible,
    modp_factor,
    parse_rational,
    qpoly_divmod,
    qpoly_gcd,
    qpoly_xgcd,
    resultant,
    squarefree_decomposition,
    zassenhaus_factor,
)
from amitsur_small.arith.ffpoly import ff_is_irreducible, is_prime
from conftest import random_product

X = QPoly.x()
xs = sympy.Symbol("x")


def to_sympy(f: QPoly):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)] or [0], xs)


def sylvester_det(a: QPoly, b: QPoly) -> Fraction:
    m, n = a.degree, b.degree
    size = m + n
    rows = []
    for k in range(n):
        rows.append([0] * k + list(reversed(a.coeffs)) + [0] * (size - m - 1 - k))
    for k in range(m):
        rows.append([0] * k + list(reversed(b.coeffs)) + [0] * (size - n - 1 - k))
    d = sympy.Matrix(rows).det()
    return Fraction(int(sympy.numer(d)), int(sympy.denom(d)))


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
qpolys = st.lists(rationals, min_size=0, max_size=6).map(QPoly)
nonzero_qpolys = qpolys.filter(bool)


# -- rationals and serialization ------------------------------------------

def test_rational_normal_form():
    q = parse_rational("-6/4")
    assert q == Fraction(-3, 2) and q.denominator > 0
    assert fmt_rational(Fraction(0)) == "0"
    assert fmt_rational(Fraction(-3, 2)) == "-3/2"
    with pytest.raises(ValueError):
        parse_rational("1.5")


@given(qpolys)
def test_qpoly_strings_roundtrip(f):
    assert QPoly.from_strings(f.to_strings()) == f
    assert not f.coeffs or f.coeffs[-1] != 0


def test_zero_polynomial_is_empty():
    assert QPoly([0, 0]).coeffs == ()
    assert QPoly([]).degree == -1


# -- division, gcd, resultant -------------------------------------------------

@pytest.mark.parametrize("a, b, q, r", [
    (X**2 - 1, X - 1, X + 1, QPoly()),
    (X**3, X, X**2, QPoly()),
    (X**2 + 1, X - 1, X + 1, QPoly([2])),
])
def test_divmod_examples(a, b, q, r):
    assert qpoly_divmod(a, b) == (q, r)


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        qpoly_divmod(X, QPoly())


@given(qpolys, nonzero_qpolys)
def test_divmod_identity(a, b):
    q, r = qpoly_divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_gcd_examples():
    assert qpoly_gcd(X**2 - 1, X - 1) == X - 1
    assert qpoly_gcd(X**2 + 1, X**2 + 2) == QPoly([1])
    assert resultant(X**2 + 1, X**2 + 2) != 0
    f = 3 * X**2 + 6
    assert qpoly_gcd(f, QPoly()) == f.monic()
    with pytest.raises(ValueError):
        qpoly_gcd(QPoly(), QPoly())


@given(nonzero_qpolys, nonzero_qpolys)
def test_xgcd_bezout(a, b):
    g, s, t = qpoly_xgcd(a, b)
    assert s * a + t * b == g
    assert qpoly_divmod(a, g)[1] == QPoly() and qpoly_divmod(b, g)[1] == QPoly()


def test_resultant_examples():
    assert resultant(X - 1, X - 2) == -1 == sylvester_det(X - 1, X - 2)
    assert resultant(X**2 - 2, X**2 - 3) == 1 == sylvester_det(X**2 - 2, X**2 - 3)
    assert resultant(X**3 + X + 5, QPoly([1])) == 1
    with pytest.raises(ValueError):
        resultant(QPoly(), X)


@settings(max_examples=200, deadline=None)
@given(nonzero_qpolys, nonzero_qpolys)
def test_resultant_matches_sylvester_and_gcd(a, b):
    if a.degree < 1 or b.degree < 1:
        return
    r = resultant(a, b)
    assert r == sylvester_det(a, b)
    assert (r == 0) == (qpoly_gcd(a, b).degree > 0)


def test_squarefree_decomposition():
    f = (X - 1) * (X + 2) ** 2 * (X**2 + 1) ** 3
    parts = squarefree_decomposition(f)
    assert parts == [(X - 1, 1), (X + 2, 2), (X**2 + 1, 3)]


def test_interpolate():
    f = QPoly([Fraction(1, 2), -3, 0, 2])
    pts = list(range(4))
    assert interpolate(pts, [f(Fraction(x)) for x in pts]) == f


# -- finite fields ------------------------------------------------------------

def test_modp_factor_examples():
    f = FFPoly(5, [1, 0, 1])
    assert modp_factor(f) == [(FFPoly(5, [2, 1]), 1), (FFPoly(5, [3, 1]), 1)]
    assert [a for a in range(5) if (a * a + 1) % 5 == 0] == [2, 3]
    g = FFPoly(2, [1, 0, 1, 1])
    assert modp_factor(g) == [(g, 1)]
    assert all((a**3 + a**2 + 1) % 2 for a in range(2))
    assert modp_factor(FFPoly(3, [0, 0, 1])) == [(FFPoly(3, [0, 1]), 2)]
    with pytest.raises(ValueError):
        modp_factor(FFPoly(3, []))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5, 7, 11]), st.lists(st.integers(0, 10), min_size=2, max_size=9), st.integers(0, 10**6))
def test_modp_factor_product_and_irreducibility(q, cs, seed):
    f = FFPoly(q, cs)
    if f.degree < 1:
        return
    facs = modp_factor(f, random.Random(seed))
    prod = FFPoly(q, [f.lc])
    for g, k in facs:
        assert g.lc == 1 and ff_is_irreducible(g)
        for _ in range(k):
            prod = prod * g
    assert prod == f
    oracle = sympy.Poly(list(reversed(f.coeffs)), xs, modulus=q).factor_list()[1]
    assert sorted((g.degree(), k) for g, k in oracle) == sorted((g.degree, k) for g, k in facs)


# -- Hensel lifting -----------------------------------------------------------

def _mod_poly(f: QPoly, m: int) -> list:
    cs = [int(c) % m for c in f.coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def test_hensel_exact_factorization():
    g, h = hensel_lift(X**2 - 1, FFPoly(3, [-1, 1]), FFPoly(3, [1, 1]), 3, 2)
    assert _mod_poly(g, 9) == [8, 1] and _mod_poly(h, 9) == [1, 1]


def test_hensel_non_coprime_seed():
    # x^2 + x + 7 = (x + 2)^2 mod 3, so the only seed pair repeats a factor
    f = X**2 + X + 7
    seed = FFPoly(3, [2, 1])
    assert seed * seed == FFPoly(3, [7, 1, 1])
    with pytest.raises(ValueError):
        hensel_lift(f, seed, seed, 3, 2)


def test_hensel_lift_product_mod_square():
    f = X**2 + X + 7
    g0, h0 = FFPoly(7, [0, 1]), FFPoly(7, [1, 1])
    assert g0 * h0 == FFPoly(7, [7, 1, 1])
    g, h = hensel_lift(f, g0, h0, 7, 2)
    assert _mod_poly(g * h - f, 49) == []
    assert FFPoly(7, _mod_poly(g, 49)) == g0 and FFPoly(7, _mod_poly(h, 49)) == h0


def test_hensel_equal_seeds_error():
    g0 = FFPoly(5, [1, 1])
    with pytest.raises(ValueError):
        hensel_lift(X**2 + 2 * X + 1, g0, g0, 5, 3)


# -- Zassenhaus ---------------------------------------------------------------

def test_zassenhaus_examples():
    assert zassenhaus_factor(X**2 - 1) == [(X - 1, 1), (X + 1, 1)]
    m = QPoly([-1, -2, 1, 1])
    assert is_irreducible(m)
    assert all(m(Fraction(r)) != 0 for r in (1, -1))
    assert is_irreducible(X**4 + 1)
    with pytest.raises(ValueError):
        zassenhaus_factor(QPoly())


def test_x4_plus_1_reducible_mod_every_small_prime():
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23):
        facs = modp_factor(FFPoly(q, [1, 0, 0, 0, 1]))
        assert len(facs) > 1 or facs[0][1] > 1
    rec = irreducibility_record(X**4 + 1)
    assert rec["irreducible"] and rec["modular_degrees"] is not None


def test_zassenhaus_non_monic_and_rational():
    f = Fraction(3, 2) * (2 * X - 1) * (X**2 + 3) ** 2
    facs = zassenhaus_factor(f)
    assert facs == [(X - Fraction(1, 2), 1), (X**2 + 3, 2)]


def check_factorization(f, facs):
    prod = QPoly([f.lc])
    for g, k in facs:
        assert g.lc == 1 and is_irreducible(g)
        prod = prod * g**k
    return prod == f


@pytest.mark.parametrize("seed", range(20))
def test_zassenhaus_random_products_quick(seed):
    rng = random.Random(seed)
    f, parts = random_product(rng, 12)
    facs = zassenhaus_factor(f)
    assert check_factorization(f, facs)
    assert sum(k for _, k in facs) == len(parts)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=2, max_size=7))
def test_zassenhaus_against_sympy(cs):
    f = QPoly(cs)
    if f.degree < 1:
        return
    facs = zassenhaus_factor(f)
    oracle = sympy.factor_list(to_sympy(f).as_expr())[1]
    assert sorted((g.degree, k) for g, k in facs) == sorted((sympy.degree(g, xs), k) for g, k in oracle)
    assert check_factorization(f, facs)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2**61 - 1) and not is_prime(2**61 + 1)
