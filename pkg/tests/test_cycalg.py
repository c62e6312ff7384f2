import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from amitsur_small.arith import FFPoly, QPoly
from amitsur_small.cycalg import (
    CyclicAlgebra,
    NotInvertibleError,
    alg_inverse,
    alg_mul,
    conjugating_element,
    division_witness,
    in_F_of_j,
    left_regular_matrix,
    min_poly,
    reduced_norm,
    reduced_trace,
    zero_divisor_witness,
)
from amitsur_small.numfield import Automorphism, field_norm, identity, nf_new
from amitsur_small.arith.ffpoly import ff_is_irreducible
from conftest import M3, make_algebra, rand_elem, rand_nonzero_elem

X = QPoly.x()


def sympy_det(alg, a):
    # expand each K-entry into its regular representation over Q and take
    # the Q-determinant; Nrd^p relation: det_Q = N_{K/Q}(det_K) = Nrd^p
    K = alg.field
    n = K.degree
    t = K.gen()
    big = []
    rows = left_regular_matrix(a)
    for r in range(alg.p):
        for s in range(n):
            line = []
            for c in range(alg.p):
                entry = rows[r][c]
                for b in range(n):
                    line.append(sympy.Rational(str((entry * t**b).c[s])))
            big.append(line)
    return Fraction(str(sympy.Matrix(big).det()))


# -- construction ---------------------------------------------------------------

def test_constructor_validation():
    K = nf_new(M3)
    with pytest.raises(ValueError):
        CyclicAlgebra(K, identity(K), 2)
    with pytest.raises(ValueError):
        CyclicAlgebra(K, Automorphism(K, K([-2, 0, 1])), 0)
    with pytest.raises(ValueError):
        CyclicAlgebra(nf_new(X**2 - 2), identity(nf_new(X**2 - 2)), 2)


# -- multiplication ---------------------------------------------------------

def test_mul_examples(fix3):
    i, j = fix3.i, fix3.j
    sigma_i = fix3.from_field(fix3.sigma(fix3.field.gen()))
    assert j * i == sigma_i * j
    # j*i = j^1 * t in the left-j convention: index 1 carries t
    assert (j * i).coords[1] == fix3.field.gen()
    assert j * j * j == 2
    a = rand_elem(fix3, random.Random(3))
    assert fix3.one() * a == a == alg_mul(a, fix3.one())


def test_j_conjugation_is_sigma(fix3):
    t = fix3.field.gen()
    c = t**2 + 3 * t - 1
    lhs = fix3.j * fix3.from_field(c) * alg_inverse(fix3.j)
    assert lhs == fix3.from_field(fix3.sigma(c))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9))
def test_associative_distributive(seed):
    alg = _ALG3
    rng = random.Random(seed)
    a, b, c = (rand_elem(alg, rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


_ALG3 = make_algebra(M3, 2)


# -- left-regular matrix, norm, trace ----------------------------------------

def test_left_regular_examples(fix3):
    K = fix3.field
    t = K.gen()
    mat = left_regular_matrix(fix3.from_field(t))
    assert mat[0][0] == t and mat[1][1] == fix3.twist(t, -1) and mat[2][2] == fix3.twist(t, -2)
    assert all(mat[r][c] == 0 for r in range(3) for c in range(3) if r != c)
    mj = left_regular_matrix(fix3.j)
    assert [[int(e.to_rational()) for e in row] for row in mj] == [[0, 0, 2], [1, 0, 0], [0, 1, 0]]
    one = left_regular_matrix(fix3.one())
    assert [[int(e.to_rational()) for e in row] for row in one] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_reduced_norm_examples(fix3, fix5):
    assert reduced_norm(fix3.j) == 2
    assert reduced_norm(fix5.j) == 2
    assert reduced_norm(fix3.scalar(Fraction(2, 3))) == Fraction(8, 27)
    assert reduced_norm(fix3.i) == 1 == field_norm(fix3.sigma, fix3.field.gen())


@pytest.mark.parametrize("seed", range(10))
def test_reduced_norm_against_rational_determinant(fix3, seed):
    a = rand_elem(fix3, random.Random(seed))
    assert sympy_det(fix3, a) == reduced_norm(a) ** 3


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9))
def test_nrd_multiplicative(seed):
    rng = random.Random(seed)
    a, b = rand_elem(_ALG3, rng), rand_elem(_ALG3, rng)
    assert reduced_norm(a * b) == reduced_norm(a) * reduced_norm(b)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_trace_additive(seed):
    rng = random.Random(seed)
    a, b = rand_elem(_ALG3, rng), rand_elem(_ALG3, rng)
    assert reduced_trace(a + b) == reduced_trace(a) + reduced_trace(b)
    assert reduced_trace(a * b) == reduced_trace(b * a)


# -- inverse ----------------------------------------------------------------

def test_inverse_examples(fix3):
    j = fix3.j
    assert alg_inverse(j) == Fraction(1, 2) * j * j
    assert alg_inverse(fix3.one()) == 1
    t = fix3.field.gen()
    assert alg_inverse(fix3.i) == fix3.from_field(t**2 + t - 2)


def test_inverse_of_zero_divisor(fix3s):
    with pytest.raises(NotInvertibleError, match="not invertible"):
        alg_inverse(fix3s.j - 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9))
def test_inverse_roundtrip(seed):
    alg = _ALG3
    a = rand_nonzero_elem(alg, random.Random(seed))
    b = alg_inverse(a)
    assert a * b == 1 and b * a == 1


# -- minimal polynomial, F[j], conjugation --------------------------------------

def test_min_poly_examples(fix3, fix5):
    assert min_poly(fix3.i) == M3
    assert min_poly(fix3.j) == X**3 - 2
    assert min_poly(fix5.j) == X**5 - 2
    assert min_poly(fix3.scalar(Fraction(-3, 4))) == X + Fraction(3, 4)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_min_poly_degree(seed):
    a = rand_elem(_ALG3, random.Random(seed))
    mp = min_poly(a)
    assert mp.degree in (1, 3)
    assert mp(a) == 0


def test_in_F_of_j(fix3):
    assert in_F_of_j(fix3.j**2) == [0, 0, 1]
    assert in_F_of_j(fix3.scalar(2)) == [2, 0, 0]
    assert in_F_of_j(fix3.i) is None


def test_i_not_in_F_of_j_by_rank(fix3):
    # 1, j, j^2, i are Q-independent in the 9-dimensional space
    vecs = [e.to_vector() for e in (fix3.one(), fix3.j, fix3.j**2, fix3.i)]
    assert sympy.Matrix([[sympy.Rational(str(c)) for c in v] for v in vecs]).rank() == 4


def test_conjugating_element(fix3):
    i, j = fix3.i, fix3.j
    jinv = alg_inverse(j)
    r = j * i * jinv
    assert j * i == r * j
    c = conjugating_element(i, r)
    assert c * i == r * c and reduced_norm(c) != 0
    c1 = conjugating_element(i, i)
    assert c1 * i == i * c1 and reduced_norm(c1) != 0
    r2 = j * j * i * jinv * jinv
    c2 = conjugating_element(i, r2)
    assert c2 * i == r2 * c2 and reduced_norm(c2) != 0
    with pytest.raises(ValueError, match="not conjugate"):
        conjugating_element(i, j)


# -- zero divisors and division certificates ----------------------------------

def test_zero_divisor_split_case(fix3s):
    w = zero_divisor_witness(fix3s, fix3s.field(1))
    assert w.u == fix3s.j
    assert w.u**3 == 1
    assert w.u_minus_1 == fix3s.j - 1
    assert w.cofactor == fix3s.j**2 + fix3s.j + 1
    assert w.u_minus_1 and w.cofactor and not w.u_minus_1 * w.cofactor
    assert w.verify()
    assert str(w.u_minus_1) == "j - 1" and str(w.cofactor) == "j^2 + j + 1"


def test_zero_divisor_precondition(fix3):
    with pytest.raises(ValueError, match="norm precondition"):
        zero_divisor_witness(fix3, fix3.field(1))


def test_zero_divisor_with_nontrivial_t():
    # beta = N(c)^-1 for c = t + 1 gives a split algebra with a nontrivial witness
    alg0 = make_algebra(M3, 1)
    c = alg0.field([1, 1])
    n = field_norm(alg0.sigma, c)
    alg = make_algebra(M3, 1 / n)
    w = zero_divisor_witness(alg, alg.field([1, 1]))
    assert w.verify()


def test_division_witness_examples(fix3, fix3s, fix5):
    w = division_witness(fix3, 2)
    assert w.residual_factor == FFPoly(2, [1, 0, 1, 1]) and w.beta_valuation == 1
    assert ff_is_irreducible(w.residual_factor)
    assert all(division_witness(fix3s, q) is None for q in (2, 3, 5, 7, 11, 13))
    w5 = division_witness(fix5, 2)
    assert w5.residual_factor == FFPoly(2, [1, 1, 1, 0, 1, 1]) and w5.beta_valuation == 1
    r = w5.residual_factor
    assert r.coeffs[0] == 1 and sum(r.coeffs) % 2 == 1  # no roots in F2
    assert (r % FFPoly(2, [1, 1, 1])).coeffs  # not divisible by the only irreducible quadratic
    with pytest.raises(ValueError):
        division_witness(fix3, 4)


def test_division_witness_rejects_split_prime(fix3):
    # m mod 7 has the root 2 (7 splits in the cubic field), so no witness there
    alg = make_algebra(M3, 7)
    assert division_witness(alg, 7) is None


def test_division_means_nonzero_invertible(fix3):
    rng = random.Random(11)
    for _ in range(30):
        a = rand_nonzero_elem(fix3, rng)
        assert reduced_norm(a) != 0


def test_element_serialization(fix3):
    rng = random.Random(5)
    for _ in range(20):
        a = rand_elem(fix3, rng)
        assert fix3.parse_element(a.to_strings()) == a
        assert fix3.from_vector(a.to_vector()) == a
