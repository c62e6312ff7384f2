"""
A cyclic division algebra of degree 3
=====================================

D = K + Kj + Kj^2 with j c j^-1 = sigma(c) and j^3 = 2.  The prime 2 stays
inert in K while 2 has valuation 1, so 2 is not a norm from K and D has no
zero divisors.  With j^3 = 1 instead, the algebra splits and j - 1 is a zero
divisor.
"""

from fractions import Fraction

from amitsur_small.arith import QPoly
from amitsur_small.cycalg import CyclicAlgebra, alg_inverse, min_poly, reduced_norm, zero_divisor_witness
from amitsur_small.numfield import Automorphism, nf_new

K = nf_new(QPoly([-1, -2, 1, 1]))
sigma = Automorphism(K, K([-2, 0, 1]))
D = CyclicAlgebra(K, sigma, Fraction(2))
i, j = D.i, D.j

# elements are written with powers of j on the left: i*j = j*sigma^-1(i)
print("i*j =", i * j)
print("j*i - sigma(i)*j =", j * i - D.from_field(sigma(K.gen())) * j)
print("j^3 =", j**3)

w = D.certify_division()
print(f"division certified at q = {w.prime_q}: m mod {w.prime_q} = {w.residual_factor}, "
      f"v(beta) = {w.beta_valuation}")

a = 1 + i * j + j**2
print("a =", a)
print("Nrd(a) =", reduced_norm(a))
print("a * a^-1 =", a * alg_inverse(a))
print("min poly of a:", min_poly(a).to_text())

split = CyclicAlgebra(K, sigma, Fraction(1))
print("split algebra certified?", split.certify_division() is not None)
z = zero_divisor_witness(split, K(1))
print(f"({z.u_minus_1}) * ({z.cofactor}) =", z.u_minus_1 * z.cofactor)
