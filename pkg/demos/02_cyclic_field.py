"""
A cyclic cubic field
====================

K = Q[t]/(t^3 + t^2 - 2t - 1) is the real subfield of the 7th cyclotomic
field.  Its Galois group is generated by t -> t^2 - 2.
"""

from amitsur_small.arith import QPoly
from amitsur_small.numfield import Automorphism, automorphism_order, field_norm, nf_inv, nf_new

K = nf_new(QPoly([-1, -2, 1, 1]))
t = K.gen()
sigma = Automorphism(K, t**2 - 2)

print("sigma(t)   =", sigma(t))
print("sigma^2(t) =", sigma(sigma(t)))
print("order of sigma:", automorphism_order(sigma))

# the three conjugates sum to minus the t^2 coefficient
print("trace of t:", t + sigma(t) + sigma(sigma(t)))

# norms are products of conjugates and land in Q
print("N(t) =", field_norm(sigma, t), "  t^-1 =", nf_inv(t))
a = 2 * t**2 - t + 3
print(f"N({a}) =", field_norm(sigma, a))
