"""
Polynomials over a division algebra
===================================

In D[x] division works on one side only.  Here quotients sit on the left,
so ideals are left ideals D[x] g.  The minimal polynomial f of i has i as a
right root.  The commutator g*j - j*g measures how far D[x] g is from being
closed under right multiplication by j.
"""

from fractions import Fraction

from amitsur_small.arith import QPoly
from amitsur_small.cycalg import CyclicAlgebra
from amitsur_small.numfield import Automorphism, nf_new
from amitsur_small.skewpoly import (
    BiPoly,
    SkewPoly,
    bipoly_reduce_y,
    j_commutator,
    left_ideal_gcd,
    spoly_divmod,
    y_minus_j,
)

K = nf_new(QPoly([-1, -2, 1, 1]))
D = CyclicAlgebra(K, Automorphism(K, K([-2, 0, 1])), Fraction(2))
i, j = D.i, D.j
x = SkewPoly.x(D)
f = SkewPoly.from_rational(D, K.modulus)

h, r = spoly_divmod(f, x - i)
print("f          =", f)
print("f / (x-i)  =", h, "  remainder", r)

cert = left_ideal_gcd(f, x - j)
print("gcd(f, x - j) =", cert.g, "  Bezout ok:", cert.verify())

print("[x - i, j] =", j_commutator(x - i, j))

# reducing modulo (y - j) sends y to j on the right
xb = BiPoly.from_skew(x)
P = y_minus_j(D) * (xb - BiPoly(D, [i]))
print("(y - j)(x - i) mod (y - j) on the left:", bipoly_reduce_y(P))
