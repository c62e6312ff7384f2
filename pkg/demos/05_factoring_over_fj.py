"""
Factoring over Q(2^(1/p))
=========================

Trager's norm method: shift until the norm to Q is squarefree, factor the
norm, pull factors back with gcds.  The minimal polynomial of i stays
irreducible over Q[j], so Q[j] and K are linearly disjoint.
"""

import time

from amitsur_small.arith import QPoly
from amitsur_small.factor import trager_factor

x = QPoly.x()

fac = trager_factor(x**3 - 2, x**3 - 2)
print("x^3 - 2 over Q(s), s^3 = 2:", " * ".join(f"({g})" for g, _ in fac.factors))

for p, m in [(3, QPoly([-1, -2, 1, 1])), (5, QPoly([1, 3, -3, -4, 1, 1]))]:
    t0 = time.perf_counter()
    fac = trager_factor(m, x**p - 2)
    N = fac.norms[0]
    print(f"p = {p}: norm of degree {N.degree} (shift {fac.shift_used}), "
          f"irreducible over Q(s): {fac.irreducible}  [{time.perf_counter() - t0:.2f}s]")
