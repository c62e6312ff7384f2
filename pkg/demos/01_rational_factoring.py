"""
Factoring over the rationals
============================

Exact polynomials, resultants, and the modular route to factorization:
factor mod a prime, lift the factors p-adically, recombine.
"""

from amitsur_small.arith import FFPoly, QPoly, modp_factor, resultant, zassenhaus_factor
from amitsur_small.arith.zassenhaus import irreducibility_record

x = QPoly.x()

# resultants vanish exactly when two polynomials share a root
print("Res(x^2 - 2, x^2 - 3) =", resultant(x**2 - 2, x**2 - 3))
print("Res(x^2 - 1, x - 1)   =", resultant(x**2 - 1, x - 1))

# x^4 + 1 splits modulo every prime ...
for q in (2, 3, 5, 7):
    facs = modp_factor(FFPoly(q, [1, 0, 0, 0, 1]))
    parts = [QPoly(g.coeffs).to_text() for g, _ in facs]
    print(f"x^4 + 1 mod {q}:", " * ".join(f"({t})^{k}" if k > 1 else f"({t})" for t, (_, k) in zip(parts, facs)))

# ... yet no recombination of modular factors survives over Q
print("over Q:", [(g.to_text(), k) for g, k in zassenhaus_factor(x**4 + 1)])
rec = irreducibility_record(x**4 + 1)
print("lifted at p =", rec["prime"], "with modular degrees", rec["modular_degrees"])

# a messier product comes apart cleanly, multiplicities included
f = 3 * (x**2 + 1) ** 2 * (x**3 - 2) * (2 * x - 5)
for g, k in zassenhaus_factor(f):
    print(f"  ({g.to_text()})^{k}")
