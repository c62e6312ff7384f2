"""
A maximal ideal with a non-maximal contraction
==============================================

I = <f, y - j> in D[x, y].  Its contraction to D[x] is D[x] f, which sits
strictly inside D[x](x - i).  I itself is maximal: every enlargement
I + D[x, y]u collapses to the whole ring.  Each probe below carries a chain
of Bezout certificates proving it.
"""

import random
from fractions import Fraction

from amitsur_small.amitsur import (
    build_witness,
    contraction_certificate,
    full_report,
    lemma_maximality,
    probe_maximality,
    random_probe,
    verify_trace,
)
from amitsur_small.arith import QPoly
from amitsur_small.cycalg import CyclicAlgebra
from amitsur_small.numfield import Automorphism, nf_new
from amitsur_small.skewpoly import BiPoly, SkewPoly

K = nf_new(QPoly([-1, -2, 1, 1]))
D = CyclicAlgebra(K, Automorphism(K, K([-2, 0, 1])), Fraction(2))

w = build_witness(D)
c = contraction_certificate(w)
print("f =", c.f)
print("  = (", c.h, ") * (", c.linear, ")")

m = lemma_maximality(w)
print("maximality:", m.status, "| norm degree", len(m.f_irreducible_over_fj["norm"]) - 1)

# x - i is the interesting case: the commutator with j is a nonzero constant
xi = BiPoly.from_skew(SkewPoly.x(D)) - BiPoly(D, [D.i])
t = probe_maximality(w, xi)
step = t.gcd_chain[0]
print(f"u = {xi}: commutator {step.commutator}, stable generator {t.stable} -> {t.outcome}")

rng = random.Random(1)
for _ in range(3):
    u = random_probe(D, rng)
    t = probe_maximality(w, u)
    print(f"u = {u}\n   -> {t.outcome} after {len(t.gcd_chain)} commutator step(s); trace ok: {verify_trace(w, t)}")

rep = full_report(D, probe_count=50, seed=0)
print("verdict:", rep.verdict, "|", rep.probes.unit_ideal, "of", rep.probes.count, "probes hit the unit ideal")
