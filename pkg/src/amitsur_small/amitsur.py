"""Witness ideal I = <f, y - j> in D[x, y] and its certificates.

``f`` is the minimal polynomial of ``i`` (the modulus of K) with central
coefficients.  The contraction ``I ∩ D[x] = D[x] f`` sits inside
``D[x](x - i)``, so it is not maximal.  Maximality of ``I`` itself is certified
by irreducibility of ``f`` over ``Q[j] = Q[s]/(s^p - beta)`` and stress-tested
by probing random enlargements ``I + D[x, y] u``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .arith import QPoly, irreducibility_record, zassenhaus_factor
from .cycalg import (
    AlgElement,
    CyclicAlgebra,
    DivisionWitness,
    ZeroDivisorWitness,
    in_F_of_j,
    zero_divisor_witness,
)
from .factor import NFPoly, coefficient_field, norm_poly, shifted, trager_factor
from .numfield import NotAFieldError
from .skewpoly import (
    BezoutCertificate,
    BiPoly,
    SkewPoly,
    bipoly_reduce_y,
    j_commutator,
    left_ideal_gcd,
    spoly_divmod,
    wedderburn_split,
    y_minus_j,
)

MEMBER = "MEMBER"
UNIT_IDEAL = "UNIT_IDEAL"
CONTRADICTION = "CONTRADICTION"
MAXIMAL = "MAXIMAL"

NOT_AMITSUR_SMALL = "NOT_AMITSUR_SMALL"
DIVISION_NOT_CERTIFIED = "DIVISION_NOT_CERTIFIED"


class DivisionNotCertified(ValueError):
    pass


@dataclass(frozen=True)
class Witness:
    algebra: CyclicAlgebra
    f: SkewPoly
    gen2: BiPoly


def build_witness(alg: CyclicAlgebra) -> Witness:
    if alg.division is None:
        alg.certify_division()
    if alg.division is None:
        raise DivisionNotCertified("division not certified: refusing to build the witness ideal")
    f = SkewPoly.from_rational(alg, alg.field.modulus)
    if j_commutator(f, alg.j):
        raise AssertionError("f must have central coefficients")
    return Witness(alg, f, y_minus_j(alg))


# -- contraction --------------------------------------------------------------

@dataclass(frozen=True)
class ContractionCertificate:
    """``f = h*(x - i)``: the contraction ``D[x] f`` lies strictly inside
    ``D[x](x - i)``, which is itself proper."""

    f: SkewPoly
    h: SkewPoly
    linear: SkewPoly
    degree_argument: tuple[str, ...]

    def verify(self) -> bool:
        alg = self.f.alg
        lin_ok = self.linear == SkewPoly.x(alg) - alg.i
        return (lin_ok and self.h * self.linear == self.f and self.h.is_monic()
                and self.h.degree == self.f.degree - 1 and self.f.degree > 1)


def contraction_certificate(w: Witness) -> ContractionCertificate:
    alg = w.algebra
    h = wedderburn_split(w.f, alg.i)
    if h is None:
        raise AssertionError("i is not a right root of its own minimal polynomial")
    linear = SkewPoly.x(alg) - alg.i
    if h * linear != w.f:
        raise AssertionError("f != h*(x - i)")
    facts = (
        f"deg f = {w.f.degree} > 1 = deg(x - i), so D[x]f != D[x](x - i)",
        "every nonzero element of D[x](x - i) has degree >= 1, so D[x](x - i) != D[x]",
    )
    return ContractionCertificate(w.f, h, linear, facts)


# -- maximality via irreducibility over Q[j] ------------------------------------

@dataclass(frozen=True)
class MaximalityCertificate:
    fj_modulus: QPoly
    fj_irreducible: dict
    f_irreducible_over_fj: dict
    status: str

    def verify(self) -> bool:
        return recheck_maximality(self.fj_modulus, self.fj_irreducible, self.f_irreducible_over_fj) \
            and self.status == MAXIMAL


def fj_modulus(alg: CyclicAlgebra) -> QPoly:
    return QPoly([-alg.beta] + [0] * (alg.p - 1) + [1])


def lemma_maximality(w: Witness) -> MaximalityCertificate:
    alg = w.algebra
    M = fj_modulus(alg)
    rec_m = irreducibility_record(M)
    if not rec_m["irreducible"]:
        raise NotAFieldError(f"F[j] not a field: {M.to_text('s')} is reducible")
    fac = trager_factor(alg.field.modulus, M)
    N = fac.norms[0] if fac.norms else None
    rec_f = {
        "field_modulus": M.to_strings(),
        "poly": alg.field.modulus.to_strings(),
        "shift": fac.shift_used,
        "norm": N.to_strings() if N is not None else None,
        "norm_factors": ([[g.to_strings(), k] for g, k in zassenhaus_factor(N)] if N is not None else None),
        "factors": [[g.to_strings(), k] for g, k in fac.factors],
        "irreducible": fac.irreducible,
    }
    status = MAXIMAL if fac.irreducible else CONTRADICTION
    return MaximalityCertificate(M, rec_m, rec_f, status)


def recheck_maximality(M: QPoly, rec_m: dict, rec_f: dict) -> bool:
    """Independent re-verification of the two irreducibility records."""
    if QPoly.from_strings(rec_m["poly"]) != M or not rec_m["irreducible"]:
        return False
    facs = zassenhaus_factor(M)
    if len(facs) != 1 or facs[0][1] != 1:
        return False
    if not rec_f["irreducible"] or rec_f["norm"] is None:
        return False
    K = coefficient_field(M)
    f = QPoly.from_strings(rec_f["poly"])
    N = norm_poly(shifted(NFPoly.from_qpoly(K, f), rec_f["shift"]))
    if N.to_strings() != rec_f["norm"]:
        return False
    # an irreducible norm of degree p*deg f forces f(x - c s) irreducible over K'
    nf = zassenhaus_factor(N)
    return len(nf) == 1 and nf[0][1] == 1 and nf[0][0].degree == f.degree * M.degree


# -- saturation and probes ----------------------------------------------------------

@dataclass(frozen=True)
class ChainStep:
    generator: SkewPoly
    commutator: SkewPoly
    remainder: SkewPoly
    bezout: BezoutCertificate


@dataclass(frozen=True)
class Saturation:
    chain: tuple[ChainStep, ...]
    stable: SkewPoly


def saturate(w: Witness, g0: SkewPoly) -> Saturation:
    """Smallest left ideal ``D[x] g`` containing ``g0`` and closed under right
    multiplication by ``j``: descend with ``g <- gcd(g, g*j - j*g)``."""
    if not g0:
        raise ValueError("saturate needs a nonzero generator")
    j = w.algebra.j
    g = g0.monic()
    chain = []
    while True:
        c = j_commutator(g, j)
        r = spoly_divmod(c, g)[1] if c else c
        if not r:
            return Saturation(tuple(chain), g)
        cert = left_ideal_gcd(g, c)
        chain.append(ChainStep(g, c, r, cert))
        if cert.g.degree >= g.degree:
            raise AssertionError("saturation step failed to lower the degree")
        g = cert.g


@dataclass(frozen=True)
class ProbeTrace:
    input: BiPoly
    reduced: SkewPoly
    remainder_mod_f: SkewPoly
    initial: BezoutCertificate | None
    gcd_chain: tuple[ChainStep, ...]
    outcome: str
    stable: SkewPoly | None

    def stable_in_F_of_j(self) -> list | None:
        if self.stable is None:
            return None
        rows = [in_F_of_j(a) for a in self.stable.coeffs]
        return None if any(r is None for r in rows) else rows


def probe_maximality(w: Witness, u: BiPoly) -> ProbeTrace:
    """Decide whether ``I + D[x, y] u`` is ``I`` or the unit ideal.

    Reducing mod ``y - j`` maps the enlarged ideal onto the smallest left ideal
    of D[x] containing ``f`` and ``u'`` that is closed under right
    multiplication by ``j``; that ideal is computed by :func:`saturate`.
    """
    reduced = bipoly_reduce_y(u)
    rem = spoly_divmod(reduced, w.f)[1]
    if not rem:
        return ProbeTrace(u, reduced, rem, None, (), MEMBER, None)
    init = left_ideal_gcd(w.f, reduced)
    sat = saturate(w, init.g)
    outcome = UNIT_IDEAL if sat.stable.degree == 0 else CONTRADICTION
    return ProbeTrace(u, reduced, rem, init, sat.chain, outcome, sat.stable)


def verify_trace(w: Witness, trace: ProbeTrace) -> bool:
    """Re-derive every claim a trace makes from its recorded data."""
    if bipoly_reduce_y(trace.input) != trace.reduced:
        return False
    if spoly_divmod(trace.reduced, w.f)[1] != trace.remainder_mod_f:
        return False
    if trace.outcome == MEMBER:
        return not trace.remainder_mod_f and trace.initial is None
    if trace.initial is None or not trace.remainder_mod_f:
        return False
    init = trace.initial
    if init.f1 != w.f or init.f2 != trace.reduced or not init.verify():
        return False
    g = init.g
    j = w.algebra.j
    for step in trace.gcd_chain:
        if step.generator != g:
            return False
        if step.commutator != j_commutator(g, j):
            return False
        if step.remainder != spoly_divmod(step.commutator, g)[1] or not step.remainder:
            return False
        cert = step.bezout
        if cert.f1 != g or cert.f2 != step.commutator or not cert.verify():
            return False
        if cert.g.degree >= g.degree:
            return False
        g = cert.g
    if g != trace.stable:
        return False
    c = j_commutator(g, j)
    if c and spoly_divmod(c, g)[1]:
        return False
    if trace.outcome == UNIT_IDEAL:
        return g.degree == 0
    return trace.outcome == CONTRADICTION and g.degree > 0


def random_probe(alg: CyclicAlgebra, rng: random.Random, max_terms: int = 4) -> BiPoly:
    """Sparse element of D[x, y]: y-degree <= 2, x-degree <= p, coefficients
    drawn from {1, -1, 2, -2, i, j}."""
    values = [alg.one(), -alg.one(), alg.scalar(2), alg.scalar(-2), alg.i, alg.j]
    while True:
        grid: dict[tuple[int, int], AlgElement] = {}
        for _ in range(rng.randint(1, max_terms)):
            key = (rng.randint(0, 2), rng.randint(0, alg.p))
            grid[key] = grid.get(key, alg.zero()) + rng.choice(values)
        ys = []
        for k in range(3):
            coeffs = [grid.get((k, l), alg.zero()) for l in range(alg.p + 1)]
            ys.append(SkewPoly(alg, coeffs))
        u = BiPoly(alg, ys)
        if u:
            return u


# -- orchestration --------------------------------------------------------------

@dataclass
class ProbeSummary:
    count: int = 0
    member: int = 0
    unit_ideal: int = 0
    contradiction: int = 0
    resampled: int = 0
    traces: list[ProbeTrace] = field(default_factory=list)


@dataclass
class Report:
    algebra: CyclicAlgebra
    division: DivisionWitness | None
    zero_divisor: ZeroDivisorWitness | None
    contraction: ContractionCertificate | None
    maximality: MaximalityCertificate | None
    probes: ProbeSummary
    verdict: str
    timings: dict[str, float]
    witness: Witness | None = None


def full_report(alg: CyclicAlgebra, probe_count: int = 100, seed: int = 0,
                norm_element=None, preferred_prime: int | None = None,
                keep_traces: bool = False) -> Report:
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    division = alg.certify_division(preferred_prime)
    timings["division"] = time.perf_counter() - t0

    zdw = None
    if norm_element is not None:
        t0 = time.perf_counter()
        try:
            zdw = zero_divisor_witness(alg, alg.field(norm_element))
        except ValueError:
            zdw = None
        timings["zero_divisor"] = time.perf_counter() - t0

    summary = ProbeSummary()
    if division is None:
        return Report(alg, None, zdw, None, None, summary, DIVISION_NOT_CERTIFIED, timings)

    t0 = time.perf_counter()
    w = build_witness(alg)
    contraction = contraction_certificate(w)
    timings["contraction"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    maximality = lemma_maximality(w)
    timings["maximality"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    rng = random.Random(seed)
    for _ in range(probe_count):
        while True:
            u = random_probe(alg, rng)
            trace = probe_maximality(w, u)
            if trace.outcome != MEMBER:
                break
            summary.resampled += 1
        summary.count += 1
        if trace.outcome == UNIT_IDEAL:
            summary.unit_ideal += 1
        else:
            summary.contradiction += 1
        if keep_traces or trace.outcome == CONTRADICTION:
            summary.traces.append(trace)
    timings["probes"] = time.perf_counter() - t0

    if not contraction.verify():
        raise AssertionError("contraction certificate failed its own check")
    if summary.contradiction or maximality.status != MAXIMAL:
        verdict = CONTRADICTION
    else:
        verdict = NOT_AMITSUR_SMALL
    return Report(alg, division, zdw, contraction, maximality, summary, verdict, timings, w)
