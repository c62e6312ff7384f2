import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amitsur_small.amitsur import (
    CONTRADICTION,
    DIVISION_NOT_CERTIFIED,
    MAXIMAL,
    MEMBER,
    NOT_AMITSUR_SMALL,
    UNIT_IDEAL,
    DivisionNotCertified,
    build_witness,
    contraction_certificate,
    full_report,
    lemma_maximality,
    probe_maximality,
    random_probe,
    saturate,
    verify_trace,
)
from amitsur_small.cycalg import reduced_norm
from amitsur_small.numfield import NotAFieldError
from amitsur_small.skewpoly import BiPoly, SkewPoly, j_commutator, spoly_divmod, y_minus_j
from conftest import M3, make_algebra, rand_spoly

ALG = make_algebra(M3, 2)
ALG.certify_division(2)
W = build_witness(ALG)


def sigma_i(alg):
    return alg.from_field(alg.sigma(alg.field.gen()))


# -- witness and certificates ----------------------------------------------------

def test_build_witness(fix3, fix5, fix3s):
    w3 = build_witness(fix3)
    assert w3.f.degree == 3 and not j_commutator(w3.f, fix3.j)
    assert w3.gen2 == y_minus_j(fix3)
    assert build_witness(fix5).f.degree == 5
    with pytest.raises(DivisionNotCertified, match="division not certified"):
        build_witness(fix3s)


def test_contraction_examples(fix3, fix5):
    c = contraction_certificate(build_witness(fix3))
    x, i = SkewPoly.x(fix3), fix3.i
    assert c.h == x * x + (1 + i) * x + (i * i + i - 2)
    assert c.linear == x - i
    assert c.verify()
    assert c.f.right_eval(i) == 0
    c5 = contraction_certificate(build_witness(fix5))
    assert c5.verify() and c5.h.degree == 4 and c5.h.is_monic()
    assert c5.h * c5.linear == c5.f


def test_maximality_examples(fix3, fix5):
    m3 = lemma_maximality(build_witness(fix3))
    assert m3.status == MAXIMAL and m3.verify()
    assert m3.fj_irreducible["irreducible"] and m3.f_irreducible_over_fj["irreducible"]
    m5 = lemma_maximality(build_witness(fix5))
    assert m5.status == MAXIMAL and m5.verify()
    assert len(m5.f_irreducible_over_fj["norm"]) == 26


def test_maximality_split_fj(fix3s):
    # beta = 1 makes s^p - beta reducible; this can only be reached by
    # bypassing the division check
    from amitsur_small.amitsur import Witness

    w = Witness(fix3s, SkewPoly.from_rational(fix3s, M3), y_minus_j(fix3s))
    with pytest.raises(NotAFieldError, match="F\\[j\\] not a field"):
        lemma_maximality(w)


# -- saturation -------------------------------------------------------------------

def test_saturate_examples(fix3):
    w = build_witness(fix3)
    x, i, j = SkewPoly.x(fix3), fix3.i, fix3.j
    sat = saturate(w, w.f)
    assert sat.chain == () and sat.stable == w.f
    sat = saturate(w, x - i)
    assert len(sat.chain) == 1
    step = sat.chain[0]
    assert step.commutator == SkewPoly(fix3, [(sigma_i(fix3) - i) * j])
    assert reduced_norm(step.commutator.lc) != 0
    assert sat.stable == SkewPoly(fix3, [1])
    sat = saturate(w, SkewPoly(fix3, [1]))
    assert sat.chain == () and sat.stable.degree == 0


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_stable_generator_is_closed(seed):
    g0 = rand_spoly(ALG, random.Random(seed), 3)
    if not g0:
        return
    sat = saturate(W, g0)
    g = sat.stable
    c = j_commutator(g, ALG.j)
    assert not c or not spoly_divmod(c, g)[1]
    assert not spoly_divmod(g0, g)[1]
    degs = [s.generator.degree for s in sat.chain] + [g.degree]
    assert degs == sorted(degs, reverse=True) and len(set(degs)) == len(degs)


# -- probes --------------------------------------------------------------------------

def test_probe_examples(fix3):
    w = build_witness(fix3)
    y = BiPoly.y(fix3)
    f2 = BiPoly.from_skew(w.f)
    t = probe_maximality(w, y * f2)
    assert t.outcome == MEMBER and verify_trace(w, t)
    t = probe_maximality(w, y - BiPoly(fix3, [fix3.i]))
    assert t.outcome == UNIT_IDEAL and verify_trace(w, t)
    assert reduced_norm(fix3.j - fix3.i) != 0
    x = BiPoly.from_skew(SkewPoly.x(fix3))
    t = probe_maximality(w, x - BiPoly(fix3, [fix3.i]))
    assert t.outcome == UNIT_IDEAL and len(t.gcd_chain) == 1 and verify_trace(w, t)


def test_verify_trace_rejects_tampering(fix3):
    from dataclasses import replace

    w = build_witness(fix3)
    x = BiPoly.from_skew(SkewPoly.x(fix3))
    t = probe_maximality(w, x - BiPoly(fix3, [fix3.i]))
    assert not verify_trace(w, replace(t, outcome=CONTRADICTION))
    assert not verify_trace(w, replace(t, gcd_chain=()))
    assert not verify_trace(w, replace(t, reduced=t.reduced + SkewPoly(fix3, [1])))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_random_probes_never_contradict(seed):
    u = random_probe(ALG, random.Random(seed))
    t = probe_maximality(W, u)
    assert verify_trace(W, t)
    assert t.outcome in (MEMBER, UNIT_IDEAL)


# -- reports ------------------------------------------------------------------------------

def test_full_report_fix3():
    alg = make_algebra(M3, 2)
    rep = full_report(alg, probe_count=30, seed=0, preferred_prime=2)
    assert rep.verdict == NOT_AMITSUR_SMALL
    assert rep.probes.count == 30 and rep.probes.contradiction == 0
    assert rep.division.prime_q == 2


def test_full_report_split():
    alg = make_algebra(M3, 1)
    rep = full_report(alg, probe_count=10, norm_element=[1])
    assert rep.verdict == DIVISION_NOT_CERTIFIED
    assert rep.zero_divisor is not None and rep.zero_divisor.verify()
    assert rep.contraction is None and rep.maximality is None
