"""Exact verification that cyclic division algebras of odd prime degree over Q
are not Amitsur-Small, instance by instance."""

from .amitsur import (
    build_witness,
    contraction_certificate,
    full_report,
    lemma_maximality,
    probe_maximality,
    saturate,
)
from .arith import FFPoly, QPoly, zassenhaus_factor
from .cycalg import AlgElement, CyclicAlgebra, alg_inverse, min_poly, reduced_norm
from .factor import NFPoly, nf_irreducible, trager_factor
from .numfield import Automorphism, NumberField, nf_new
from .skewpoly import BiPoly, SkewPoly, left_ideal_gcd, spoly_divmod

__all__ = [
    "AlgElement",
    "Automorphism",
    "BiPoly",
    "CyclicAlgebra",
    "FFPoly",
    "NFPoly",
    "NumberField",
    "QPoly",
    "SkewPoly",
    "alg_inverse",
    "build_witness",
    "contraction_certificate",
    "full_report",
    "left_ideal_gcd",
    "lemma_maximality",
    "min_poly",
    "nf_irreducible",
    "nf_new",
    "probe_maximality",
    "reduced_norm",
    "saturate",
    "spoly_divmod",
    "trager_factor",
    "zassenhaus_factor",
]
