"""Exact base arithmetic: rationals, Q[x], F_q[x], factorization over Q."""

from .ffpoly import FFPoly, ff_is_irreducible, is_prime, modp_factor
from .qpoly import (
    QPoly,
    fmt_rational,
    interpolate,
    is_squarefree,
    parse_rational,
    qpoly_divmod,
    qpoly_gcd,
    qpoly_xgcd,
    resultant,
    squarefree_decomposition,
)
from .zassenhaus import hensel_lift, irreducibility_record, is_irreducible, zassenhaus_factor

__all__ = [
    "FFPoly",
    "QPoly",
    "ff_is_irreducible",
    "fmt_rational",
    "hensel_lift",
    "interpolate",
    "irreducibility_record",
    "is_irreducible",
    "is_prime",
    "is_squarefree",
    "modp_factor",
    "parse_rational",
    "qpoly_divmod",
    "qpoly_gcd",
    "qpoly_xgcd",
    "resultant",
    "squarefree_decomposition",
    "zassenhaus_factor",
]
