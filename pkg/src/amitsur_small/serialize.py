"""JSON formats: instance configs, reports, and report re-verification.

Rationals are strings ``"num/den"`` (``"num"`` when integral), polynomials
are arrays of coefficients in ascending degree.  An algebra element is an
array of p coordinate arrays (index k holds the coefficient of ``j^k``),
a D[x] polynomial an array of elements, a D[x, y] polynomial an array of
D[x] polynomials in ascending y-degree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Any

from .amitsur import (
    CONTRADICTION,
    MAXIMAL,
    NOT_AMITSUR_SMALL,
    ChainStep,
    ContractionCertificate,
    ProbeTrace,
    Report,
    Witness,
    build_witness,
    fj_modulus,
    recheck_maximality,
    verify_trace,
)
from .arith import FFPoly, QPoly, fmt_rational, parse_rational
from .cycalg import CyclicAlgebra, DivisionWitness, division_witness
from .numfield import Automorphism, nf_new
from .skewpoly import BezoutCertificate, BiPoly, SkewPoly


class ConfigError(ValueError):
    pass


@dataclass
class InstanceConfig:
    p: int
    modulus: list
    sigma: list
    beta: str
    division_witness_prime: int | None = None
    norm_element: list | None = None
    probes: int = 100
    seed: int = 0

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "modulus": [_rat_str(c) for c in self.modulus],
            "sigma": [_rat_str(c) for c in self.sigma],
            "beta": _rat_str(self.beta),
            "division_witness_prime": self.division_witness_prime,
            "norm_element": None if self.norm_element is None else [_rat_str(c) for c in self.norm_element],
            "probes": self.probes,
            "seed": self.seed,
        }


def _rat_str(c) -> str:
    return fmt_rational(_rat(c))


def _rat(c) -> Fraction:
    if isinstance(c, bool):
        raise ConfigError("booleans are not rationals")
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    if isinstance(c, str):
        try:
            return parse_rational(c)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    raise ConfigError(f"expected a rational string, got {c!r}")


def _nat(data: dict, key: str, default=None, required=False):
    if key not in data or data[key] is None:
        if required:
            raise ConfigError(f"missing field {key!r}")
        return default
    v = data[key]
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise ConfigError(f"{key!r} must be a natural number")
    return v


def _coeff_list(data: dict, key: str, max_len: int, exact: bool = False, required=True):
    if key not in data or data[key] is None:
        if required:
            raise ConfigError(f"missing field {key!r}")
        return None
    v = data[key]
    if not isinstance(v, list):
        raise ConfigError(f"{key!r} must be an array of rational strings")
    if (exact and len(v) != max_len) or len(v) > max_len:
        raise ConfigError(f"{key!r} has length {len(v)}, expected {'exactly' if exact else 'at most'} {max_len}")
    return [_rat(c) for c in v]


def parse_config(data: Any) -> InstanceConfig:
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    known = {f.name for f in fields(InstanceConfig)}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown fields: {', '.join(sorted(unknown))}")
    p = _nat(data, "p", required=True)
    modulus = _coeff_list(data, "modulus", p + 1, exact=True)
    sigma = _coeff_list(data, "sigma", p)
    if "beta" not in data:
        raise ConfigError("missing field 'beta'")
    beta = _rat(data["beta"])
    return InstanceConfig(
        p=p,
        modulus=modulus,
        sigma=sigma,
        beta=beta,
        division_witness_prime=_nat(data, "division_witness_prime"),
        norm_element=_coeff_list(data, "norm_element", p, required=False),
        probes=_nat(data, "probes", 100),
        seed=_nat(data, "seed", 0),
    )


def load_config(path) -> InstanceConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config(data)


def build_algebra(cfg: InstanceConfig) -> CyclicAlgebra:
    try:
        K = nf_new(QPoly(cfg.modulus))
        sigma = Automorphism(K, K(cfg.sigma))
        return CyclicAlgebra(K, sigma, cfg.beta)
    except ValueError as exc:
        raise ConfigError(f"invalid instance: {exc}") from exc


# -- encoders ---------------------------------------------------------------

def spoly_json(f: SkewPoly) -> list:
    return f.to_strings()


def bipoly_json(P: BiPoly) -> list:
    return P.to_strings()


def bezout_json(cert: BezoutCertificate) -> dict:
    return {"g": spoly_json(cert.g), "u": spoly_json(cert.u), "v": spoly_json(cert.v)}


def trace_json(trace: ProbeTrace) -> dict:
    return {
        "input": bipoly_json(trace.input),
        "input_text": str(trace.input),
        "reduced": spoly_json(trace.reduced),
        "remainder_mod_f": spoly_json(trace.remainder_mod_f),
        "initial": None if trace.initial is None else bezout_json(trace.initial),
        "gcd_chain": [
            {
                "generator": spoly_json(s.generator),
                "commutator": spoly_json(s.commutator),
                "remainder": spoly_json(s.remainder),
                "bezout": bezout_json(s.bezout),
            }
            for s in trace.gcd_chain
        ],
        "outcome": trace.outcome,
        "stable_generator": None if trace.stable is None else spoly_json(trace.stable),
        "stable_generator_text": None if trace.stable is None else str(trace.stable),
        "stable_in_F_of_j": (None if trace.stable_in_F_of_j() is None
                             else [[fmt_rational(q) for q in row] for row in trace.stable_in_F_of_j()]),
    }


def report_json(report: Report, cfg: InstanceConfig, include_traces: bool = False) -> dict:
    alg = report.algebra
    division = {"certified": report.division is not None,
                "witness": None if report.division is None else report.division.to_json(),
                "zero_divisor": None}
    if report.zero_divisor is not None:
        z = report.zero_divisor
        division["zero_divisor"] = {
            "u": z.u.to_strings(),
            "u_minus_1": z.u_minus_1.to_strings(),
            "cofactor": z.cofactor.to_strings(),
            "product": (z.u_minus_1 * z.cofactor).to_strings(),
            "identity": f"({z.u_minus_1})*({z.cofactor}) = 0",
            "factors_nonzero": bool(z.u_minus_1) and bool(z.cofactor),
            "verified": z.verify(),
        }
    contraction = None
    if report.contraction is not None:
        c = report.contraction
        contraction = {
            "f": spoly_json(c.f),
            "h": spoly_json(c.h),
            "linear_factor": spoly_json(c.linear),
            "identity": f"{c.f} = ({c.h})*({c.linear})",
            "verified": c.verify(),
            "degree_argument": list(c.degree_argument),
        }
    maximality = None
    if report.maximality is not None:
        m = report.maximality
        maximality = {
            "status": m.status,
            "fj_modulus": m.fj_modulus.to_strings(),
            "fj_irreducible": m.fj_irreducible,
            "f_irreducible_over_fj": m.f_irreducible_over_fj,
        }
    probes = {
        "count": report.probes.count,
        "member": report.probes.member,
        "unit_ideal": report.probes.unit_ideal,
        "contradiction": report.probes.contradiction,
        "resampled": report.probes.resampled,
    }
    traces = [t for t in report.probes.traces if include_traces or t.outcome == CONTRADICTION]
    if traces:
        probes["traces"] = [trace_json(t) for t in traces]
    return {
        "instance": cfg.to_json(),
        "algebra": repr(alg),
        "division": division,
        "contraction": contraction,
        "maximality": maximality,
        "probes": probes,
        "verdict": report.verdict,
        "timings": {k: round(v, 6) for k, v in report.timings.items()},
    }


def dumps_report(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


# -- decoders and re-verification ------------------------------------------

def parse_spoly(alg: CyclicAlgebra, data) -> SkewPoly:
    return SkewPoly(alg, [alg.parse_element(a) for a in data])


def parse_bipoly(alg: CyclicAlgebra, data) -> BiPoly:
    return BiPoly(alg, [parse_spoly(alg, c) for c in data])


def _parse_trace(w: Witness, data: dict) -> ProbeTrace:
    alg = w.algebra
    P = lambda d: parse_spoly(alg, d)  # noqa: E731
    reduced = P(data["reduced"])
    init = None
    if data["initial"] is not None:
        b = data["initial"]
        init = BezoutCertificate(P(b["g"]), P(b["u"]), P(b["v"]), w.f, reduced)
    chain = []
    for step in data["gcd_chain"]:
        gen, comm = P(step["generator"]), P(step["commutator"])
        b = step["bezout"]
        chain.append(ChainStep(gen, comm, P(step["remainder"]),
                               BezoutCertificate(P(b["g"]), P(b["u"]), P(b["v"]), gen, comm)))
    stable = None if data["stable_generator"] is None else P(data["stable_generator"])
    return ProbeTrace(parse_bipoly(alg, data["input"]), reduced, P(data["remainder_mod_f"]),
                      init, tuple(chain), data["outcome"], stable)


def check_report(data: dict) -> list[str]:
    """Re-verify every certificate embedded in a parsed report.

    Returns the list of failed checks; empty means the report stands.
    """
    failures = []
    cfg = parse_config(data["instance"])
    alg = build_algebra(cfg)

    div = data["division"]
    if div["certified"]:
        wj = div["witness"]
        claimed = DivisionWitness(wj["prime_q"], FFPoly(wj["prime_q"], wj["residual_factor"]), wj["beta_valuation"])
        if division_witness(alg, claimed.prime_q) != claimed:
            failures.append("division witness does not recheck")
        else:
            alg.division = claimed
    if div.get("zero_divisor"):
        z = div["zero_divisor"]
        a = alg.parse_element(z["u_minus_1"])
        b = alg.parse_element(z["cofactor"])
        if not a or not b or a * b:
            failures.append("zero-divisor identity does not hold")

    w = None
    if alg.division is not None:
        w = build_witness(alg)
    if data["contraction"] is not None:
        if w is None:
            failures.append("contraction certificate without division certificate")
        else:
            c = data["contraction"]
            cert = ContractionCertificate(parse_spoly(alg, c["f"]), parse_spoly(alg, c["h"]),
                                          parse_spoly(alg, c["linear_factor"]), tuple(c["degree_argument"]))
            if cert.f != w.f or not cert.verify():
                failures.append("contraction certificate does not recheck")
    if data["maximality"] is not None:
        m = data["maximality"]
        M = QPoly.from_strings(m["fj_modulus"])
        if M != fj_modulus(alg):
            failures.append("maximality certificate uses the wrong F[j] modulus")
        elif m["status"] == MAXIMAL and not recheck_maximality(M, m["fj_irreducible"], m["f_irreducible_over_fj"]):
            failures.append("maximality certificate does not recheck")
    probes = data["probes"]
    for k, t in enumerate(probes.get("traces", [])):
        if w is None or not verify_trace(w, _parse_trace(w, t)):
            failures.append(f"probe trace {k} does not recheck")
    if data["verdict"] == NOT_AMITSUR_SMALL:
        if probes["contradiction"] or data["contraction"] is None or data["maximality"] is None:
            failures.append("verdict NOT_AMITSUR_SMALL without both certificates and zero contradictions")
    return failures
