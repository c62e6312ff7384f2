"""Command-line front end.

    amitsur-small verify -c instance.json [--probes N] [--seed S] [--report out.json] [--traces]
    amitsur-small probe  -c instance.json --element "y - i"
    amitsur-small factor --rational "x^4 + 1"
    amitsur-small factor --over-fj -c instance.json "x^3 + x^2 - 2*x - 1"

Exit codes: 0 success, 1 usage or parse error, 2 division not certified,
3 contradiction found.
"""

from __future__ import annotations

import argparse
import json
import sys

from .amitsur import (
    CONTRADICTION,
    DIVISION_NOT_CERTIFIED,
    NOT_AMITSUR_SMALL,
    DivisionNotCertified,
    build_witness,
    fj_modulus,
    full_report,
    probe_maximality,
)
from .arith import zassenhaus_factor
from .factor import NFPoly, coefficient_field, trager_factor
from .serialize import (
    ConfigError,
    build_algebra,
    dumps_report,
    load_config,
    report_json,
    trace_json,
)
from .skewpoly import BiPoly, SkewPoly
from .textpoly import ParseError, parse_poly, parse_qpoly

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_DIVISION = 2
EXIT_CONTRADICTION = 3

VERDICT_EXIT = {
    NOT_AMITSUR_SMALL: EXIT_OK,
    DIVISION_NOT_CERTIFIED: EXIT_NOT_DIVISION,
    CONTRADICTION: EXIT_CONTRADICTION,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="amitsur-small", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run the full certification pipeline")
    v.add_argument("-c", "--config", required=True)
    v.add_argument("--probes", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--report", help="write the JSON report here instead of stdout")
    v.add_argument("--traces", action="store_true", help="embed every probe trace in the report")

    p = sub.add_parser("probe", help="probe one enlargement I + D[x,y]u")
    p.add_argument("-c", "--config", required=True)
    p.add_argument("--element", required=True, help='element of D[x,y], e.g. "y - i" or "f"')

    f = sub.add_parser("factor", help="factor over Q or over F[j]")
    g = f.add_mutually_exclusive_group(required=True)
    g.add_argument("--rational", metavar="POLY")
    g.add_argument("--over-fj", action="store_true")
    f.add_argument("-c", "--config")
    f.add_argument("poly", nargs="?")
    return ap


def _summary(data: dict) -> str:
    lines = [f"verdict: {data['verdict']}"]
    div = data["division"]
    if div["certified"]:
        lines.append(f"division: certified at q = {div['witness']['prime_q']}")
    else:
        lines.append("division: NOT certified")
        if div.get("zero_divisor"):
            lines.append(f"zero divisor: {div['zero_divisor']['identity']}")
    if data["contraction"]:
        lines.append(f"contraction: {data['contraction']['identity']}")
    if data["maximality"]:
        lines.append(f"maximality: {data['maximality']['status']}")
    pr = data["probes"]
    lines.append(f"probes: {pr['count']} run, {pr['unit_ideal']} unit ideal, "
                 f"{pr['contradiction']} contradiction, {pr['resampled']} resampled")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    cfg = load_config(args.config)
    if args.probes is not None:
        cfg.probes = args.probes
    if args.seed is not None:
        cfg.seed = args.seed
    alg = build_algebra(cfg)
    report = full_report(alg, cfg.probes, cfg.seed, norm_element=cfg.norm_element,
                         preferred_prime=cfg.division_witness_prime, keep_traces=args.traces)
    data = report_json(report, cfg, include_traces=args.traces)
    text = dumps_report(data)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(_summary(data))
    else:
        sys.stdout.write(text)
        print(_summary(data), file=sys.stderr)
    return VERDICT_EXIT[data["verdict"]]


def _probe_names(w) -> dict:
    alg = w.algebra
    x = BiPoly.from_skew(SkewPoly.x(alg))
    i = BiPoly(alg, [alg.i])
    return {"x": x, "y": BiPoly.y(alg), "i": i, "t": i,
            "j": BiPoly(alg, [alg.j]), "f": BiPoly.from_skew(w.f)}


def cmd_probe(args) -> int:
    cfg = load_config(args.config)
    alg = build_algebra(cfg)
    alg.certify_division(cfg.division_witness_prime)
    try:
        w = build_witness(alg)
    except DivisionNotCertified as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NOT_DIVISION
    u = parse_poly(args.element, _probe_names(w), lambda q: BiPoly(alg, [q]))
    if not isinstance(u, BiPoly):
        raise ParseError("element did not evaluate to a polynomial")
    trace = probe_maximality(w, u)
    print(json.dumps(trace_json(trace), indent=2, ensure_ascii=False))
    print(f"outcome: {trace.outcome}", file=sys.stderr)
    return EXIT_CONTRADICTION if trace.outcome == CONTRADICTION else EXIT_OK


def _factor_line(factors, to_text) -> str:
    parts = []
    for g, k in factors:
        body = f"({to_text(g)})"
        parts.append(body if k == 1 else f"{body}^{k}")
    return "*".join(parts) if parts else "1"


def cmd_factor(args) -> int:
    if args.rational is not None:
        f = parse_qpoly(args.rational)
        if not f:
            raise ParseError("cannot factor zero")
        facs = zassenhaus_factor(f)
        irreducible = len(facs) == 1 and facs[0][1] == 1
        print("irreducible" if irreducible else _factor_line(facs, lambda g: g.to_text()))
        print(json.dumps({
            "input": f.to_strings(),
            "leading_coefficient": f.to_strings()[-1],
            "irreducible": irreducible,
            "factors": [{"poly": g.to_strings(), "multiplicity": k} for g, k in facs],
        }))
        return EXIT_OK
    if not args.config or not args.poly:
        raise ParseError("--over-fj needs -c <config> and a polynomial")
    cfg = load_config(args.config)
    alg = build_algebra(cfg)
    M = fj_modulus(alg)
    K = coefficient_field(M)
    s = NFPoly(K, [K.gen()])
    f = parse_poly(args.poly, {"x": NFPoly.x(K), "j": s, "s": s}, lambda q: NFPoly(K, [q]))
    if not f:
        raise ParseError("cannot factor zero")
    fac = trager_factor(f, M)
    print("irreducible" if fac.irreducible else _factor_line(fac.factors, str))
    print(json.dumps({
        "field_modulus": M.to_strings(),
        "input": f.to_strings(),
        "irreducible": fac.irreducible,
        "shift": fac.shift_used,
        "factors": [{"poly": g.to_strings(), "multiplicity": k} for g, k in fac.factors],
    }))
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "probe": cmd_probe, "factor": cmd_factor}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ConfigError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
