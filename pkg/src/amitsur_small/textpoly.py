"""Parse human-entered polynomial text such as ``"3/2*x^2 - i*y + 1"``.

Grammar (products keep their written order, so ``i*j`` and ``j*i`` differ)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := power (['*'] power)*
    power  := atom ['^' integer]
    atom   := rational | name | '(' expr ')'

Names are resolved through a mapping supplied by the caller; rationals are
lifted with a caller-supplied constructor.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Mapping

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_]\w*)|(\*\*|[-+*^()]))", re.ASCII)
_SUPERSCRIPT = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_SUPER_RUN = re.compile("[⁰¹²³⁴⁵⁶⁷⁸⁹]+")


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str]]:
    text = text.replace("−", "-").replace("·", "*")
    text = _SUPER_RUN.sub(lambda m: "^" + m.group().translate(_SUPERSCRIPT), text)
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


def parse_poly(text: str, names: Mapping[str, object], scalar: Callable[[Fraction], object]):
    """Evaluate ``text`` in the ring determined by ``names`` and ``scalar``."""
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty expression")
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        kind, val = peek()
        sign = 1
        if kind == "op" and val in "+-":
            take()
            sign = -1 if val == "-" else 1
        acc = term()
        if sign < 0:
            acc = -acc
        while True:
            kind, val = peek()
            if kind == "op" and val in "+-":
                take()
                rhs = term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term():
        acc = power()
        while True:
            kind, val = peek()
            if kind == "op" and val == "*":
                take()
                acc = acc * power()
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                acc = acc * power()
            else:
                return acc

    def power():
        base = atom()
        kind, val = peek()
        if kind == "op" and val == "^":
            take()
            kind, val = take()
            if kind != "num" or "/" in val:
                raise ParseError("exponent must be a nonnegative integer")
            return base ** int(val)
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return scalar(Fraction(val))
        if kind == "name":
            if val not in names:
                raise ParseError(f"unknown symbol {val!r}; allowed: {', '.join(sorted(names))}")
            return names[val]
        if kind == "op" and val == "(":
            inner = expr()
            k2, v2 = take()
            if k2 != "op" or v2 != ")":
                raise ParseError("unbalanced parenthesis")
            return inner
        if kind == "op" and val == "-":
            return -power()
        raise ParseError(f"unexpected token {val!r}")

    result = expr()
    if pos != len(toks):
        raise ParseError(f"trailing input at token {toks[pos][1]!r}")
    return result


def parse_qpoly(text: str, var: str | None = None):
    """Rational polynomial in a single variable (any one-letter name if ``var`` is None)."""
    from .arith import QPoly

    x = QPoly.x()
    if var is None:
        found = {v for k, v in _tokenize(text) if k == "name"}
        if len(found) > 1:
            raise ParseError(f"more than one variable: {sorted(found)}")
        var = found.pop() if found else "x"
    return parse_poly(text, {var: x}, lambda q: QPoly([q]))
