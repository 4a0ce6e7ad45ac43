"""Polynomial expression front-end.

Grammar (whitespace insensitive)::

    expression  = ['-'] term (('+'|'-') term)*
    term        = coefficient ('*'? monomial)? | monomial
    coefficient = rational | '(' radical-expression ')'
    radical     = ['-'] product (('+'|'-') product)*
    product     = factor ('*' factor)*
    factor      = rational | 'sqrt' '(' integer ')'
    monomial    = var ('^' nat)? ('*'? var ('^' nat)?)?
    rational    = integer ('/' natural)?

The renderer emits exactly this grammar, so forms round-trip losslessly.
"""

from __future__ import annotations

import re
from fractions import Fraction

import mpmath

from .binform import BinaryForm
from .scalar import (
    DomainError,
    BigApprox,
    QuadExt,
    Scalar,
    TowerScalar,
    is_zero,
    quadext,
    scalar_text,
)


class ParseError(ValueError):
    """Syntax or structure error, carrying the source position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|([()+\-*/^]))")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m or m.end() == pos:
                rest = text[pos:]
                if rest.strip():
                    at = pos + len(rest) - len(rest.lstrip())
                    raise ParseError(f"unexpected character {text[at]!r}", at)
                break
            if m.group(1):
                self.tokens.append(("num", m.group(1), m.start(1)))
            elif m.group(2):
                self.tokens.append(("name", m.group(2), m.start(2)))
            else:
                self.tokens.append(("sym", m.group(3), m.start(3)))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.i += 1
        return tok

    def accept(self, kind: str, value: str | None = None) -> bool:
        tok = self.peek()
        if tok and tok[0] == kind and (value is None or tok[1] == value):
            self.i += 1
            return True
        return False

    def expect(self, kind: str, value: str) -> None:
        tok = self.peek()
        if not tok or tok[0] != kind or tok[1] != value:
            pos = tok[2] if tok else len(self.text)
            raise ParseError(f"expected {value!r}", pos)
        self.i += 1


def _parse_rational(ts: _Tokens, negative: bool = False) -> Fraction:
    tok = ts.next()
    if tok[0] != "num":
        raise ParseError("expected a number", tok[2])
    num = int(tok[1])
    den = 1
    if ts.accept("sym", "/"):
        dtok = ts.next()
        if dtok[0] != "num":
            raise ParseError("expected a denominator", dtok[2])
        den = int(dtok[1])
        if den == 0:
            raise ParseError("zero denominator", dtok[2])
    q = Fraction(num, den)
    return -q if negative else q


def _parse_radical_factor(ts: _Tokens):
    tok = ts.peek()
    if tok is None:
        raise ParseError("unexpected end of coefficient", len(ts.text))
    if tok[0] == "name" and tok[1] == "sqrt":
        ts.next()
        ts.expect("sym", "(")
        neg = ts.accept("sym", "-")
        n = _parse_rational(ts)
        if n.denominator != 1:
            raise ParseError("sqrt takes an integer", tok[2])
        ts.expect("sym", ")")
        m = -int(n) if neg else int(n)
        if m == 0:
            raise ParseError("sqrt(0) is not a radical", tok[2])
        return quadext(Fraction(0), Fraction(1), m) if m != 1 else Fraction(1)
    if tok[0] == "num":
        return _parse_rational(ts)
    raise ParseError("expected a rational or sqrt(...)", tok[2])


def _lifted_op(a, b, op):
    """Combine scalars, promoting into the joint quadratic tower when two
    different radicands meet."""
    from .scalar import domain_of_scalar, embed, join_domains

    try:
        return op(a, b)
    except DomainError:
        dom = join_domains(domain_of_scalar(a), domain_of_scalar(b))
        return op(embed(a, dom), embed(b, dom))


def _parse_radical_expression(ts: _Tokens):
    total = Fraction(0)
    negative = ts.accept("sym", "-")
    while True:
        factor = _parse_radical_factor(ts)
        while ts.accept("sym", "*"):
            factor = _lifted_op(factor, _parse_radical_factor(ts), lambda a, b: a * b)
        total = _lifted_op(total, -factor if negative else factor, lambda a, b: a + b)
        if ts.accept("sym", "+"):
            negative = False
        elif ts.accept("sym", "-"):
            negative = True
        else:
            return total


def _parse_monomial(ts: _Tokens, vars: tuple[str, str]) -> tuple[int, int] | None:
    powers = {vars[0]: 0, vars[1]: 0}
    seen = False
    while True:
        tok = ts.peek()
        if tok and tok[0] == "name" and tok[1] in powers:
            ts.next()
            exp = 1
            if ts.accept("sym", "^"):
                etok = ts.next()
                if etok[0] != "num":
                    raise ParseError("expected an integer exponent", etok[2])
                exp = int(etok[1])
            if seen and powers[tok[1]]:
                raise ParseError(f"variable {tok[1]!r} repeated", tok[2])
            powers[tok[1]] += exp
            seen = True
            saved = ts.i
            if ts.accept("sym", "*"):
                nxt = ts.peek()
                if not (nxt and nxt[0] == "name" and nxt[1] in powers):
                    ts.i = saved
                    return powers[vars[0]], powers[vars[1]]
            continue
        break
    if not seen:
        return None
    return powers[vars[0]], powers[vars[1]]


def _parse_term(ts: _Tokens, vars: tuple[str, str]):
    tok = ts.peek()
    if tok is None:
        raise ParseError("empty term", len(ts.text))
    coeff = Fraction(1)
    have_coeff = False
    if tok[0] == "num":
        coeff = _parse_rational(ts)
        have_coeff = True
    elif tok[0] == "sym" and tok[1] == "(":
        ts.next()
        coeff = _parse_radical_expression(ts)
        ts.expect("sym", ")")
        have_coeff = True
    if have_coeff:
        ts.accept("sym", "*")
        mono = _parse_monomial(ts, vars)
        if mono is None:
            mono = (0, 0)
    else:
        mono = _parse_monomial(ts, vars)
        if mono is None:
            raise ParseError("expected a coefficient or a monomial", tok[2])
    return coeff, mono


def parse_form(text: str, vars: tuple[str, str] = ("x", "y")) -> BinaryForm:
    """Parse an expression into an exact homogeneous binary form."""
    ts = _Tokens(text)
    if ts.peek() is None:
        raise ParseError("empty input", 0)
    terms: list[tuple[object, tuple[int, int]]] = []
    negative = ts.accept("sym", "-")
    while True:
        start = ts.peek()[2] if ts.peek() else len(text)
        coeff, mono = _parse_term(ts, vars)
        terms.append(((-coeff if negative else coeff), mono))
        if ts.accept("sym", "+"):
            negative = False
        elif ts.accept("sym", "-"):
            negative = True
        else:
            break
    tok = ts.peek()
    if tok is not None:
        raise ParseError(f"trailing input {tok[1]!r}", tok[2])
    degrees = {ex + ey for _, (ex, ey) in terms}
    if len(degrees) > 1:
        raise ParseError(f"non-homogeneous input: degrees {sorted(degrees)}", 0)
    d = degrees.pop()
    coeffs: list = [Fraction(0)] * (d + 1)
    for coeff, (ex, ey) in terms:
        coeffs[ey] = coeffs[ey] + coeff
    form = BinaryForm(d, tuple(coeffs))
    if form.is_zero() and not all(is_zero(c) for c, _ in terms):
        raise ParseError("terms cancel to the zero form", 0)
    return form


def parse_scalar(text: str):
    """Parse a standalone scalar in the coefficient grammar."""
    ts = _Tokens(text)
    value = _parse_radical_expression(ts)
    if ts.peek() is not None:
        raise ParseError(f"trailing input {ts.peek()[1]!r}", ts.peek()[2])
    return value


_NUMERIC_RE = re.compile(
    r"^\s*(?P<re>[+-]?\d+\.\d*(?:e[+-]?\d+)?|[+-]?\d+e[+-]?\d+|[+-]?\.\d+(?:e[+-]?\d+)?|[+-]?\d+)"
    r"(?:\s*(?P<op>[+-])\s*(?P<im>\d+\.\d*(?:e[+-]?\d+)?|\d+e[+-]?\d+|\.\d+(?:e[+-]?\d+)?|\d+)\s*\*\s*i)?\s*$"
)


def parse_scalar_or_numeric(text: str, prec: int = 256):
    """Exact scalar when the text fits the grammar, BigApprox otherwise."""
    try:
        return parse_scalar(text)
    except ParseError:
        pass
    m = _NUMERIC_RE.match(text)
    if not m:
        raise ParseError(f"cannot parse scalar {text!r}", 0)
    with mpmath.workprec(prec + 20):
        re_part = mpmath.mpf(m.group("re"))
        if m.group("im") is not None:
            im = mpmath.mpf(m.group("im"))
            if m.group("op") == "-":
                im = -im
            value = mpmath.mpc(re_part, im)
        else:
            value = re_part
        return BigApprox(value, BigApprox._slack(value, prec), prec)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _plain_rational(c) -> Fraction | None:
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, Fraction):
        return c
    if isinstance(c, QuadExt) and c.b == 0:
        return c.a
    if isinstance(c, TowerScalar):
        demoted = c.as_quadext()
        if isinstance(demoted, Fraction):
            return demoted
    return None


def _monomial_text(xpow: int, ypow: int, vars: tuple[str, str]) -> str:
    parts = []
    for v, p in ((vars[0], xpow), (vars[1], ypow)):
        if p == 1:
            parts.append(v)
        elif p > 1:
            parts.append(f"{v}^{p}")
    return "*".join(parts)


def render_form(f: BinaryForm, vars: tuple[str, str] = ("x", "y")) -> str:
    """Render a form in the grammar accepted by :func:`parse_form`."""
    d = f.degree
    pieces: list[tuple[int, str]] = []  # (sign, body)
    for i, c in enumerate(f.coeffs):
        if is_zero(c):
            continue
        mono = _monomial_text(d - i, i, vars)
        q = _plain_rational(c)
        if q is not None:
            sg = 1 if q > 0 else -1
            mag = abs(q)
            if not mono:
                body = scalar_text(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{scalar_text(mag)}*{mono}"
        else:
            sg = 1
            body = f"({scalar_text(c)})" + (f"*{mono}" if mono else "")
        pieces.append((sg, body))
    if not pieces:
        return "0"
    out = []
    for k, (sg, body) in enumerate(pieces):
        if k == 0:
            out.append(f"-{body}" if sg < 0 else body)
        else:
            out.append(f"- {body}" if sg < 0 else f"+ {body}")
    return " ".join(out)
