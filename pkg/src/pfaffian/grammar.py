"""Text syntax for polynomials, forms, vector fields, points and curve files.

Terms are separated by ``+``/``-``; products use ``*``; ``^`` is a power
when followed by an integer literal and a wedge product otherwise.
``d<var>`` is a basis covector, ``d/d<var>`` a basis vector field,
``p/q`` a rational literal and ``i`` the imaginary unit (``3i``, ``1/2i``)::

    x*dy - y*dx - dz
    (x + y)^2*dx^dy
    d/dy - x*d/dz
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .exterior import CScalar, KForm, Poly, PolyMap, VarSpace, VField, wedge
from .exterior.printing import format_poly

__all__ = [
    "parse_poly",
    "parse_form",
    "parse_field",
    "parse_scalar",
    "parse_point",
    "parse_vars",
    "CurveSpec",
    "parse_curve",
    "format_curve",
    "FormExpr",
]

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<field>d/d(?P<fname>[A-Za-z_]\w*))
  | (?P<number>\d+(?:/\d+)?(?:i(?![A-Za-z0-9_]))?)
  | (?P<badnum>\d+/(?!\d))
  | (?P<ident>[A-Za-z_]\w*)
  | (?P<op>[-+*^()])
""", re.VERBOSE)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _position(text, pos):
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _error(text, pos, message):
    line, col = _position(text, pos)
    return ParseError(message, line, col, text)


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise _error(text, pos, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind == "fname":
            kind = "field"
        if kind == "badnum":
            raise _error(text, pos, f"malformed rational {m.group(0)!r}")
        if kind != "ws":
            toks.append(_Tok(kind, m.group(0), pos))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


def _number(tok, text):
    body = tok.text
    imaginary = body.endswith("i")
    if imaginary:
        body = body[:-1]
    num, _, den = body.partition("/")
    if den and int(den) == 0:
        raise _error(text, tok.pos, f"malformed rational {tok.text!r} (zero denominator)")
    value = Fraction(int(num), int(den)) if den else Fraction(int(num))
    return CScalar(0, value) if imaginary else CScalar(value)


def _check_names(space):
    names = set(space.names)
    if "i" in names:
        raise ParseError("'i' is reserved for the imaginary unit", 1, 1)
    for n in sorted(names):
        if "d" + n in names:
            raise ParseError(f"variables {n!r} and {'d' + n!r} make 'd{n}' ambiguous", 1, 1)
    return space


class _Parser:
    """Recursive descent over a token list.

    ``mode`` is ``poly``, ``form`` or ``field``; it decides which atoms are
    legal. Values are KForms in form mode and Polys or VFields otherwise.
    """

    def __init__(self, text, space, mode):
        self.text = text
        self.space = space
        self.mode = mode
        _check_names(space)
        self.toks = _tokenize(text)
        self.k = 0

    @property
    def tok(self):
        return self.toks[self.k]

    def advance(self):
        t = self.toks[self.k]
        self.k += 1
        return t

    def fail(self, message, tok=None):
        tok = tok or self.tok
        raise _error(self.text, tok.pos, message)

    def expect(self, text):
        if self.tok.text != text:
            found = self.tok.text or "end of input"
            self.fail(f"expected {text!r}, found {found!r}")
        return self.advance()

    def run(self):
        if self.tok.kind == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.tok.kind != "end":
            self.fail(f"unexpected {self.tok.text!r}")
        return value

    # grammar

    def expr(self):
        negate = False
        if self.tok.text in "+-" and self.tok.kind == "op":
            negate = self.advance().text == "-"
        value = self.term()
        if negate:
            value = self.neg(value)
        while self.tok.kind == "op" and self.tok.text in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            value = self.add(value, rhs if op.text == "+" else self.neg(rhs), op)
        return value

    def term(self):
        value = self.unary()
        while self.tok.kind == "op" and self.tok.text == "*":
            op = self.advance()
            value = self.mul(value, self.unary(), op)
        return value

    def unary(self):
        if self.tok.kind == "op" and self.tok.text == "-":
            self.advance()
            return self.neg(self.unary())
        return self.power()

    def power(self):
        value = self.atom()
        while self.tok.kind == "op" and self.tok.text == "^":
            op = self.advance()
            nxt = self.tok
            if nxt.kind == "number" and "/" not in nxt.text and not nxt.text.endswith("i"):
                self.advance()
                value = self.pow(value, int(nxt.text), op)
            else:
                value = self.wedge(value, self.atom(), op)
        return value

    def atom(self):
        tok = self.tok
        if tok.kind == "number":
            self.advance()
            return self.const(_number(tok, self.text))
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        if tok.kind == "field":
            self.advance()
            name = tok.text[3:]
            if self.mode != "field":
                self.fail(f"vector field token {tok.text!r} is not allowed here", tok)
            if name not in self.space.names:
                self.fail(f"unknown variable {name!r}", tok)
            return VField.basis(self.space, name)
        if tok.kind == "ident":
            self.advance()
            name = tok.text
            if name in self.space.names:
                return self.const_poly(Poly.var(self.space, name))
            if name == "i":
                return self.const(CScalar(0, 1))
            if name.startswith("d") and name[1:] in self.space.names:
                if self.mode != "form":
                    self.fail(f"covector {name!r} is not allowed here", tok)
                return KForm.basis(self.space, name[1:])
            self.fail(f"unknown variable {name!r}", tok)
        if tok.kind == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {tok.text!r}")

    # value algebra

    def const(self, c):
        return self.const_poly(Poly.const(self.space, c))

    def const_poly(self, p):
        return KForm.from_poly(p) if self.mode == "form" else p

    def neg(self, v):
        return -v

    def add(self, a, b, op):
        if self.mode == "form":
            if a.degree != b.degree:
                self.fail(f"cannot add forms of degrees {a.degree} and {b.degree}", op)
            return a + b
        if type(a) is not type(b):
            if isinstance(a, Poly) and not a:
                return b
            if isinstance(b, Poly) and not b:
                return a
            self.fail("cannot add a vector field and a function", op)
        return a + b

    def mul(self, a, b, op):
        if self.mode == "form":
            if a.degree and b.degree:
                self.fail("use '^' for the wedge product of two forms", op)
            return wedge(a, b)
        if isinstance(a, VField) and isinstance(b, VField):
            self.fail("cannot multiply two vector fields", op)
        return a * b if not isinstance(b, VField) else b * a

    def pow(self, a, k, op):
        if self.mode == "form":
            if a.degree:
                self.fail("powers of forms are not defined; use '^' between forms", op)
            return KForm.from_poly(a.as_poly() ** k)
        if isinstance(a, VField):
            self.fail("powers of vector fields are not defined", op)
        return a ** k

    def wedge(self, a, b, op):
        if self.mode != "form":
            self.fail("exponent must be a non-negative integer literal", op)
        return wedge(a, b)


def parse_vars(text):
    """Comma-separated variable list, e.g. ``"x,y,z"``."""
    try:
        space = VarSpace(text)
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1, text) from None
    return _check_names(space)


def _space(variables):
    return variables if isinstance(variables, VarSpace) else VarSpace(variables)


def parse_poly(text, variables):
    return _Parser(text, _space(variables), "poly").run()


def parse_form(text, variables):
    """Parse a differential form; a text without covectors gives a 0-form."""
    return _Parser(text, _space(variables), "form").run()


def parse_field(text, variables):
    space = _space(variables)
    value = _Parser(text, space, "field").run()
    if isinstance(value, Poly):
        if value:
            raise ParseError("expected a vector field (use d/d<var> tokens)", 1, 1, text)
        return VField.zero(space)
    return value


def parse_scalar(text):
    value = _Parser(text, VarSpace(()), "poly").run()
    return value.constant_term()


def parse_point(text):
    """Comma-separated scalars, e.g. ``"1, 1/2 + 3i, 0"``."""
    parts = text.split(",")
    out = []
    offset = 0
    for part in parts:
        if not part.strip():
            raise ParseError("empty coordinate", 1, offset + 1, text)
        try:
            out.append(parse_scalar(part))
        except ParseError as exc:
            raise ParseError(exc.reason, 1, offset + exc.column, text) from None
        offset += len(part) + 1
    return tuple(out)


@dataclass(frozen=True)
class FormExpr:
    """Source text of a form together with its parsed value."""

    source: str
    form: KForm
    space: VarSpace

    @classmethod
    def parse(cls, source, variables):
        space = _space(variables)
        return cls(source, parse_form(source, space), space)

    def __str__(self):
        return str(self.form)


@dataclass(frozen=True)
class CurveSpec:
    """Contents of a curve file: a polynomial curve plus its parameter range."""

    map: PolyMap
    t_start: CScalar
    t_end: CScalar


def parse_curve(text, target):
    """Read the curve-file format.

    ::

        vars: t
        x = t
        y = t^2
        z = 1/3*t^3
        t_start=0
        t_end=1

    Coordinate lines must name every target variable, in order. Blank
    lines and ``#`` comments are ignored. Missing range lines default to
    0 and 1.
    """
    target = _space(target)
    lines = [(n + 1, raw.split("#", 1)[0].strip()) for n, raw in enumerate(text.splitlines())]
    lines = [(n, s) for n, s in lines if s]
    if not lines or not lines[0][1].startswith("vars:"):
        raise ParseError("curve file must start with 'vars: <parameter>'", lines[0][0] if lines else 1, 1)
    n0, header = lines[0]
    try:
        source = VarSpace(header[len("vars:"):])
    except ValueError as exc:
        raise ParseError(str(exc), n0, 1) from None
    if source.dim != 1:
        raise ParseError("curve files declare exactly one parameter", n0, 1)
    comps, t_start, t_end = [], CScalar(0), CScalar(1)
    for n, s in lines[1:]:
        key, eq, rhs = s.partition("=")
        if not eq:
            raise ParseError("expected '<name> = <expression>'", n, 1)
        key = key.strip()
        try:
            if key in ("t_start", "t_end"):
                value = parse_scalar(rhs)
                if key == "t_start":
                    t_start = value
                else:
                    t_end = value
                continue
            expected = target.names[len(comps)] if len(comps) < target.dim else None
            if key != expected:
                raise ParseError(
                    f"expected coordinate {expected!r}, found {key!r}" if expected
                    else f"unexpected extra coordinate {key!r}", n, 1)
            comps.append(parse_poly(rhs, source))
        except ParseError as exc:
            if exc.line == 1 and exc.text is not None:
                raise ParseError(exc.reason, n, len(key) + 2 + exc.column) from None
            raise
    if len(comps) != target.dim:
        raise ParseError(f"curve gives {len(comps)} of {target.dim} coordinates", lines[-1][0], 1)
    return CurveSpec(PolyMap(source, target, comps), t_start, t_end)


def format_curve(curve_map, t_start=0, t_end=1):
    """Render a curve in the curve-file format read by :func:`parse_curve`."""
    lines = [f"vars: {curve_map.source}"]
    for name, comp in zip(curve_map.target.names, curve_map.components):
        lines.append(f"{name} = {format_poly(comp)}")
    lines.append(f"t_start={t_start}")
    lines.append(f"t_end={t_end}")
    return "\n".join(lines) + "\n"
