"""Text grammar for polynomials: ``2*X^3*Y + Z^4 - g*X*Z^3``.

Variables are X, Y, Z (ternary) or s, t (binary); integer coefficients are
reduced into the field and ``g`` is the extension generator.  Parentheses and
powers of parenthesized groups are accepted, so ``(s+t)^4`` works.
"""

from __future__ import annotations

import re

from .forms import BinaryForm, MPoly, TernaryForm, XYZ


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0, line: int | None = None):
        self.text = text
        self.pos = pos
        self.line = line
        loc = "column %d" % (pos + 1)
        if line is not None:
            loc = "line %d, %s" % (line, loc)
        super().__init__("%s (%s)" % (message, loc))


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(\*\*|[-+*^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            pos += len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError("unexpected character %r" % text[pos], text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("num", int(m.group(1)), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            out.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, field, variables, text):
        self.F = field
        self.vars = tuple(variables)
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg):
        raise ParseError(msg, self.text, self.peek()[2])

    def const(self, c):
        return MPoly.constant(self.F, self.vars, c)

    def parse(self):
        e = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected %r" % (self.peek()[1],))
        return e

    def expr(self):
        sign = None
        if self.peek()[:2] == ("op", "-"):
            self.take()
            sign = "-"
        elif self.peek()[:2] == ("op", "+"):
            self.take()
        acc = self.term()
        if sign:
            acc = -acc
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.power()
        while True:
            tok = self.peek()
            if tok[:2] == ("op", "*"):
                self.take()
                acc = acc * self.power()
            elif tok[0] in ("num", "name") or tok[:2] == ("op", "("):
                acc = acc * self.power()  # implicit multiplication: 2X, X Y
            else:
                return acc

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.i -= 1
                self.fail("exponent must be a nonnegative integer")
            base = base ** tok[1]
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        F = self.F
        if kind == "num":
            return self.const(F.from_int(val))
        if kind == "name":
            if val in self.vars:
                return MPoly.variable(F, self.vars, val)
            if val == "g":
                try:
                    return self.const(F.gen)
                except ValueError:
                    raise ParseError("'g' needs an extension field", self.text, pos)
            raise ParseError("unknown symbol %r" % val, self.text, pos)
        if kind == "op" and val == "(":
            e = self.expr()
            if self.take()[:2] != ("op", ")"):
                self.i -= 1
                self.fail("expected ')'")
            return e
        self.i -= 1
        self.fail("unexpected end of input" if kind == "end" else "unexpected %r" % (val,))


def parse_mpoly(field, text: str, variables) -> MPoly:
    return _Parser(field, variables, text).parse()


def parse_ternary(field, text: str) -> TernaryForm:
    f = parse_mpoly(field, text, XYZ)
    if f.is_zero():
        raise ParseError("the zero polynomial is not a curve", text, 0)
    degs = {sum(e) for e in f.terms}
    if len(degs) != 1:
        raise ParseError("polynomial is not homogeneous (degrees %s)" % sorted(degs), text, 0)
    return TernaryForm.from_mpoly(f)


def parse_binary(field, text: str, degree: int | None = None) -> BinaryForm:
    f = parse_mpoly(field, text, ("s", "t"))
    degs = {sum(e) for e in f.terms}
    if len(degs) > 1:
        raise ParseError("binary form is not homogeneous (degrees %s)" % sorted(degs), text, 0)
    if degree is None:
        degree = degs.pop() if degs else 0
    return BinaryForm.from_mpoly(f, degree)
