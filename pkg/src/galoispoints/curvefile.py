"""Plain-text curve descriptions.

A description holds one directive per line; ``#`` starts a comment::

    field 3 1
    implicit X^4 + Y^4 + Z^4
    genus 3

or, for a parametrized curve::

    field 3 1
    param s^4 ; (s+t)^4 ; t^4

``field p k`` must come first.  Exactly one of ``implicit`` / ``param`` is
required; ``genus n`` is optional and is checked against the computed value
whenever the latter is available.
"""

from __future__ import annotations

from pathlib import Path

from .algebra.fields import FieldError, field_make
from .algebra.parse import ParseError, parse_binary, parse_ternary
from .curves import CurveError, PlaneCurve, curve_from_implicit, curve_from_param

__all__ = ["ParseError", "parse_curve_text", "load_curve"]

_DIRECTIVES = ("field", "implicit", "param", "genus")


def _split(raw: str) -> tuple[str, str, int]:
    """Directive keyword, argument text and the column where it starts."""
    body = raw.split("#", 1)[0].rstrip()
    stripped = body.lstrip()
    lead = len(body) - len(stripped)
    word, _, rest = stripped.partition(" ")
    arg = rest.lstrip()
    return word, arg, lead + len(word) + 1 + (len(rest) - len(arg))


def _relocate(err: ParseError, line: str, lineno: int, offset: int) -> ParseError:
    msg = str(err).rsplit(" (", 1)[0]
    return ParseError(msg, line, offset + err.pos, lineno)


def _ints(arg: str, n: int, raw: str, lineno: int, col: int) -> list[int]:
    parts = arg.split()
    if len(parts) != n:
        raise ParseError("expected %d integer(s)" % n, raw, col, lineno)
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise ParseError("expected integers, got %r" % arg, raw, col, lineno) from None


def parse_curve_text(text: str, label: str = "") -> PlaneCurve:
    field = None
    genus = None
    body = None  # (kind, arg, raw, lineno, col)
    for lineno, raw in enumerate(text.splitlines(), 1):
        word, arg, col = _split(raw)
        if not word:
            continue
        if word not in _DIRECTIVES:
            raise ParseError("unknown directive %r" % word, raw, len(raw) - len(raw.lstrip()), lineno)
        if word == "field":
            if field is not None:
                raise ParseError("field given twice", raw, 0, lineno)
            p, k = _ints(arg, 2, raw, lineno, col)
            try:
                field = field_make(p, k)
            except FieldError as exc:
                raise ParseError(str(exc), raw, col, lineno) from None
        elif word == "genus":
            (genus,) = _ints(arg, 1, raw, lineno, col)
            if genus < 0:
                raise ParseError("genus must be non-negative", raw, col, lineno)
        else:
            if field is None:
                raise ParseError("'field p k' must precede the curve", raw, 0, lineno)
            if body is not None:
                raise ParseError("only one implicit/param line is allowed", raw, 0, lineno)
            body = (word, arg, raw, lineno, col)
    if field is None:
        raise ParseError("missing 'field p k' line", text, 0, 1)
    if body is None:
        raise ParseError("missing 'implicit' or 'param' line", text, 0, 1)
    kind, arg, raw, lineno, col = body
    try:
        if kind == "implicit":
            try:
                F = parse_ternary(field, arg)
            except ParseError as exc:
                raise _relocate(exc, raw, lineno, col) from None
            return curve_from_implicit(F, genus=genus, label=label)
        comps = []
        offset = col
        for piece in arg.split(";"):
            lead = len(piece) - len(piece.lstrip())
            try:
                comps.append(parse_binary(field, piece.strip()))
            except ParseError as exc:
                raise _relocate(exc, raw, lineno, offset + lead) from None
            offset += len(piece) + 1
        if len(comps) != 3:
            raise ParseError("param needs three components separated by ';'", raw, col, lineno)
        n = max(f.degree for f in comps)
        comps = [parse_binary(field, piece.strip(), n) if f.degree != n and f.is_zero() else f
                 for f, piece in zip(comps, arg.split(";"))]
        C = curve_from_param(*comps, label=label)
        if genus not in (None, 0):
            raise CurveError("a parametrized curve has genus 0, not %d" % genus)
        return C
    except CurveError as exc:
        raise ParseError(str(exc), raw, col, lineno) from None


def load_curve(path) -> PlaneCurve:
    """Read a curve description; OSError propagates for unreadable files."""
    path = Path(path)
    return parse_curve_text(path.read_text(), label=path.stem)
