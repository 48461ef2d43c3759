"""Exact arithmetic substrate: finite fields, polynomials, forms, resultants."""

from .fields import QQ, Field, FieldElement, FieldError, embedding, extension, field_make
from .forms import BinaryForm, MPoly, TernaryForm
from .parse import ParseError, parse_binary, parse_mpoly, parse_ternary
from .poly import factor as _factor
from .resultant import eliminate_z, resultant_eliminate


def factor_univariate(field, f):
    """Irreducible factorization of a nonzero univariate polynomial.

    ``f`` is a coefficient list (low to high).  Returns ``[(factor, mult)]``
    with monic factors; the constant polynomial gives ``[]``.
    """
    return _factor(field, [c for c in f])


def projective_roots(f: BinaryForm, field=None):
    """Roots of a binary form rational over ``field`` (a subfield of the form's
    field given as a Field, or None for the form's own field)."""
    if f.is_zero():
        raise ValueError("the zero form vanishes everywhere")
    if field is None or field == f.field:
        return f.roots()
    if field.p != f.field.p:
        raise FieldError("%r and %r have different characteristic" % (field, f.field))
    if field.k % f.field.k == 0:
        return f.lift(field).roots()
    if f.field.k % field.k == 0:
        return f.roots(field.k)
    raise FieldError("%r and %r are not nested" % (field, f.field))


__all__ = [
    "QQ",
    "BinaryForm",
    "Field",
    "FieldElement",
    "FieldError",
    "MPoly",
    "ParseError",
    "TernaryForm",
    "eliminate_z",
    "embedding",
    "extension",
    "factor_univariate",
    "field_make",
    "parse_binary",
    "parse_mpoly",
    "parse_ternary",
    "projective_roots",
    "resultant_eliminate",
]
