"""Galois points and dual-curve invariants of plane curves over finite fields."""

from .algebra.fields import FieldError, field_make
from .bounds import bounds_report, summarize
from .contact import contact_with_escalation, dual_invariants, flex_table, kaji_genus_check
from .curvefile import load_curve, parse_curve_text
from .curves import (
    CurveError,
    PlaneCurve,
    ballico_hefez,
    cuspidal,
    curve_from_implicit,
    curve_from_param,
    family,
    fermat,
    genus_report,
    random_smooth,
    singular_points,
    tower_points,
)
from .galois import certify_point, deck_group, galois_survey
from .projection import galois_filter, projection_setup, riemann_hurwitz_audit

__version__ = "0.1.0"

__all__ = [
    "CurveError", "FieldError", "PlaneCurve",
    "ballico_hefez", "bounds_report", "certify_point", "contact_with_escalation",
    "curve_from_implicit", "curve_from_param", "cuspidal", "deck_group", "dual_invariants",
    "family", "fermat", "field_make", "flex_table", "galois_filter", "galois_survey",
    "genus_report", "kaji_genus_check", "load_curve", "parse_curve_text", "projection_setup",
    "random_smooth", "riemann_hurwitz_audit", "singular_points", "summarize", "tower_points",
]
