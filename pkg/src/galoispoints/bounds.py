"""Evaluate the Galois-point bounds on a surveyed curve.

Every record is exact integer arithmetic.  A record claims equality only when
the survey behind it is complete; a record that fails its inequality is an
alarm (a bug, or a curve with infinitely many Galois points, which the bounds
exclude).
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field as dc_field

from .algebra.linalg import det3, inverse, mat_mul, solve
from .branches import branches_at, common_field
from .contact import (
    ContactError,
    ContactProfile,
    DualInvariants,
    FlexTable,
    contact_with_escalation,
    dual_invariants,
    flex_table,
    singular_param_form,
    sv_bound,
)
from .curves import (
    CurveError,
    PlaneCurve,
    ballico_hefez,
    fermat,
    genus_report,
    intersection_multiplicity,
    singular_points,
    tangent_line_at,
    tower_field,
)
from .galois import GaloisSurvey, galois_survey

log = logging.getLogger(__name__)



class BoundsError(CurveError):
    pass


class UndeterminedGenus(BoundsError):
    pass


@dataclass(frozen=True)
class CurveSummary:
    label: str
    d: int
    p: int
    k: int
    g: int
    genus_method: str
    M: int
    delta: int
    delta_s: int
    survey_complete: bool
    sv_sum: int
    flex_complete: bool
    dual: DualInvariants | None
    k_max: int
    search_k: int
    contact: ContactProfile | None = dc_field(default=None, repr=False, compare=False)
    flexes: FlexTable | None = dc_field(default=None, repr=False, compare=False)
    survey: GaloisSurvey | None = dc_field(default=None, repr=False, compare=False)


def summarize(C: PlaneCurve, k_max: int = 4, search_k: int = 2, trials: int = 7,
              seed: int = 0, jobs: int = 1, survey: GaloisSurvey | None = None) -> CurveSummary:
    if C.degree < 4:
        raise BoundsError("the bounds concern curves of degree at least 4, not %d" % C.degree)
    gr = genus_report(C, k_max)
    if gr.value is None:
        raise UndeterminedGenus("genus undetermined: %s" % gr.diagnostic)
    contact = contact_with_escalation(C, k_max)
    flexes = flex_table(C, k_max, contact)
    try:
        dual = dual_invariants(C, k_max, trials, seed, contact)
    except ContactError as exc:
        log.warning("dual invariants unavailable: %s", exc)
        dual = None
    if survey is None:
        survey = galois_survey(C, k_max, search_k, jobs)
    K = C.field
    return CurveSummary(
        C.label, C.degree, K.p, K.k, gr.value, gr.method, contact.M,
        survey.delta, survey.delta_s, survey.complete, flexes.sv_sum, flexes.complete,
        dual, k_max, search_k, contact, flexes, survey,
    )


# ---------------------------------------------------------------------------
# verdict records


@dataclass(frozen=True)
class VerdictRecord:
    name: str
    lhs: int | None
    rhs: int
    relation: str  # "<=" or "<"
    holds: bool | None
    equality: bool
    caveats: tuple = ()

    def as_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "relation": self.relation,
                "holds": self.holds, "equality": self.equality, "caveats": list(self.caveats)}


def _record(name, lhs, rhs, complete, strict=False, caveats=()) -> VerdictRecord:
    caveats = list(caveats)
    holds = lhs < rhs if strict else lhs <= rhs
    if not complete:
        caveats.append("survey incomplete: the left side is a lower bound")
    if not holds:
        caveats.append("violated: a bug, or a curve with infinitely many Galois points")
    return VerdictRecord(name, lhs, rhs, "<" if strict else "<=", holds,
                         bool(complete and lhs == rhs), tuple(caveats))


def main_bound(M: int, g: int, d: int) -> int:
    return sv_bound(M, g, d)


def main_theorem_check(s: CurveSummary) -> VerdictRecord:
    """delta <= (M+1)(2g-2) + 3d."""
    return _record("main-bound", s.delta, main_bound(s.M, s.g, s.d), s.survey_complete)


def corollary_checks(s: CurveSummary) -> list[VerdictRecord]:
    """The bound with singular Galois points added, and the strict bound for
    reflexive curves (M = 2)."""
    arith = (s.d - 1) * (s.d - 2) // 2
    out = [_record("with-singular-bound", s.delta + s.delta_s,
                   main_bound(s.M, s.g, s.d) + arith - s.g, s.survey_complete)]
    if s.M == 2:
        out.append(_record("reflexive-strict-bound", s.delta, 3 * (2 * s.g - 2) + 3 * s.d,
                           s.survey_complete, strict=True))
    return out


def char0_strict_bound(d: int, g: int, delta: int | None = None) -> VerdictRecord:
    """Formula-only evaluation in characteristic 0, where M = 2 always."""
    rhs = 3 * (2 * g - 2) + 3 * d
    if delta is None:
        return VerdictRecord("char0-strict-bound", None, rhs, "<", None, False,
                             ("formula only: no survey in characteristic 0",))
    return _record("char0-strict-bound", delta, rhs, False, strict=True,
                   caveats=("user-supplied delta",))


def _tangent_contact(C: PlaneCurve, P) -> int:
    if C.param is not None:
        (B,) = branches_at(C, P)
        return B.nu
    return intersection_multiplicity(C, P, tangent_line_at(C, P))


def proposition_checks(s: CurveSummary, C: PlaneCurve) -> list[VerdictRecord]:
    """Records whose hypotheses hold on the summary; others are skipped."""
    out = []
    d, M, g = s.d, s.M, s.g
    survey = s.survey
    sing = singular_points(C, s.k_max)
    if d + 2 <= 2 * M and M <= d - 1:
        rec = _record("high-contact-bound", s.delta * (d - M), main_bound(M, g, d),
                      s.survey_complete)
        bad = []
        if survey is not None:
            for P in survey.galois_points(smooth=True):
                if _tangent_contact(C, P) != d:
                    bad.append(P.format())
        cav = list(rec.caveats)
        if bad:
            cav.append("Galois points without full tangent contact: %s" % ", ".join(bad))
        else:
            cav.append("every certified smooth Galois point has tangent contact %d" % d)
        out.append(VerdictRecord(rec.name, rec.lhs, rec.rhs, rec.relation,
                                 rec.holds and not bad, rec.equality, tuple(cav)))
    if M == 2 and sing.complete and len(sing.points) == 1 and sing.points[0][1] == d - 1:
        Q = sing.points[0][0]
        unibranch = None
        if C.param is not None:
            unibranch = len(branches_at(C, Q, s.k_max)) == 1
        if unibranch:
            out.append(_record("unibranch-cusp-bound", s.delta, d - 2, s.survey_complete))
    no_big = sing.complete and all(m != d - 1 for _, m in sing.points)
    if no_big and 2 * g - 2 + 2 * d - 2 < s.delta:
        if C.param is not None:
            immersed = singular_param_form(C).degree == 0
        elif not sing.points:
            immersed = True
        elif s.genus_method == "ordinary singularities":
            immersed = True  # ordinary m-fold points carry m smooth branches
        else:
            immersed = None
        cav = ("conclusion: every branch is non-singular" if immersed
               else "conclusion undetermined" if immersed is None
               else "conclusion fails: a singular branch exists",)
        out.append(VerdictRecord("many-points-immersed", 2 * g - 2 + 2 * d - 2, s.delta, "<",
                                 immersed, False, cav))
    return out


# ---------------------------------------------------------------------------
# equality classification


@dataclass(frozen=True)
class EqualityClass:
    kind: str  # "fermat-type", "ballico-hefez-type", "neither", "unknown"
    matrix: tuple | None
    field: object
    attempts: int
    reason: str = ""


def _prime_power_exponent(n: int, p: int) -> int | None:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e if n == 1 and e > 0 else None


def _frame_matrix(W, pts):
    """Matrix sending e1, e2, e3, (1,1,1) to the four points (up to scale)."""
    A = [[pts[c][r] for c in range(3)] for r in range(3)]
    lam = solve(W, A, list(pts[3]))
    if lam is None or not all(lam):
        return None
    return [[W.mul(A[r][c], lam[c]) for c in range(3)] for r in range(3)]


def _general_position(W, pts) -> bool:
    for a, b, c in itertools.combinations(pts, 3):
        if not det3(W, [list(a), list(b), list(c)]):
            return False
    return True


def _typed_points(survey: GaloisSurvey, W):
    out = []
    for r in survey.records:
        if r.verdict == "galois":
            P = r.point if r.point.field == W else r.point.lift(W)
            out.append((r.smooth, P.coords))
    return out


def _match(C: PlaneCurve, T: PlaneCurve, sc: GaloisSurvey, st: GaloisSurvey, budget: int):
    K = C.field
    pts = [r.point for r in sc.records if r.verdict == "galois"]
    pts += [r.point for r in st.records if r.verdict == "galois"]
    if not pts:
        return None, 0
    W = common_field(K, *pts)
    src = _typed_points(sc, W)
    dst = _typed_points(st, W)
    frame = None
    for quad in itertools.combinations(src, 4):
        if _general_position(W, [q[1] for q in quad]):
            frame = quad
            break
    if frame is None:
        return None, 0
    Bc = _frame_matrix(W, [q[1] for q in frame])
    Fc = C.form.lift(W)
    Ft = T.form.lift(W)
    attempts = 0
    for quad in itertools.permutations(dst, 4):
        if any(quad[i][0] != frame[i][0] for i in range(4)):
            continue
        if not _general_position(W, [q[1] for q in quad]):
            continue
        attempts += 1
        if attempts > budget:
            return "budget", attempts
        Bt = _frame_matrix(W, [q[1] for q in quad])
        if Bt is None:
            continue
        M = mat_mul(W, Bc, inverse(W, Bt))  # target frame -> curve frame
        if Fc.compose_linear(M).proportional_to(Ft) is not None:
            return (tuple(map(tuple, M)), W), attempts
    return None, attempts


def _brute_force(C: PlaneCurve, T: PlaneCurve, W, budget: int):
    Fc, Ft = C.form.lift(W), T.form.lift(W)
    attempts = 0
    for entries in itertools.product(range(W.q), repeat=9):
        M = [list(entries[0:3]), list(entries[3:6]), list(entries[6:9])]
        if not det3(W, M):
            continue
        attempts += 1
        if attempts > budget:
            return "budget", attempts
        if Fc.compose_linear(M).proportional_to(Ft) is not None:
            return (tuple(map(tuple, M)), W), attempts
    return None, attempts


def equality_classify(C: PlaneCurve, s: CurveSummary, budget: int = 200_000) -> EqualityClass:
    """Match an equality curve with the Fermat or the Ballico-Hefez model.

    Projective equivalences carry Galois points to Galois points of the same
    kind, so a frame of four Galois points in general position is sent to
    each same-typed ordered frame of the model and the resulting matrix is
    tested; brute force over PGL(3) is the fallback when no frame exists.
    """
    if not main_theorem_check(s).equality:
        raise BoundsError("equality_classify needs a curve attaining the main bound")
    e = _prime_power_exponent(s.d - 1, s.p)
    if e is None:
        return EqualityClass("neither", None, None, 0,
                             "ALARM: equality with d - 1 = %d not a power of p = %d"
                             % (s.d - 1, s.p))
    K = C.field
    total = 0
    budget_hit = False
    for kind, model in (("fermat-type", fermat), ("ballico-hefez-type", ballico_hefez)):
        T = model(s.p, e)
        if T.field != K:
            T = T.lift(K)
        g_model = 0 if kind == "ballico-hefez-type" else (s.d - 1) * (s.d - 2) // 2
        if g_model != s.g:
            continue
        st = galois_survey(T, s.k_max, s.search_k)
        if (st.delta, st.delta_s) != (s.delta, s.delta_s):
            continue
        found, n = _match(C, T, s.survey, st, budget - total)
        total += n
        if found is None and n == 0:
            W = tower_field(K, min(2, s.k_max))
            found, n = _brute_force(C, T, W, budget - total)
            total += n
        if found == "budget":
            budget_hit = True
            continue
        if found is not None:
            M, W = found
            return EqualityClass(kind, M, W, total)
    if budget_hit:
        return EqualityClass("unknown", None, None, total, "budget exceeded")
    return EqualityClass("unknown", None, None, total,
                         "no projective equivalence found among Galois-point frames")


@dataclass(frozen=True)
class BoundsVerdict:
    summary: CurveSummary
    records: tuple
    classification: EqualityClass | None

    @property
    def alarm(self) -> bool:
        return any(r.holds is False for r in self.records) or (
            self.classification is not None and self.classification.kind == "neither")


def bounds_report(C: PlaneCurve, s: CurveSummary, budget: int = 200_000) -> BoundsVerdict:
    main = main_theorem_check(s)
    records = [main] + corollary_checks(s) + proposition_checks(s, C)
    cls = equality_classify(C, s, budget) if main.equality else None
    return BoundsVerdict(s, tuple(records), cls)
