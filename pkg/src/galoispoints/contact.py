"""Generic order of contact, flexes and invariants of the dual map.

The generic order of contact M is found two ways that must agree:

* by enumeration, as the least tangent order nu over the non-singular
  branches of the tower;
* algebraically, as the least j >= 2 whose Hasse contact form does not vanish
  on the whole curve (implicit model) or whose Hasse Wronskian
  det(f, D^1 f, D^j f) is not identically zero (parametrized model).

Flexes are the branches with nu > M; their weights nu - M add up to the
Stohr-Voloch sum.  The dual map contributes q (inseparable degree), s (number
of branches sharing a general tangent) and d* (degree of the dual curve).
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field as dc_field

from .algebra import poly
from .algebra.fields import embedding
from .algebra.forms import BinaryForm, TernaryForm
from .algebra.linalg import cross
from .algebra.resultant import eliminate_z
from .branches import (
    Branch,
    branch_at_param,
    branch_at_smooth_point,
    param_points_of_level,
)
from .curves import (
    CurveError,
    PlaneCurve,
    ProjPoint,
    common_zeros,
    genus_of,
    implicitize,
    multiplicity_at,
    points_of_level,
    singular_points,
    tower_field,
)

log = logging.getLogger(__name__)

MIN_SAMPLE = 5
MAX_CONTACT_K = 8  # tallest tower tried when sampling for M


class ContactError(CurveError):
    """Contact data could not be determined soundly."""


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


# ---------------------------------------------------------------------------
# algebraic route


def _compositions(j: int):
    for a in range(j + 1):
        for b in range(j - a + 1):
            yield (a, b, j - a - b)


def _pow_cache(f: TernaryForm, n: int) -> list[TernaryForm]:
    out = [TernaryForm(f.field, 0, {(0, 0, 0): f.field.one})]
    for _ in range(n):
        out.append(out[-1] * f)
    return out


def hasse_contact_form(F: TernaryForm, j: int, w) -> TernaryForm:
    """sum over |a| = j of D^a F * v^a with v = grad F x w.

    At a smooth point P of V(F) not on the line w and with tangent line
    other than w, this is the u^j coefficient of F(P + u v), where v is a
    tangent direction; so its order of vanishing in j is the tangent order.
    """
    K = F.field
    grad = F.gradient()
    w = tuple(TernaryForm(K, 0, {(0, 0, 0): c} if c else {}) for c in w)
    v = [grad[1] * w[2] - grad[2] * w[1],
         grad[2] * w[0] - grad[0] * w[2],
         grad[0] * w[1] - grad[1] * w[0]]
    pw = [_pow_cache(vi, j) for vi in v]
    deg = F.degree - j + j * (F.degree - 1)
    acc = TernaryForm(K, deg, {})
    for a in _compositions(j):
        h = F.hasse(a)
        if h.is_zero():
            continue
        acc = acc + h * pw[0][a[0]] * pw[1][a[1]] * pw[2][a[2]]
    return acc


def _vanishes_on(F: TernaryForm, G: TernaryForm) -> bool:
    """True iff the irreducible F divides G."""
    if G.is_zero():
        return True
    try:
        G.exquo(F)
    except ArithmeticError:
        return False
    return True


def _affine(C: PlaneCurve) -> list[list]:
    return [f.coeffs_trimmed() for f in C.param]


def hasse_wronskian(C: PlaneCurve, j: int) -> list:
    """det(f, D^1 f, D^j f) for the affine parametrization t = 1."""
    K = C.field
    f = _affine(C)
    rows = [f, [poly.hasse(K, g, 1) for g in f], [poly.hasse(K, g, j) for g in f]]
    (a, b, c), (d, e, g), (h, i, k) = rows

    def m(x, y):
        return poly.mul(K, x, y)

    t1 = m(a, poly.sub(K, m(e, k), m(g, i)))
    t2 = m(b, poly.sub(K, m(d, k), m(g, h)))
    t3 = m(c, poly.sub(K, m(d, i), m(e, h)))
    return poly.add(K, poly.sub(K, t1, t2), t3)


def algebraic_contact_order(C: PlaneCurve) -> int:
    """Exact generic order of contact, from the model's equations."""
    d = C.degree
    if C.param is not None:
        for j in range(2, d + 1):
            if hasse_wronskian(C, j):
                return j
        raise ContactError("every tangent line meets the curve with full order")
    K = C.field
    e1 = (K.one, K.zero, K.zero)
    for j in range(2, d + 1):
        if not _vanishes_on(C.form, hasse_contact_form(C.form, j, e1)):
            return j
    raise ContactError("every tangent line meets the curve with full order")


# ---------------------------------------------------------------------------
# generic_contact


@dataclass(frozen=True)
class ContactProfile:
    M: int
    evidence: tuple  # (Branch, nu) pairs, every enumerated non-singular branch
    k_used: int
    algebraic_M: int

    @property
    def sample_size(self) -> int:
        return len(self.evidence)


def _level_branches(C: PlaneCurve, j: int) -> list[Branch]:
    K = C.field
    if C.param is not None:
        L = tower_field(K, j)
        return [branch_at_param(C, st, L) for st in param_points_of_level(K, j)]
    return [branch_at_smooth_point(C, P) for P in points_of_level(C, j)
            if multiplicity_at(C, P) == 1]


def generic_contact(C: PlaneCurve, k_max: int = 4) -> ContactProfile:
    """M as the least tangent order over the tower, confirmed algebraically.

    Enumeration stops early once nu = 2 has been seen on enough branches,
    since no tangent order is below 2.
    """
    evidence = []
    k_used = 0
    for j in range(1, k_max + 1):
        k_used = j
        for B in _level_branches(C, j):
            if B.multiplicity == 1:
                evidence.append((B, B.nu))
        if len(evidence) >= MIN_SAMPLE and min(nu for _, nu in evidence) == 2:
            break
    if len(evidence) < MIN_SAMPLE:
        raise ContactError("insufficient sample: %d non-singular branches within GF(q^%d)"
                           % (len(evidence), k_max))
    m_enum = min(nu for _, nu in evidence)
    m_alg = algebraic_contact_order(C)
    if m_enum < m_alg:
        raise AssertionError("a branch has tangent order %d below the generic order %d"
                             % (m_enum, m_alg))
    if m_enum > m_alg:
        raise ContactError("insufficient sample: every branch within GF(q^%d) is a flex"
                           % k_max)
    p = C.field.p
    if m_enum >= 3 and p and not _is_power_of(m_enum, p):
        raise ContactError("generic order %d is not a power of the characteristic %d"
                           % (m_enum, p))
    return ContactProfile(m_enum, tuple(evidence), k_used, m_alg)


def contact_with_escalation(C: PlaneCurve, k_max: int = 4) -> ContactProfile:
    """generic_contact, doubling the tower while the sample is too small
    (a whole field can consist of flexes)."""
    k = k_max
    while True:
        try:
            return generic_contact(C, k)
        except ContactError as exc:
            if "insufficient sample" not in str(exc) or k >= MAX_CONTACT_K:
                raise
            log.info("%s; retrying with a taller tower", exc)
            k = min(2 * k, MAX_CONTACT_K)



# ---------------------------------------------------------------------------
# flexes


@dataclass(frozen=True)
class FlexEntry:
    branch: Branch
    nu: int
    weight: int


@dataclass(frozen=True)
class FlexTable:
    M: int
    entries: tuple
    complete: bool
    bound: int

    @property
    def sv_sum(self) -> int:
        return sum(e.weight for e in self.entries)


def sv_bound(M: int, g: int, d: int) -> int:
    return (M + 1) * (2 * g - 2) + 3 * d


def _binary_cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def singular_param_form(C: PlaneCurve) -> BinaryForm:
    """Binary form whose roots are the parameters of singular branches."""
    f = C.param
    g = None
    for deriv in ([c.derivative_s() for c in f], [c.derivative_t() for c in f]):
        for comp in _binary_cross(f, deriv):
            if not comp.is_zero():
                g = comp if g is None else g.gcd(comp)
    if g is None:
        raise ContactError("the parametrization is degenerate")
    return g


def _param_flexes(C: PlaneCurve, M: int, k_max: int):
    K = C.field
    W = hasse_wronskian(C, M)
    sing = singular_param_form(C).coeffs_trimmed()
    out, complete = [], True
    for h, _ in poly.factor(K, W):
        if len(poly.gcd(K, h, sing)) > 1:
            continue  # parameters of singular branches
        n = len(h) - 1
        if n > k_max:
            complete = False
            continue
        L = tower_field(K, n)
        t = embedding(K, L)
        for x in poly.roots_in(L, [t[c] for c in h], L.k):
            out.append(branch_at_param(C, (x, L.one), L))
    B = branch_at_param(C, (K.one, K.zero), K)
    if B.multiplicity == 1 and B.nu > M:
        out.append(B)
    return out, complete


def _implicit_flexes(C: PlaneCurve, M: int, k_max: int):
    K = C.field
    basis = [(K.one, K.zero, K.zero), (K.zero, K.one, K.zero), (K.zero, K.zero, K.one)]
    forms = [hasse_contact_form(C.form, M, w) for w in basis]
    zs = common_zeros(C.form, forms, k_max)
    out = []
    for P in zs.points:
        if multiplicity_at(C, P) == 1:
            out.append(branch_at_smooth_point(C, P))
    complete = zs.complete and not singular_points(C, k_max).points
    return out, complete


def flex_table(C: PlaneCurve, k_max: int = 4, profile: ContactProfile | None = None) -> FlexTable:
    """Every flex within the tower with its weight nu - M.

    Flexes are located exactly (zeros of the contact forms, or of the
    Wronskian), so completeness is certified whenever the flex locus splits
    within GF(q^k_max).  On implicit curves with singular points the branches
    over those points are out of reach and completeness is reported false.
    """
    if profile is None:
        profile = contact_with_escalation(C, k_max)
    g = genus_of(C)
    if g is None:
        raise ContactError("the genus is undetermined")
    M = profile.M
    if C.param is not None:
        found, complete = _param_flexes(C, M, k_max)
    else:
        found, complete = _implicit_flexes(C, M, k_max)
    entries = []
    for B in sorted(found, key=Branch.sort_key):
        if B.nu < M:
            raise AssertionError("branch %s has nu below M" % B.format())
        if B.nu > M:
            entries.append(FlexEntry(B, B.nu, B.nu - M))
    bound = sv_bound(M, g, C.degree)
    table = FlexTable(M, tuple(entries), complete, bound)
    if table.sv_sum > bound:
        raise AssertionError("flex weights %d exceed the bound %d" % (table.sv_sum, bound))
    return table


# ---------------------------------------------------------------------------
# dual map


@dataclass(frozen=True)
class DualInvariants:
    q_gamma: int
    s_gamma: int
    d_star: int | None
    genus: int | None
    degree: int
    immersed: bool | None  # every branch non-singular (None: unknown)
    notes: tuple = dc_field(default=())

    @property
    def plucker_lhs(self) -> int | None:
        if self.d_star is None:
            return None
        return self.s_gamma * self.q_gamma * self.d_star

    @property
    def plucker_rhs(self) -> int | None:
        if self.genus is None:
            return None
        return 2 * self.genus - 2 + 2 * self.degree

    @property
    def equality(self) -> bool | None:
        if self.plucker_lhs is None or self.plucker_rhs is None:
            return None
        return self.plucker_lhs == self.plucker_rhs


def inseparable_degree(p: int, M: int) -> int:
    """q(gamma): 1 for reflexive curves (p != 2 and M = 2), otherwise M."""
    return 1 if (p != 2 and M == 2) else M


def _sample_field(K, minimum: int = 50):
    j = 1
    while tower_field(K, j).q < minimum:
        j += 1
    return tower_field(K, j)


def _sample_fields(K, low: int = 16, high: int = 4096):
    """Tower fields with low <= size <= high, smallest first.  Several are
    tried because a whole field may consist of flexes (Fermat over F_81)."""
    j = 1
    while tower_field(K, j).q < low:
        j += 1
    out = [tower_field(K, j)]
    while tower_field(K, j + 1).q <= high:
        j += 1
        out.append(tower_field(K, j))
    return out


def _multiple_roots(g: BinaryForm) -> BinaryForm:
    return g.gcd(g.derivative_s()).gcd(g.derivative_t())


def _count_excluding(A: BinaryForm, B: BinaryForm | None) -> int:
    """Distinct roots of A over the algebraic closure that are not roots of B."""
    n = A.distinct_root_count()
    if B is not None and not B.is_zero():
        n -= A.gcd(B).distinct_root_count()
    return n


def _s_param(C: PlaneCurve, L, rng, trials: int, M: int) -> list[int]:
    comps = [f.lift(L) for f in C.param]
    sing = singular_param_form(C).lift(L)
    counts = []
    for _ in range(trials * 20):
        if len(counts) == trials:
            break
        x = L.random_element(rng)
        B = branch_at_param(C, (x, L.one), L)
        if B.multiplicity != 1 or B.nu != M:
            continue
        h = B.tangent.coords
        hf = comps[0].scale(h[0]) + comps[1].scale(h[1]) + comps[2].scale(h[2])
        counts.append(_count_excluding(_multiple_roots(hf), sing))
    return counts


def _random_points(C: PlaneCurve, L, rng, n: int) -> list[ProjPoint]:
    F = C.form.lift(L)
    out = []
    for _ in range(n * 40):
        if len(out) == n:
            break
        x = L.random_element(rng)
        f = F.z_polynomial(x, L.one)  # chart Y = 1, unknown Z
        if not f:
            continue
        roots = poly.roots_in(L, f, L.k)
        if roots:
            out.append(ProjPoint(L, (x, L.one, rng.choice(roots))))
    return out


def _s_implicit(C: PlaneCurve, L, rng, trials: int, M: int) -> list[int]:
    F = C.form.lift(L)
    grad = F.gradient()
    counts = []
    for P in _random_points(C, L, rng, trials * 4):
        if len(counts) == trials:
            break
        if multiplicity_at(C, P) != 1:
            continue
        B = branch_at_smooth_point(C, P)
        if B.nu != M:
            continue
        A, Bv = B.tangent.spanning_points()
        g = F.restrict_to_line(A.coords, Bv.coords)
        sing = None
        for G in grad:
            r = G.restrict_to_line(A.coords, Bv.coords)
            sing = r if sing is None else sing.gcd(r)
        counts.append(_count_excluding(_multiple_roots(g), sing))
    return counts


def _dual_param_degree(C: PlaneCurve) -> int:
    f = C.param
    g = _binary_cross(f, [c.derivative_s() for c in f])
    if all(c.is_zero() for c in g):
        raise ContactError("the tangent lines do not move")
    common = None
    for c in g:
        if not c.is_zero():
            common = c if common is None else common.gcd(c)
    n = g[0].degree - common.degree
    reduced = [BinaryForm(c.field, n, []) if c.is_zero() else c.exquo(common) for c in g]
    return implicitize(reduced).degree


def _random_matrix(L, rng):
    while True:
        M = [[L.random_element(rng) for _ in range(3)] for _ in range(3)]
        a = cross(L, M[0], M[1])
        if a[0] or a[1] or a[2]:
            if L.add(L.add(L.mul(a[0], M[2][0]), L.mul(a[1], M[2][1])), L.mul(a[2], M[2][2])):
                return M


def _polar_count(C: PlaneCurve, L, rng) -> int | None:
    """Distinct points of C where the tangent passes through a random point."""
    F = C.form.lift(L)
    grad = F.gradient()
    P = tuple(L.random_element(rng) for _ in range(3))
    if not any(P) or not F.evaluate(P):
        return None
    polar = grad[0].scale(P[0]) + grad[1].scale(P[1]) + grad[2].scale(P[2])
    if polar.is_zero() or _vanishes_on(C.form.lift(L), polar):
        return None  # P is a strange center
    A = _random_matrix(L, rng)
    Fm, Gm = F.compose_linear(A), polar.compose_linear(A)
    if not Fm.evaluate((L.zero, L.zero, L.one)):
        return None
    r = eliminate_z(Fm, Gm)
    if r.is_zero():
        return None
    return r.distinct_root_count()


def _majority(values: list[int]) -> int | None:
    if not values:
        return None
    best = max(set(values), key=lambda v: (values.count(v), -v))
    return best if 2 * values.count(best) > len(values) else None


def dual_invariants(C: PlaneCurve, k_max: int = 4, trials: int = 7, seed: int = 0,
                    profile: ContactProfile | None = None) -> DualInvariants:
    if profile is None:
        profile = contact_with_escalation(C, k_max)
    K = C.field
    M = profile.M
    rng = random.Random("dual:%d:%d:%s" % (K.p, K.k, seed))
    sampler = _s_param if C.param is not None else _s_implicit
    counts = []
    for L in _sample_fields(K):
        counts += sampler(C, L, rng, trials - len(counts), M)
        if len(counts) >= trials:
            break
    L = _sample_field(K)
    notes = []
    if C.param is not None:
        immersed = singular_param_form(C).degree == 0
    else:
        sing = singular_points(C, k_max)
        immersed = True if (sing.complete and not sing.points) else None
    if not counts:
        raise ContactError("no general branch found to measure s")
    s = min(counts)
    q = inseparable_degree(K.p, M)
    d_star = None
    if C.param is not None:
        d_star = _dual_param_degree(C)
    elif immersed:
        votes = [c for c in (_polar_count(C, L, rng) for _ in range(trials)) if c is not None]
        n = _majority(votes)
        if n is None:
            notes.append("undetermined d*: tangency counts %s have no majority" % votes)
        elif n % s:
            notes.append("undetermined d*: %d tangency points is not a multiple of s = %d" % (n, s))
        else:
            d_star = n // s
    else:
        notes.append("undetermined d*: implicit model with singular points")
    inv = DualInvariants(q, s, d_star, genus_of(C), C.degree, immersed, tuple(notes))
    if inv.equality is not None:
        if inv.plucker_lhs > inv.plucker_rhs:
            raise AssertionError("s q d* = %d exceeds 2g - 2 + 2d = %d"
                                 % (inv.plucker_lhs, inv.plucker_rhs))
        if immersed and not inv.equality:
            raise AssertionError("immersed curve with s q d* = %d != %d"
                                 % (inv.plucker_lhs, inv.plucker_rhs))
    return inv


# ---------------------------------------------------------------------------
# genus of the dual


@dataclass(frozen=True)
class KajiReport:
    genus: int | None
    dual_genus: int | None
    status: str  # "match", "mismatch" or "not determinable"
    reason: str


def kaji_genus_check(C: PlaneCurve, dual: DualInvariants | None = None) -> KajiReport:
    """Compare the genus of C with that of its dual when the latter is forced."""
    g = genus_of(C)
    if C.param is not None:
        gd, reason = 0, "the dual is parametrized by the tangent lines"
    else:
        if dual is None:
            try:
                dual = dual_invariants(C)
            except ContactError as exc:
                return KajiReport(g, None, "not determinable", str(exc))
        if dual.d_star is not None and dual.d_star <= 2:
            gd, reason = 0, "the dual is a line or a conic"
        else:
            return KajiReport(g, None, "not determinable",
                              "dual degree %s does not force the genus" % dual.d_star)
    if g is None:
        return KajiReport(None, gd, "not determinable", "genus of the curve is undetermined")
    return KajiReport(g, gd, "match" if g == gd else "mismatch", reason)
