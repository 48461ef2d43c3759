"""Plane curves: models, named families, points, multiplicities, genus.

A curve is stored by its defining ternary form.  Parametrized curves also
keep the three binary forms of the parametrization, which realize the
normalization map and give exact access to every branch.

Points and lines are projective triples normalized so that the last nonzero
coordinate is 1.  Everything over a finite field is computed inside a tower
``GF(q^j)`` of the curve's base field ``GF(q)``; a tower field always comes
from a direct lift of the base field, never from a chain of lifts.
"""

from __future__ import annotations

import functools
import logging
import random
from dataclasses import dataclass
from math import comb, gcd

from .algebra import poly
from .algebra.fields import QQ, Field, embedding, field_make
from .algebra.forms import BinaryForm, TernaryForm
from .algebra.linalg import complete_basis, cross, dot, nullspace
from .algebra.quotient import QuotientField
from .algebra.resultant import eliminate_z

log = logging.getLogger(__name__)


class CurveError(ValueError):
    """Invalid curve input or an unsupported query."""


# ---------------------------------------------------------------------------
# projective points and lines


def _normalize(F, coords) -> tuple:
    coords = tuple(coords)
    if len(coords) != 3:
        raise ValueError("expected three coordinates")
    for c in reversed(coords):
        if c:
            inv = F.inv(c)
            return tuple(F.mul(x, inv) for x in coords)
    raise ValueError("(0:0:0) is not a projective point")


@dataclass(frozen=True, order=False)
class _Proj:
    field: Field
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", _normalize(self.field, self.coords))

    @classmethod
    def of(cls, field, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        return cls(field, tuple(field.from_int(c) if isinstance(c, int) and field.k == 1 else c
                                for c in coords))

    def lift(self, dst):
        if dst == self.field:
            return self
        t = embedding(self.field, dst)
        return type(self)(dst, tuple(t[c] for c in self.coords))

    def frobenius(self, power: int = 1):
        F = self.field
        return type(self)(F, tuple(F.frobenius(c, power) for c in self.coords))

    def field_degree(self) -> int:
        """Degree over the prime field of the smallest field of definition."""
        F = self.field
        out = 1
        for c in self.coords:
            dc = F.degree_of(c) if c else 1
            out = out * dc // gcd(out, dc)
        return out

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def sort_key(self):
        return self.coords

    def format(self) -> str:
        F = self.field
        parts = []
        for c in self.coords:
            s = F.format(c)
            parts.append("(%s)" % s if " " in s else s)
        return "(%s)" % ":".join(parts)

    def __repr__(self):
        return "%s%s" % (type(self).__name__, self.format())


class ProjPoint(_Proj):
    """A point of the projective plane."""


class ProjLine(_Proj):
    """A line aX + bY + cZ = 0, stored as (a:b:c)."""

    def contains(self, P: ProjPoint) -> bool:
        return not dot(self.field, self.coords, P.coords)

    @classmethod
    def through(cls, P: ProjPoint, Q: ProjPoint) -> "ProjLine":
        if P == Q:
            raise ValueError("a line needs two distinct points")
        return cls(P.field, cross(P.field, P.coords, Q.coords))

    def meet(self, other: "ProjLine") -> ProjPoint:
        if self == other:
            raise ValueError("identical lines")
        return ProjPoint(self.field, cross(self.field, self.coords, other.coords))

    def spanning_points(self) -> tuple[ProjPoint, ProjPoint]:
        """Two distinct points of the line, chosen deterministically."""
        F = self.field
        e = [(F.one, F.zero, F.zero), (F.zero, F.one, F.zero), (F.zero, F.zero, F.one)]
        pts = []
        for v in e:
            w = cross(F, self.coords, v)
            if any(w):
                P = ProjPoint(F, w)
                if P not in pts:
                    pts.append(P)
            if len(pts) == 2:
                return pts[0], pts[1]
        raise AssertionError("unreachable")  # pragma: no cover

    def form(self) -> TernaryForm:
        return TernaryForm.linear(self.field, *self.coords)


def tower_field(base, j: int):
    """GF(q^j) for the base field GF(q)."""
    if base is QQ:
        raise CurveError("tower computations need a finite base field")
    return field_make(base.p, base.k * j)


# ---------------------------------------------------------------------------
# the curve type


class PlaneCurve:
    """An irreducible plane curve, given implicitly or by a parametrization.

    Instances are immutable and hashable; derived data (points, singular
    locus) is memoized by module-level caches keyed on the curve.
    """

    __slots__ = ("field", "form", "param", "declared_genus", "label",
                 "irreducibility", "absolute_irreducibility", "_key")

    def __init__(self, form: TernaryForm, *, param=None, genus=None, label="",
                 irreducibility="certified", absolute_irreducibility="assumed"):
        self.field = form.field
        self.form = form
        self.param = tuple(param) if param is not None else None
        self.declared_genus = genus
        self.label = label
        self.irreducibility = irreducibility
        self.absolute_irreducibility = absolute_irreducibility
        pk = None if self.param is None else tuple(f.coeffs for f in self.param)
        self._key = (form.field.key, form.degree, tuple(sorted(form.terms.items())), pk, genus)

    @property
    def degree(self) -> int:
        return self.form.degree

    @property
    def model(self) -> str:
        return "implicit" if self.param is None else "parametrized"

    @property
    def is_parametrized(self) -> bool:
        return self.param is not None

    def __eq__(self, other):
        return isinstance(other, PlaneCurve) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        name = self.label or self.form.format()
        return "PlaneCurve(%s, d=%d, %s over %r)" % (name, self.degree, self.model, self.field)

    def lift(self, dst) -> "PlaneCurve":
        return _lift_curve(self, dst)

    def contains(self, P: ProjPoint) -> bool:
        return not self.form.lift(P.field).evaluate(P.coords)

    def param_point(self, s, t) -> ProjPoint:
        """Image of the parameter (s:t); coordinates in the curve's field."""
        if self.param is None:
            raise CurveError("curve has no parametrization")
        return ProjPoint(self.field, tuple(f.evaluate(s, t) for f in self.param))


@functools.lru_cache(maxsize=256)
def _lift_curve(C: PlaneCurve, dst) -> PlaneCurve:
    if dst == C.field:
        return C
    param = None if C.param is None else tuple(f.lift(dst) for f in C.param)
    return PlaneCurve(C.form.lift(dst), param=param, genus=C.declared_genus, label=C.label,
                      irreducibility=C.irreducibility,
                      absolute_irreducibility=C.absolute_irreducibility)


# ---------------------------------------------------------------------------
# irreducibility checks


def _rational_lines(K, budget: int, rng: random.Random):
    q = K.q
    total = q * q + q + 1
    if total <= budget:
        idx = range(total)
    else:
        idx = sorted(rng.sample(range(total), budget))
    for n in idx:
        if n < q * q:
            a, b = divmod(n, q)
            yield (a, b, K.one)
        elif n < q * q + q:
            yield (n - q * q, K.one, K.zero)
        else:
            yield (K.one, K.zero, K.zero)


def _factor_degrees(K, f: BinaryForm) -> list[int]:
    degs = [1] * f.infinity_multiplicity()
    for g, m in poly.factor(K, f.coeffs_trimmed()):
        degs.extend([len(g) - 1] * m)
    return degs


def _subset_sums(degs: list[int]) -> set[int]:
    sums = {0}
    for d in degs:
        sums |= {s + d for s in sums}
    return sums


def _check_irreducible(F: TernaryForm, budget: int = 96) -> str:
    """Raise on a visible factorization; return "certified" when line
    restrictions rule out every factor degree, else "unverified"."""
    K = F.field
    d = F.degree
    possible = set(range(1, d))
    rng = random.Random(repr(sorted(F.terms.items())))
    for line in _rational_lines(K, budget, rng):
        L = ProjLine(K, line)
        A, B = L.spanning_points()
        r = F.restrict_to_line(A.coords, B.coords)
        if r.is_zero():
            raise CurveError("reducible: the form contains the line %s" % L.format())
        if possible:
            possible &= _subset_sums(_factor_degrees(K, r))
    if d <= 1:
        return "certified"
    return "certified" if not possible else "unverified"


# ---------------------------------------------------------------------------
# constructors


def curve_from_implicit(F: TernaryForm, *, genus=None, label="") -> PlaneCurve:
    """Build a curve from its defining form, checking irreducibility over the
    base field as far as line restrictions allow."""
    if not isinstance(F, TernaryForm):
        raise CurveError("expected a TernaryForm")
    if F.is_zero():
        raise CurveError("the zero form does not define a curve")
    if F.degree < 1:
        raise CurveError("a curve needs positive degree")
    if F.field is QQ:
        return PlaneCurve(F.monic_normalized(), genus=genus, label=label,
                          irreducibility="unverified")
    status = _check_irreducible(F)
    C = PlaneCurve(F.monic_normalized(), genus=genus, label=label, irreducibility=status)
    absolute = _absolute_irreducibility(C)
    if absolute == "certified":
        status = "certified"  # absolutely irreducible implies irreducible
    elif status != "certified":
        log.warning("irreducibility of %s over %r not certified", F.format(), F.field)
    if absolute != "certified":
        log.warning("absolute irreducibility of %s assumed", label or F.format())
    return PlaneCurve(C.form, genus=genus, label=label, irreducibility=status,
                      absolute_irreducibility=absolute)


def _absolute_irreducibility(C: PlaneCurve) -> str:
    # A curve irreducible over GF(q) but not over its closure splits into
    # r >= 2 conjugate components cyclically permuted by Frobenius.  For j
    # prime to d, every GF(q^j)-point lies on two distinct components, so
    # there are fewer than d^2/2 of them.
    d = C.degree
    K = C.field
    for j in range(1, 8):
        if gcd(j, d) != 1:
            continue
        if K.q**j > 4096:
            break
        if 2 * len(points_over(C, j)) >= d * d:
            return "certified"
    return "assumed"


def monomials(n: int) -> list[tuple[int, int, int]]:
    return [(a, b, n - a - b) for a in range(n, -1, -1) for b in range(n - a, -1, -1)]


def implicitize(comps, max_degree: int | None = None) -> TernaryForm:
    """Minimal-degree form vanishing on the image of three binary forms.

    Solves the linear system "F(f0, f1, f2) = 0" degree by degree; the first
    degree with a nonzero solution is the degree of the image curve.
    """
    K = comps[0].field
    n = comps[0].degree
    if max_degree is None:
        max_degree = n
    base = [f.coeffs_trimmed() for f in comps]
    pw = []
    for b in base:
        row = [[K.one]]
        for _ in range(max_degree):
            row.append(poly.mul(K, row[-1], b))
        pw.append(row)
    for e in range(1, max_degree + 1):
        monos = monomials(e)
        cols = []
        for a, b, c in monos:
            v = poly.mul(K, poly.mul(K, pw[0][a], pw[1][b]), pw[2][c])
            cols.append(v + [K.zero] * (e * n + 1 - len(v)))
        M = [[cols[j][i] for j in range(len(monos))] for i in range(e * n + 1)]
        ker = nullspace(K, M, len(monos))
        if ker:
            v = ker[0]
            return TernaryForm(K, e, {m: c for m, c in zip(monos, v) if c}).monic_normalized()
    raise CurveError("no implicit equation of degree <= %d" % max_degree)


def curve_from_param(f0: BinaryForm, f1: BinaryForm, f2: BinaryForm, *, label="") -> PlaneCurve:
    """Build a curve from a proper parametrization (s:t) -> (f0:f1:f2)."""
    comps = (f0, f1, f2)
    n = f0.degree
    if any(f.degree != n for f in comps):
        raise CurveError("components must share one degree")
    if n < 1:
        raise CurveError("constant parametrization")
    if any(f.field != f0.field for f in comps):
        raise CurveError("components live over different fields")
    g = f0.gcd(f1).gcd(f2)
    if g.is_zero() or len(g.coeffs_trimmed()) - 1 + g.infinity_multiplicity() > 0:
        raise CurveError("components have a common factor (%s)" % g.format())
    F = implicitize(comps, n)
    if F.degree < n:
        ratio = n // F.degree if n % F.degree == 0 else n / F.degree
        raise CurveError("improper parametrization: image has degree %d, map has degree %s"
                         % (F.degree, ratio))
    assert F.substitute_binary(comps).is_zero()
    return PlaneCurve(F, param=comps, genus=None, label=label,
                      absolute_irreducibility="certified")


FAMILIES = ("fermat", "ballico_hefez", "cuspidal", "random_smooth")


def _family_name(name: str) -> str:
    key = name.replace("-", "_").lower()
    if key not in FAMILIES:
        raise CurveError("unknown family %r (choose from %s)" % (name, ", ".join(FAMILIES)))
    return key


def fermat(p: int, e: int = 1) -> PlaneCurve:
    d = p**e + 1
    if d < 4:
        raise CurveError("Fermat family needs p^e + 1 >= 4 (got %d)" % d)
    K = field_make(p)
    F = TernaryForm(K, d, {(d, 0, 0): 1, (0, d, 0): 1, (0, 0, d): 1})
    C = curve_from_implicit(F, label="fermat(p=%d,e=%d)" % (p, e))
    return C


def ballico_hefez(p: int, e: int = 1) -> PlaneCurve:
    d = p**e + 1
    if d < 4:
        raise CurveError("Ballico-Hefez family needs p^e + 1 >= 4 (got %d)" % d)
    K = field_make(p)
    s_d = BinaryForm(K, d, [0] * d + [1])
    t_d = BinaryForm(K, d, [1] + [0] * d)
    st_d = BinaryForm(K, d, [K.from_int(comb(d, i)) for i in range(d + 1)])
    return curve_from_param(s_d, st_d, t_d, label="ballico_hefez(p=%d,e=%d)" % (p, e))


def cuspidal(p: int, k: int = 1, d: int = 4, seed: int = 0) -> PlaneCurve:
    """(s^d : t s^(d-1) : A(s, t)) with A(0, 1) != 0; its equation is
    X^(d-1) Z - A(X, Y) and (0:0:1) is a point of multiplicity d - 1."""
    if d < 3:
        raise CurveError("cuspidal family needs d >= 3")
    K = field_make(p, k)
    rng = random.Random("cuspidal:%d:%d:%d:%d" % (p, k, d, seed))
    A = [K.random_element(rng, nonzero=True)] + [K.random_element(rng) for _ in range(d)]
    f0 = BinaryForm(K, d, [0] * d + [1])
    f1 = BinaryForm(K, d, [0] * (d - 1) + [1, 0])
    f2 = BinaryForm(K, d, A)
    return curve_from_param(f0, f1, f2, label="cuspidal(p=%d,k=%d,d=%d,seed=%d)" % (p, k, d, seed))


def random_smooth(p: int, k: int = 1, d: int = 4, seed: int = 0, attempts: int = 200) -> PlaneCurve:
    K = field_make(p, k)
    rng = random.Random("smooth:%d:%d:%d:%d" % (p, k, d, seed))
    monos = monomials(d)
    for _ in range(attempts):
        terms = {m: K.random_element(rng) for m in monos}
        F = TernaryForm(K, d, terms)
        if F.is_zero():
            continue
        if not is_smooth(F):
            continue
        return curve_from_implicit(F, label="random_smooth(p=%d,k=%d,d=%d,seed=%d)" % (p, k, d, seed))
    raise CurveError("no smooth curve found in %d draws" % attempts)


def family(name: str, **params) -> PlaneCurve:
    """Named constructor: fermat, ballico_hefez, cuspidal, random_smooth."""
    key = _family_name(name)
    if key == "fermat":
        return fermat(params["p"], params.get("e", 1))
    if key == "ballico_hefez":
        return ballico_hefez(params["p"], params.get("e", 1))
    if key == "cuspidal":
        return cuspidal(params["p"], params.get("k", 1), params.get("d", 4), params.get("seed", 0))
    return random_smooth(params["p"], params.get("k", 1), params.get("d", 4), params.get("seed", 0))


# ---------------------------------------------------------------------------
# common zeros of forms on a curve


def _z_poly(form: TernaryForm, x, y, L, conv) -> list:
    out = [L.zero] * (form.degree + 1)
    for (a, b, c), coef in form.terms.items():
        v = L.mul(conv(coef), L.mul(L.pow(x, a), L.pow(y, b)))
        out[c] = L.add(out[c], v)
    return poly.strip(out)


def _chart(F: TernaryForm):
    """(level j, matrix M or None) with F(M (0,0,1)) != 0 and M defined over
    GF(q^j); j = 1 unless F vanishes on every base-field point."""
    K = F.field
    if F.evaluate((K.zero, K.zero, K.one)):
        return 1, None
    for j in (1, 2, 3, 4):
        E = tower_field(K, j)
        Fe = F.lift(E)
        q = E.q
        for n in range(min(q * q, 4096)):
            a, b = divmod(n, q)
            for P in ((a, b, E.one), (E.one, a % q, E.zero)):
                if Fe.evaluate(P):
                    return j, complete_basis(E, P)
    raise CurveError("the form vanishes on too many points to choose a chart")


def level(P, K) -> int:
    """Degree over GF(q) = K of the smallest field containing P."""
    if P.field.p != K.p:
        raise CurveError("point and field have different characteristic")
    d = P.field_degree()
    lv = d * K.k // gcd(d, K.k)
    return lv // K.k


def to_minimal_field(P, K):
    """The same point represented over GF(q^level)."""
    j = level(P, K)
    L = tower_field(K, j)
    if L == P.field:
        return P
    inv = _inverse_embedding(L, P.field)
    return type(P)(L, tuple(inv[c] for c in P.coords))


@functools.lru_cache(maxsize=64)
def _inverse_embedding(small, big) -> dict:
    return {v: i for i, v in enumerate(embedding(small, big))}


@dataclass(frozen=True)
class ZeroSet:
    points: tuple
    complete: bool


def common_zeros(F: TernaryForm, Gs, k_max: int) -> ZeroSet:
    """Points where F and every G vanish, each over its minimal field
    GF(q^j) with j <= k_max.

    ``complete`` is exact: it is False only when the system has solutions of
    level above k_max.  Forms vanishing identically on V(F) impose nothing.
    """
    K = F.field
    jE, M = _chart(F)
    E = tower_field(K, jE)
    Fe = F.lift(E)
    Ge = [g.lift(E) for g in Gs if not g.is_zero()]
    if M is not None:
        Fe = Fe.compose_linear(M)
        Ge = [g.compose_linear(M) for g in Ge]
    R = None
    effective = []
    for g in Ge:
        r = eliminate_z(Fe, g)
        if r.is_zero():
            continue
        effective.append(g)
        R = r if R is None else R.gcd(r)
    if R is None:
        raise CurveError("the equations vanish on the whole curve")
    if R.degree == 0:
        return ZeroSet((), True)
    found = set()
    complete = True

    def zgcd(L, x, y, conv):
        g = _z_poly(Fe, x, y, L, conv)
        for G in effective:
            g = poly.gcd(L, g, _z_poly(G, x, y, L, conv))
            if len(g) <= 1:
                break
        return g

    def harvest(n1, xy_list):
        # xy_list: (x, y) over L1 = GF(q^n1); extend by the Z-roots
        nonlocal complete
        L1 = tower_field(K, n1)
        t1 = embedding(E, L1)
        for x, y in xy_list:
            g = zgcd(L1, x, y, t1.__getitem__)
            if len(g) <= 1:
                continue
            for phi, _ in poly.factor(L1, g):
                n2 = n1 * (len(phi) - 1)
                if n2 > k_max:
                    complete = False
                    continue
                L2 = tower_field(K, n2)
                t12 = embedding(L1, L2)
                t2 = embedding(E, L2)
                for z in poly.roots_in(L2, [t12[c] for c in phi], L2.k):
                    v = (t12[x], t12[y], z)
                    if M is not None:
                        v = tuple(dot(L2, [t2[c] for c in M[i]], v) for i in range(3))
                    found.add(to_minimal_field(ProjPoint(L2, v), K))

    if R.infinity_multiplicity():
        L1 = tower_field(K, jE)
        harvest(jE, [(L1.one, L1.zero)])
    rest = R.coeffs_trimmed()
    if len(rest) > 1:
        for h, _ in poly.factor(E, rest):
            n1 = jE * (len(h) - 1)
            if n1 <= k_max:
                L1 = tower_field(K, n1)
                t1 = embedding(E, L1)
                xs = poly.roots_in(L1, [t1[c] for c in h], L1.k)
                harvest(n1, [(x, L1.one) for x in xs])
            else:
                Q = QuotientField(E, h)
                if len(zgcd(Q, Q.root(), Q.one, Q.embed)) > 1:
                    complete = False
    pts = sorted(found, key=lambda P: (P.field.k, P.coords))
    return ZeroSet(tuple(pts), complete)


def is_smooth(F: TernaryForm) -> bool:
    """Exact smoothness test over the algebraic closure."""
    zs = common_zeros(F, list(F.gradient()), 0)
    return not zs.points and zs.complete


# ---------------------------------------------------------------------------
# local queries


def _field_for(C: PlaneCurve, P):
    if P.field == C.field:
        return C.form
    if P.field.p != C.field.p or P.field.k % C.field.k:
        raise CurveError("%r is not an extension of the curve's field %r" % (P.field, C.field))
    return C.form.lift(P.field)


def multiplicity_at(C: PlaneCurve, P: ProjPoint) -> int:
    """Order of the lowest nonzero term of F at P (0 off the curve)."""
    F = _field_for(C, P)
    if F.evaluate(P.coords):
        return 0
    G = F.compose_linear(complete_basis(P.field, P.coords))
    return min(a + b for (a, b, _c) in G.terms)


def tangent_cone(C: PlaneCurve, P: ProjPoint) -> tuple[BinaryForm, list]:
    """Lowest form at P as a binary form in the coordinates of the lines
    through P, together with the change of coordinates used."""
    F = _field_for(C, P)
    M = complete_basis(P.field, P.coords)
    G = F.compose_linear(M)
    m = min(a + b for (a, b, _c) in G.terms)
    coeffs = [P.field.zero] * (m + 1)
    for (a, b, c), v in G.terms.items():
        if a + b == m:
            coeffs[a] = v  # s <-> X, t <-> Y
    return BinaryForm(P.field, m, coeffs), M


def tangent_line_at(C: PlaneCurve, P: ProjPoint) -> ProjLine:
    F = _field_for(C, P)
    if F.evaluate(P.coords):
        raise CurveError("%s is not on the curve" % P.format())
    g = F.gradient_at(P.coords)
    if not any(g):
        raise CurveError("%s is a singular point" % P.format())
    return ProjLine(P.field, g)


@dataclass(frozen=True)
class Intersection:
    points: tuple  # ((ProjPoint, multiplicity), ...)
    remainder: int

    @property
    def total(self) -> int:
        return sum(m for _, m in self.points) + self.remainder


def intersection_with_line(C: PlaneCurve, line: ProjLine, field=None) -> Intersection:
    """Points of C on the line with intersection multiplicities, split over
    ``field`` (default: the line's field); the unsplit degree is returned as
    the remainder so that multiplicities plus remainder equal d."""
    L = line.field
    if field is None:
        field = L
    if field.p != L.p:
        raise CurveError("fields of different characteristic")
    if field.k % L.k == 0:
        work, sub = field, None
    elif L.k % field.k == 0:
        work, sub = L, field.k
    else:
        raise CurveError("%r and %r are not nested" % (field, L))
    F = _field_for(C, line) if work == L else _field_for(C, line).lift(work)
    ln = line if work == L else line.lift(work)
    A, B = ln.spanning_points()
    r = F.restrict_to_line(A.coords, B.coords)
    if r.is_zero():
        raise CurveError("the line %s is a component of the curve" % line.format())
    out = []
    W = work
    for (s, t), m in r.roots(sub):
        v = tuple(W.add(W.mul(s, a), W.mul(t, b)) for a, b in zip(A.coords, B.coords))
        out.append((ProjPoint(W, v), m))
    out.sort(key=lambda pm: pm[0].sort_key())
    return Intersection(tuple(out), C.degree - sum(m for _, m in out))


def intersection_multiplicity(C: PlaneCurve, P: ProjPoint, line: ProjLine) -> int:
    """I_P(C, line); 0 when P is off the line or off the curve."""
    if not line.contains(P):
        return 0
    F = _field_for(C, P)
    A, B = line.spanning_points()
    r = F.restrict_to_line(A.coords, B.coords)
    if r.is_zero():
        raise CurveError("the line is a component of the curve")
    return _mult_on_line(r, A, B, P)


def _mult_on_line(r: BinaryForm, A, B, P) -> int:
    W = P.field
    # find (s:t) with s A + t B proportional to P
    for i in range(3):
        for j in range(i + 1, 3):
            det = W.sub(W.mul(A[i], B[j]), W.mul(A[j], B[i]))
            if det:
                s = W.div(W.sub(W.mul(P[i], B[j]), W.mul(P[j], B[i])), det)
                t = W.div(W.sub(W.mul(A[i], P[j]), W.mul(A[j], P[i])), det)
                return r.multiplicity_at((s, t))
    raise AssertionError("unreachable")  # pragma: no cover


# ---------------------------------------------------------------------------
# points over the tower


@functools.lru_cache(maxsize=64)
def points_over(C: PlaneCurve, j: int) -> tuple:
    """All points of C with coordinates in GF(q^j), sorted."""
    K = C.field
    W = tower_field(K, j)
    F = C.form.lift(W)
    d = F.degree
    # F(x, Y, 1) = sum_b c_b(x) Y^b
    ycoef = [[] for _ in range(d + 1)]
    for (a, b, c), v in F.terms.items():
        row = ycoef[b]
        while len(row) <= a:
            row.append(W.zero)
        row[a] = W.add(row[a], v)
    ycoef = [poly.strip(r) for r in ycoef]
    pts = []
    for x in range(W.q):
        f = poly.strip([poly.evaluate(W, r, x) for r in ycoef])
        if not f:
            raise CurveError("the curve contains the line X = %s Z" % W.format(x))
        for y in poly.roots_in(W, f, W.k):
            pts.append(ProjPoint(W, (x, y, W.one)))
    inf = poly.strip([F.terms.get((a, d - a, 0), W.zero) for a in range(d + 1)])
    if inf:
        for x in poly.roots_in(W, inf, W.k):
            pts.append(ProjPoint(W, (x, W.one, W.zero)))
    else:
        raise CurveError("the curve contains the line Z = 0")
    if not F.terms.get((d, 0, 0)):
        pts.append(ProjPoint(W, (W.one, W.zero, W.zero)))
    pts.sort(key=ProjPoint.sort_key)
    return tuple(pts)


def points_of_level(C: PlaneCurve, j: int) -> tuple:
    """Points whose smallest field of definition is exactly GF(q^j),
    represented over that field."""
    return tuple(P for P in points_over(C, j) if level(P, C.field) == j)


def tower_points(C: PlaneCurve, k_max: int) -> tuple:
    """Every point of C over GF(q^j), j <= k_max, each over its own field."""
    out = []
    for j in range(1, k_max + 1):
        out.extend(points_of_level(C, j))
    return tuple(out)


def param_preimages(C: PlaneCurve, P: ProjPoint) -> list:
    """Parameters (s:t) over P.field mapping to P, with multiplicity data
    omitted (each listed once)."""
    if C.param is None:
        raise CurveError("curve has no parametrization")
    W = P.field
    comps = [f.lift(W) for f in C.param]
    # P x f(s,t) = 0 : three binary forms
    eqs = []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        eqs.append(comps[k].scale(P[j]) - comps[j].scale(P[k]))
    g = None
    for e in eqs:
        if not e.is_zero():
            g = e if g is None else g.gcd(e)
    if g is None:
        raise CurveError("degenerate parametrization")
    return [st for st, _ in g.roots()]


# ---------------------------------------------------------------------------
# singular locus and genus


@functools.lru_cache(maxsize=64)
def singular_points(C: PlaneCurve, k_max: int = 4) -> ZeroSet:
    """Singular points over GF(q^k_max) with their multiplicities.

    Returns a ZeroSet whose points are (ProjPoint, multiplicity) pairs.
    """
    zs = common_zeros(C.form, list(C.form.gradient()), k_max)
    pts = tuple((P, multiplicity_at(C, P)) for P in zs.points)
    return ZeroSet(pts, zs.complete)


@dataclass(frozen=True)
class GenusResult:
    value: int | None
    method: str
    diagnostic: str = ""


def genus_report(C: PlaneCurve, k_max: int = 4) -> GenusResult:
    d = C.degree
    arith = (d - 1) * (d - 2) // 2
    if C.is_parametrized:
        if C.declared_genus not in (None, 0):
            raise CurveError("a parametrized curve has genus 0, not %d" % C.declared_genus)
        return GenusResult(0, "parametrized")
    if C.field is QQ:
        if C.declared_genus is not None:
            return GenusResult(C.declared_genus, "declared")
        return GenusResult(None, "undetermined", "no point machinery over the rationals")
    sing = singular_points(C, k_max)
    computed = None
    method, diag = "undetermined", ""
    if not sing.complete:
        diag = "singular locus not split within GF(q^%d)" % k_max
    elif not sing.points:
        computed, method = arith, "smooth"
    else:
        total = 0
        for P, m in sing.points:
            cone, _ = tangent_cone(C, P)
            if cone.distinct_root_count() != m:
                diag = "non-ordinary singularity at %s" % P.format()
                break
            total += m * (m - 1) // 2
        else:
            computed, method = arith - total, "ordinary singularities"
    if C.declared_genus is not None:
        if computed is not None and computed != C.declared_genus:
            raise CurveError("declared genus %d disagrees with computed genus %d"
                             % (C.declared_genus, computed))
        return GenusResult(C.declared_genus, "declared" if computed is None else method, diag)
    return GenusResult(computed, method, diag)


def genus_of(C: PlaneCurve, k_max: int = 4) -> int | None:
    """Geometric genus, or None when it cannot be determined."""
    r = genus_report(C, k_max)
    if r.value is None:
        log.info("genus undetermined: %s", r.diagnostic)
    return r.value
