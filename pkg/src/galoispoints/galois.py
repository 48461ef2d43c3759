"""Certifying Galois points by exhibiting deck transformations.

A point is reported Galois only when a group of automorphisms commuting with
the projection and of order equal to its degree has been found; it is
reported not Galois when the ramification filter fails; otherwise it stays
uncertified.

Deck maps are searched by fiber matching.  On an implicit model, in
coordinates with the center at (0:0:1), a deck map is Z -> bX + cY + eZ; on a
fully split unramified fiber it acts as an affine map z -> u + e z, so the
images of two fiber points fix e and u, and a second fiber fixes (b, c).  On a
parametrized model a deck map is a Moebius map of the parameter line and is
fixed by the images of three parameters.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd

from .algebra import poly
from .algebra.linalg import nullspace, solve
from .branches import common_field
from .curves import (
    CurveError,
    PlaneCurve,
    ProjLine,
    ProjPoint,
    level,
    multiplicity_at,
    tower_field,
    tower_points,
)
from .projection import (
    FilterVerdict,
    ProjectionSetup,
    StrangeCenterError,
    galois_filter,
    projection_setup,
)

log = logging.getLogger(__name__)

MAX_SEARCH_FIELD = 1 << 16


class GaloisError(CurveError):
    pass


# ---------------------------------------------------------------------------
# group bookkeeping


def _affine_compose(W, s2, s1):
    b1, c1, e1 = s1
    b2, c2, e2 = s2
    return (W.add(b2, W.mul(e2, b1)), W.add(c2, W.mul(e2, c1)), W.mul(e2, e1))


def _normalize_mobius(W, m):
    (a, b), (c, d) = m
    lead = next(x for x in (a, b, c, d) if x)
    inv = W.inv(lead)
    return ((W.mul(a, inv), W.mul(b, inv)), (W.mul(c, inv), W.mul(d, inv)))


def _mobius_compose(W, m2, m1):
    (a, b), (c, d) = m2
    (p, q), (r, s) = m1
    mul, add = W.mul, W.add
    return _normalize_mobius(W, ((add(mul(a, p), mul(b, r)), add(mul(a, q), mul(b, s))),
                                 (add(mul(c, p), mul(d, r)), add(mul(c, q), mul(d, s)))))


def _element_order(x, compose, identity) -> int:
    n, y = 1, x
    while y != identity:
        y = compose(x, y)
        n += 1
    return n


def _structure(elements, compose, identity) -> str:
    n = len(elements)
    orders = [_element_order(x, compose, identity) for x in elements]
    if n == 1 or n in orders:
        return "cyclic"
    abelian = all(compose(x, y) == compose(y, x) for x in elements for y in elements)
    nontrivial = [o for o in orders if o != 1]
    if abelian and len(set(nontrivial)) == 1:
        p = nontrivial[0]
        m = n
        while m % p == 0:
            m //= p
        if m == 1 and all(p % k for k in range(2, int(p ** 0.5) + 1)):
            return "elementary-abelian"
    if n % 2 == 0 and n // 2 in orders and sum(1 for o in orders if o == 2) >= n // 2:
        return "dihedral"
    return "other"


def _close(elements: set, compose) -> bool:
    return all(compose(x, y) in elements for x in elements for y in elements)


@dataclass(frozen=True)
class DeckGroup:
    setup: ProjectionSetup
    search_field: object
    elements: tuple  # (b, c, e) triples or normalized 2x2 matrices
    structure: str

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def certified(self) -> bool:
        return self.order == self.setup.degree


def _finish(setup, W, found: set, compose, identity) -> DeckGroup:
    found.add(identity)
    if not _close(found, compose):
        raise AssertionError("deck maps at %s are not closed under composition"
                             % setup.center.format())
    if setup.degree % len(found):
        raise AssertionError("deck group order %d does not divide the degree %d"
                             % (len(found), setup.degree))
    elems = tuple(sorted(found))
    return DeckGroup(setup, W, elems, _structure(elems, compose, identity))


def _search_field_for(setup: ProjectionSetup, search_field):
    K = setup.curve.field
    n = level(setup.center, K)
    if search_field is None:
        # same default as the survey: search_k = 2
        return tower_field(K, _search_level(K, n, 2))
    j = search_field.k // K.k
    if search_field.k % K.k or j % n:
        raise GaloisError("the search field must contain the center's field")
    return search_field


def _p1_points(W):
    yield (W.one, W.zero)
    for x in range(W.q):
        yield (x, W.one)


# ---------------------------------------------------------------------------
# implicit model


def deck_group_implicit(C: PlaneCurve, Q: ProjPoint, search_field=None,
                        setup: ProjectionSetup | None = None) -> DeckGroup:
    """Deck maps (X:Y:Z) -> (X:Y:bX+cY+eZ), coordinates with Q at (0:0:1),
    defined over the search field."""
    if C.param is not None:
        raise GaloisError("use deck_group_param for parametrized curves")
    if not C.contains(Q):
        raise GaloisError("%s is not on the curve" % Q.format())
    if multiplicity_at(C, Q) != 1:
        raise GaloisError("%s is a singular point" % Q.format())
    setup = setup or projection_setup(C, Q)
    W = _search_field_for(setup, search_field)
    (G,) = setup.maps
    Gw = G.lift(W)
    n = setup.degree
    identity = (W.zero, W.zero, W.one)

    def compose(s2, s1):
        return _affine_compose(W, s2, s1)

    fibers = []
    for x, y in _p1_points(W):
        g = Gw.z_polynomial(x, y)
        if len(g) - 1 != n:
            continue
        zs = poly.roots_in(W, g, W.k)
        if len(zs) == n:
            fibers.append(((x, y), zs))
            if len(fibers) == 2:
                break
    found = set()
    if len(fibers) == 2 and n >= 2:
        ((x1, y1), z), ((x2, y2), z2) = fibers
        targets = set(z2)
        base = W.sub(z[0], z[1])
        for j in range(n):
            for k in range(n):
                if j == k:
                    continue
                e = W.div(W.sub(z[j], z[k]), base)
                u1 = W.sub(z[j], W.mul(e, z[0]))
                if any(W.add(u1, W.mul(e, zi)) not in z for zi in z):
                    continue
                for zl in z2:
                    u2 = W.sub(zl, W.mul(e, z2[0]))
                    if any(W.add(u2, W.mul(e, zi)) not in targets for zi in z2):
                        continue
                    bc = solve(W, [[x1, y1], [x2, y2]], [u1, u2])
                    if bc is None:
                        continue
                    sigma = (bc[0], bc[1], e)
                    if _preserves(Gw, sigma, W):
                        found.add(sigma)
    elif n >= 2:
        log.info("no two split unramified fibers over %r; deck search skipped", W)
    return _finish(setup, W, found, compose, identity)


def _preserves(Gw, sigma, W) -> bool:
    b, c, e = sigma
    M = [[W.one, W.zero, W.zero], [W.zero, W.one, W.zero], [b, c, e]]
    return Gw.compose_linear(M).proportional_to(Gw) is not None


# ---------------------------------------------------------------------------
# parametrized model


def deck_group_param(C: PlaneCurve, Q: ProjPoint, search_field=None,
                     setup: ProjectionSetup | None = None) -> DeckGroup:
    """Moebius maps psi of the parameter line, over the search field, with
    (a:b) o psi = (a:b) for the projection (a:b) from Q."""
    if C.param is None:
        raise GaloisError("curve has no parametrization")
    setup = setup or projection_setup(C, Q)
    W = _search_field_for(setup, search_field)
    a, b = (f.lift(W) for f in setup.maps)
    n = setup.degree
    one, zero = W.one, W.zero
    identity = ((one, zero), (zero, one))

    def compose(m2, m1):
        return _mobius_compose(W, m2, m1)

    fibers = []
    for alpha, beta in _p1_points(W):
        h = a.scale(alpha) + b.scale(beta)
        roots = h.roots()
        if len(roots) == n and all(m == 1 for _, m in roots):
            fibers.append([st for st, _ in roots])
            if len(fibers) == 2:
                break
    found = set()
    if len(fibers) == 2 and n >= 2:
        f1, f2 = fibers
        src = (f1[0], f1[1], f2[0])
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                for k in range(n):
                    m = _mobius_through(W, src, (f1[i], f1[j], f2[k]))
                    if m is not None and _commutes(a, b, m):
                        found.add(_normalize_mobius(W, m))
    elif n >= 2:
        log.info("no two split unramified fibers over %r; deck search skipped", W)
    return _finish(setup, W, found, compose, identity)


def _mobius_through(W, src, dst):
    """The matrix sending each src[i] to dst[i] (projective pairs), or None."""
    rows = []
    for (ps, pt), (qs, qt) in zip(src, dst):
        # qt (a ps + b pt) - qs (c ps + d pt) = 0
        rows.append([W.mul(qt, ps), W.mul(qt, pt), W.neg(W.mul(qs, ps)), W.neg(W.mul(qs, pt))])
    ns = nullspace(W, rows, 4)
    if len(ns) != 1:
        return None
    a, b, c, d = ns[0]
    if not W.sub(W.mul(a, d), W.mul(b, c)):
        return None
    return ((a, b), (c, d))


def _commutes(a, b, m) -> bool:
    return (a.compose_linear(m) * b - b.compose_linear(m) * a).is_zero()


def deck_group(C: PlaneCurve, Q: ProjPoint, search_field=None, setup=None) -> DeckGroup:
    if C.param is not None:
        return deck_group_param(C, Q, search_field, setup)
    return deck_group_implicit(C, Q, search_field, setup)


# ---------------------------------------------------------------------------
# surveys


@dataclass(frozen=True)
class PointRecord:
    point: ProjPoint
    smooth: bool
    verdict: str  # "galois", "not galois", "uncertified", "strange"
    filter: FilterVerdict | None
    group_order: int | None
    structure: str | None
    reason: str = ""


def _search_level(K, point_level: int, search_k: int) -> int:
    return point_level * search_k // gcd(point_level, search_k)


def certify_point(C: PlaneCurve, P: ProjPoint, search_k: int = 2, k_max: int = 4) -> PointRecord:
    """Filter first, then search for a full deck group."""
    K = C.field
    smooth = multiplicity_at(C, P) == 1
    try:
        setup = projection_setup(C, P)
        verdict = galois_filter(setup, k_max)
    except StrangeCenterError as exc:
        return PointRecord(P, smooth, "strange", None, None, None, str(exc))
    if verdict.passed is False:
        return PointRecord(P, smooth, "not galois", verdict, None, None, verdict.reason)
    if C.param is None and not smooth:
        return PointRecord(P, smooth, "uncertified", verdict, None, None,
                           "deck search needs a parametrization at singular points")
    n = _search_level(K, level(P, K), search_k)
    W = tower_field(K, n)
    if W.q > MAX_SEARCH_FIELD:
        return PointRecord(P, smooth, "uncertified", verdict, None, None,
                           "search field GF(%d^%d) is too large" % (W.p, W.k))
    group = deck_group(C, P, W, setup)
    if group.certified:
        if verdict.passed is False:
            raise AssertionError("certified point %s fails the filter" % P.format())
        return PointRecord(P, smooth, "galois", verdict, group.order, group.structure)
    return PointRecord(P, smooth, "uncertified", verdict, group.order, group.structure,
                       "deck group of order %d < %d over GF(%d^%d)"
                       % (group.order, setup.degree, W.p, W.k))


@dataclass(frozen=True)
class GaloisSurvey:
    curve: PlaneCurve
    k_max: int
    search_k: int
    records: tuple

    @property
    def delta(self) -> int:
        return sum(1 for r in self.records if r.smooth and r.verdict == "galois")

    @property
    def delta_s(self) -> int:
        return sum(1 for r in self.records if not r.smooth and r.verdict == "galois")

    @property
    def complete(self) -> bool:
        return all(r.verdict != "uncertified" and (r.filter is None or r.filter.complete)
                   for r in self.records)

    def galois_points(self, smooth: bool | None = None) -> list[ProjPoint]:
        return [r.point for r in self.records if r.verdict == "galois"
                and (smooth is None or r.smooth == smooth)]


def _key(r: PointRecord):
    return (r.verdict, r.group_order)


def galois_survey(C: PlaneCurve, k_max: int = 4, search_k: int = 2, jobs: int = 1) -> GaloisSurvey:
    """Certify every point of the tower; conjugate points must agree."""
    K = C.field
    points = list(tower_points(C, k_max))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as ex:
            records = list(ex.map(certify_point, [C] * len(points), points,
                                  [search_k] * len(points), [k_max] * len(points)))
    else:
        records = [certify_point(C, P, search_k, k_max) for P in points]
    by_point = {(P.field.k, P.coords): r for P, r in zip(points, records)}
    for P, r in zip(points, records):
        conj = P.frobenius(K.k)
        other = by_point.get((conj.field.k, conj.coords))
        if other is None:
            raise AssertionError("conjugate of %s missing from the enumeration" % P.format())
        if _key(other) != _key(r):
            raise AssertionError("conjugate points %s and %s received different verdicts"
                                 % (P.format(), conj.format()))
    return GaloisSurvey(C, k_max, search_k, tuple(records))


# ---------------------------------------------------------------------------
# lines through two Galois points


def two_galois_line_check(C: PlaneCurve, P1: ProjPoint, P2: ProjPoint, *,
                          search_k: int = 2, certified: bool = False) -> bool:
    """True iff every branch centered on the line P1P2 meets it with order 1.

    The inputs must be certified smooth Galois points (certification is run
    here unless ``certified`` says the caller already did it).
    """
    K = C.field
    W = common_field(K, P1, P2)
    A = P1 if P1.field == W else P1.lift(W)
    B = P2 if P2.field == W else P2.lift(W)
    if A == B:
        raise GaloisError("the two points coincide")
    if not certified:
        for P in (P1, P2):
            r = certify_point(C, P, search_k)
            if r.verdict != "galois" or not r.smooth:
                raise GaloisError("%s is not a certified smooth Galois point" % P.format())
    line = ProjLine.through(A, B)
    h = line.coords
    if C.param is not None:
        comps = [f.lift(W) for f in C.param]
        r = comps[0].scale(h[0]) + comps[1].scale(h[1]) + comps[2].scale(h[2])
        return max(r.multiplicity_profile()) == 1
    r = C.form.lift(W).restrict_to_line(A.coords, B.coords)
    if max(r.multiplicity_profile()) == 1:
        return True
    # a multiple root is a tangency unless it sits at a singular point
    grad = C.form.lift(W).gradient()
    sing = r
    for g in grad:
        sing = sing.gcd(g.restrict_to_line(A.coords, B.coords))
    if sing.degree:
        raise GaloisError("the line passes through a singular point of an implicit model")
    return False
