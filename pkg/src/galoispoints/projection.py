"""Projections from a point: fibers, ramification, the Galois filter.

Lines through the center Q form a pencil alpha*L1 + beta*L2, where L1, L2
are linear forms vanishing at Q.  The projection is then a map to P^1:

* parametrized model: (s:t) -> (a:b) with (a, b) = (L1 f, L2 f) / gcd, so the
  fiber over (alpha:beta) is cut out by alpha*a + beta*b;
* implicit model: after a change of coordinates G = F o T with T(0:0:1) = Q,
  the fiber over the line through Q and (x:y:0) is given by the Z-roots of
  G(x, y, Z); the missing Z-degree is the index of the branch at Q.

Ramification profiles are computed over the algebraic closure from
square-free decompositions, so lines defined beyond the tower are handled
exactly in a residue field.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import poly
from .algebra.fields import embedding
from .algebra.forms import BinaryForm, TernaryForm
from .algebra.linalg import complete_basis, dot, inverse
from .algebra.quotient import QuotientField
from .algebra.resultant import eliminate_z
from .branches import Branch, branch_at_param, branch_at_smooth_point, common_field
from .contact import _binary_cross, _vanishes_on
from .curves import (
    CurveError,
    PlaneCurve,
    ProjLine,
    ProjPoint,
    _z_poly,
    genus_of,
    level,
    multiplicity_at,
    to_minimal_field,
    tower_field,
)


class ProjectionError(CurveError):
    pass


class StrangeCenterError(ProjectionError):
    """The center lies on every tangent line; the projection is inseparable."""


def _lift_vec(K, W, v):
    if W == K:
        return tuple(v)
    t = embedding(K, W)
    return tuple(t[c] for c in v)


def _converter(L, W):
    """Map from elements of the tower field L into W (a tower field or a
    residue field over L)."""
    if isinstance(W, QuotientField):
        return W.embed
    if W == L:
        return lambda c: c
    return embedding(L, W).__getitem__


@dataclass(frozen=True)
class ProjectionSetup:
    curve: PlaneCurve
    center: ProjPoint  # over its minimal tower field
    center_multiplicity: int
    degree: int
    separable: bool
    basis: tuple = dc_field(repr=False)  # columns (e_i, e_j, Q)
    pencil: tuple = dc_field(repr=False)  # rows L1, L2 of basis^-1
    maps: tuple = dc_field(repr=False)  # (a, b) binary forms, or (G,) ternary

    @property
    def field(self):
        return self.center.field

    def pencil_coords(self, line: ProjLine):
        """(alpha, beta) with line = alpha L1 + beta L2, over line.field."""
        W = line.field
        cols = [_lift_vec(self.field, W, [r[c] for r in self.basis]) for c in range(3)]
        if dot(W, line.coords, cols[2]):
            raise ProjectionError("%s does not pass through the center" % line.format())
        return dot(W, line.coords, cols[0]), dot(W, line.coords, cols[1])

    def line_of(self, W, alpha, beta) -> ProjLine:
        L1, L2 = (_lift_vec(self.field, W, r) for r in self.pencil)
        return ProjLine(W, tuple(W.add(W.mul(alpha, x), W.mul(beta, y)) for x, y in zip(L1, L2)))


def _apply(L, M, v):
    return tuple(dot(L, M[i], v) for i in range(3))


def projection_setup(C: PlaneCurve, Q: ProjPoint) -> ProjectionSetup:
    """Degree and separability of the projection from Q.

    Separability is decided twice: from the projection map itself (its
    derivative vanishes identically) and from the tangent lines (every
    tangent passes through Q); the two must agree.
    """
    K = C.field
    Q = to_minimal_field(Q, K)
    L = Q.field
    m = multiplicity_at(C, Q) if C.contains(Q) else 0
    T = complete_basis(L, Q.coords)
    Ti = inverse(L, T)
    pencil = (tuple(Ti[0]), tuple(Ti[1]))
    d = C.degree
    if C.param is not None:
        comps = [f.lift(L) for f in C.param]
        la, lb = [comps[0].scale(r[0]) + comps[1].scale(r[1]) + comps[2].scale(r[2])
                  for r in pencil]
        g = la.gcd(lb)
        a, b = la.exquo(g), lb.exquo(g)
        deg = a.degree
        if deg != d - m:
            raise AssertionError("projection degree %d != %d - %d" % (deg, d, m))
        separable = bool(_affine_wronskian(L, a, b))
        tang = _binary_cross(comps, [c.derivative_s() for c in comps])
        through = tang[0].scale(Q[0]) + tang[1].scale(Q[1]) + tang[2].scale(Q[2])
        strange = through.is_zero()
        maps = (a, b)
    else:
        G = C.form.lift(L).compose_linear(T)
        deg = G.z_degree()
        if deg != d - m:
            raise AssertionError("projection degree %d != %d - %d" % (deg, d, m))
        separable = not G.partial("Z").is_zero()
        grad = C.form.lift(L).gradient()
        polar = grad[0].scale(Q[0]) + grad[1].scale(Q[1]) + grad[2].scale(Q[2])
        strange = _vanishes_on(C.form.lift(L), polar)
        maps = (G,)
    if separable == strange:
        raise AssertionError("separability and strangeness disagree at %s" % Q.format())
    return ProjectionSetup(C, Q, m, deg, separable, tuple(map(tuple, T)), pencil, maps)


def _affine_wronskian(W, a: BinaryForm, b: BinaryForm) -> list:
    A, B = a.coeffs_trimmed(), b.coeffs_trimmed()
    return poly.sub(W, poly.mul(W, poly.deriv(W, A), B), poly.mul(W, A, poly.deriv(W, B)))


def _inf_index(W, a: BinaryForm, b: BinaryForm) -> int:
    """Ramification index of the parameter (1:0)."""
    h = a.scale(b.coeffs[-1]) - b.scale(a.coeffs[-1])
    return h.infinity_multiplicity()


# ---------------------------------------------------------------------------
# exact profiles over the algebraic closure


@dataclass(frozen=True)
class LineProfile:
    """Ramification indices over one line through the center (or one
    Galois orbit of such lines, all sharing the profile)."""

    line: ProjLine | None  # None when the line lies beyond the tower
    description: str
    indices: tuple  # sorted descending; empty when unresolved
    resolved: bool
    orbit: int  # number of conjugate lines represented

    @property
    def ramified(self) -> bool:
        return any(e > 1 for e in self.indices)


def _eval_binary(W, f: BinaryForm, conv, s, t):
    acc = W.zero
    n = f.degree
    for i, c in enumerate(f.coeffs):
        if c:
            acc = W.add(acc, W.mul(conv(c), W.mul(W.pow(s, i), W.pow(t, n - i))))
    return acc


def _param_profile(setup, W, conv, alpha, beta) -> tuple:
    a, b = setup.maps
    n = a.degree
    cs = [W.add(W.mul(alpha, conv(x)), W.mul(beta, conv(y))) for x, y in zip(a.coeffs, b.coeffs)]
    f = poly.strip(cs)
    prof = poly.root_multiplicity_profile(W, f) if len(f) > 1 else []
    inf = n - (len(f) - 1)
    if inf:
        prof.append(inf)
    return tuple(sorted(prof, reverse=True))


def _implicit_profile(setup, W, conv, alpha, beta) -> tuple[tuple, bool]:
    (G,) = setup.maps
    x, y = beta, W.neg(alpha)
    g = _z_poly(G, x, y, W, conv)
    resolved = True
    C = setup.curve
    if not _has_no_singular_points(C):
        s = g
        for v in ("X", "Y", "Z"):
            s = poly.gcd(W, s, _z_poly(G.partial(v), x, y, W, conv))
            if len(s) <= 1:
                break
        if len(s) > 1:
            resolved = False
    prof = poly.root_multiplicity_profile(W, g) if len(g) > 1 else []
    drop = setup.degree - (len(g) - 1)
    if drop:
        if setup.center_multiplicity > 1:
            resolved = False
        prof.append(drop)
    return tuple(sorted(prof, reverse=True)), resolved


def _has_no_singular_points(C: PlaneCurve) -> bool:
    from .curves import singular_points

    if C.param is not None:
        return True
    zs = singular_points(C, 4)
    return zs.complete and not zs.points


def line_profile(setup: ProjectionSetup, line: ProjLine) -> LineProfile:
    """Exact ramification indices over a line through the center."""
    K = setup.curve.field
    W = common_field(K, setup.center, line)
    line = to_minimal_field(line, K)
    line = line if line.field == W else line.lift(W)
    alpha, beta = setup.pencil_coords(line)
    return _profile_at(setup, W, alpha, beta, 1, to_minimal_field(line, K), line.format())


def _profile_at(setup, W, alpha, beta, orbit, line, description) -> LineProfile:
    conv = _converter(setup.field, W)
    if setup.curve.param is not None:
        prof, ok = _param_profile(setup, W, conv, alpha, beta), True
    else:
        prof, ok = _implicit_profile(setup, W, conv, alpha, beta)
    return LineProfile(line, description, prof if ok else (), ok, orbit)


def _residue(setup, h: list, k_max: int):
    """(W, root, tower?) for an irreducible h over the center's field."""
    K = setup.curve.field
    L = setup.field
    n = level(setup.center, K) * (len(h) - 1)
    if n <= k_max:
        W = tower_field(K, n)
        t = embedding(L, W)
        x = poly.roots_in(W, [t[c] for c in h], W.k)[0]
        return W, x, True
    Qf = QuotientField(L, h)
    return Qf, Qf.root(), False


def _describe_factor(L, h) -> str:
    return "line over the root field of %s" % BinaryForm(L, len(h) - 1, h).format(("x", "y"))


def critical_profiles(setup: ProjectionSetup, k_max: int = 4) -> list[LineProfile]:
    """Profiles of every line through the center carrying a ramified branch
    (one entry per Galois orbit of critical points)."""
    if not setup.separable:
        raise StrangeCenterError("%s is a strange center" % setup.center.format())
    L = setup.field
    K = setup.curve.field
    out = []
    if setup.curve.param is not None:
        a, b = setup.maps
        w = _affine_wronskian(L, a, b)
        for h, _ in poly.factor(L, w):
            W, s0, tower = _residue(setup, h, k_max)
            conv = _converter(L, W)
            av, bv = _eval_binary(W, a, conv, s0, W.one), _eval_binary(W, b, conv, s0, W.one)
            alpha, beta = bv, W.neg(av)
            line = to_minimal_field(setup.line_of(W, alpha, beta), K) if tower else None
            desc = line.format() if tower else _describe_factor(L, h)
            out.append(_profile_at(setup, W, alpha, beta, len(h) - 1, line, desc))
        if _inf_index(L, a, b) > 1:
            alpha = b.coeffs[-1]
            beta = L.neg(a.coeffs[-1])
            line = to_minimal_field(setup.line_of(L, alpha, beta), K)
            out.append(_profile_at(setup, L, alpha, beta, 1, line, line.format()))
        return out
    (G,) = setup.maps
    R = eliminate_z(G, G.partial("Z"))
    cone = _z_cone(G, setup.degree)
    crit = R * cone if not R.is_zero() else cone
    if crit.infinity_multiplicity():
        # (x:y) = (1:0), i.e. (alpha:beta) = (0:-1)
        out.append(_orbit_profile(setup, L, L.zero, L.neg(L.one), 1, True, K, ""))
    rest = crit.coeffs_trimmed()
    if len(rest) > 1:
        for h, _ in poly.factor(L, rest):
            W, x, tower = _residue(setup, h, k_max)
            # (x:y) = (x:1)  ->  (alpha:beta) = (1:-x)
            out.append(_orbit_profile(setup, W, W.one, W.neg(x), len(h) - 1, tower, K,
                                      _describe_factor(L, h)))
    return out


def _orbit_profile(setup, W, alpha, beta, orbit, tower, K, desc):
    line = to_minimal_field(setup.line_of(W, alpha, beta), K) if tower else None
    return _profile_at(setup, W, alpha, beta, orbit, line, line.format() if tower else desc)


def _z_cone(G: TernaryForm, proj_degree: int) -> BinaryForm:
    """Coefficient of Z^(projection degree) as a binary form in (X, Y):
    the lines through the center where the fiber loses points to it."""
    K = G.field
    m = G.degree - proj_degree
    cs = [K.zero] * (m + 1)
    for (a, b, c), v in G.terms.items():
        if c == proj_degree:
            cs[a] = v
    return BinaryForm(K, m, cs)


# ---------------------------------------------------------------------------
# explicit fibers within the tower


@dataclass(frozen=True)
class FiberEntry:
    center: ProjPoint
    branch: Branch | None  # None for an unresolved singular center
    index: int


@dataclass(frozen=True)
class FiberProfile:
    line: ProjLine
    entries: tuple
    deficit: int

    @property
    def total(self) -> int:
        return sum(e.index for e in self.entries) + self.deficit

    @property
    def indices(self) -> tuple:
        return tuple(sorted((e.index for e in self.entries), reverse=True))


def fiber_profile(setup: ProjectionSetup, line: ProjLine, k_max: int = 4) -> FiberProfile:
    """Branches over a line through the center, split within GF(q^k_max).

    Points whose field lies beyond the tower are counted in ``deficit``.
    """
    C = setup.curve
    K = C.field
    W = common_field(K, setup.center, line)
    ln = to_minimal_field(line, K)
    ln = ln if ln.field == W else ln.lift(W)
    alpha, beta = setup.pencil_coords(ln)
    jW = W.k // K.k
    entries, deficit = [], 0
    if C.param is not None:
        a, b = (f.lift(W) for f in setup.maps)
        h = a.scale(alpha) + b.scale(beta)
        inf = h.infinity_multiplicity()
        if inf:
            B = branch_at_param(C, (W.one, W.zero), W)
            entries.append(FiberEntry(to_minimal_field(B.center, K), B, inf))
        f = h.coeffs_trimmed()
        for phi, mult in (poly.factor(W, f) if len(f) > 1 else []):
            n = jW * (len(phi) - 1)
            if n > k_max:
                deficit += mult * (len(phi) - 1)
                continue
            L2 = tower_field(K, n)
            t = embedding(W, L2)
            for x in poly.roots_in(L2, [t[c] for c in phi], L2.k):
                B = branch_at_param(C, (x, L2.one), L2)
                entries.append(FiberEntry(to_minimal_field(B.center, K), B, mult))
    else:
        (G,) = setup.maps
        T = [_lift_vec(setup.field, W, r) for r in setup.basis]
        Gw = G.lift(W)
        x, y = beta, W.neg(alpha)
        g = Gw.z_polynomial(x, y)
        drop = setup.degree - (len(g) - 1)
        if drop:
            Qp = setup.center
            B = branch_at_smooth_point(C, Qp) if setup.center_multiplicity == 1 else None
            entries.append(FiberEntry(Qp, B, drop))
        for phi, mult in (poly.factor(W, g) if len(g) > 1 else []):
            n = jW * (len(phi) - 1)
            if n > k_max:
                deficit += mult * (len(phi) - 1)
                continue
            L2 = tower_field(K, n)
            t = embedding(W, L2)
            T2 = [[t[c] for c in r] for r in T]
            for z in poly.roots_in(L2, [t[c] for c in phi], L2.k):
                P = to_minimal_field(ProjPoint(L2, _apply(L2, T2, (t[x], t[y], z))), K)
                B = branch_at_smooth_point(C, P) if multiplicity_at(C, P) == 1 else None
                entries.append(FiberEntry(P, B, mult))
    entries.sort(key=lambda e: (e.center.field.k, e.center.coords))
    prof = FiberProfile(to_minimal_field(ln, K), tuple(entries), deficit)
    if prof.total != setup.degree:
        raise AssertionError("fiber over %s has total %d, projection degree %d"
                             % (ln.format(), prof.total, setup.degree))
    return prof


# ---------------------------------------------------------------------------
# Galois filter and Riemann-Hurwitz


@dataclass(frozen=True)
class FilterVerdict:
    passed: bool | None  # None: undecided (unresolved singular contributions)
    witness: LineProfile | None
    profiles: tuple
    complete: bool
    reason: str = ""


def galois_filter(setup: ProjectionSetup, k_max: int = 4) -> FilterVerdict:
    """Necessary conditions for the projection to be Galois: on every line
    through the center all ramification indices agree and divide the degree.
    """
    profs = critical_profiles(setup, k_max)
    complete = all(p.resolved for p in profs)
    for p in profs:
        if not p.resolved:
            continue
        e = p.indices[0]
        if any(x != e for x in p.indices):
            return FilterVerdict(False, p, tuple(profs), complete,
                                 "unequal indices %s" % list(p.indices))
        if setup.degree % e:
            return FilterVerdict(False, p, tuple(profs), complete,
                                 "index %d does not divide the degree %d" % (e, setup.degree))
    if not complete:
        return FilterVerdict(None, None, tuple(profs), False,
                             "branches over singular points are not resolved")
    return FilterVerdict(True, None, tuple(profs), True)


@dataclass(frozen=True)
class HurwitzAudit:
    genus: int
    degree: int
    ramification: int  # sum of (e - 1) over ramified branches
    tame: bool
    balanced: bool | None  # None in the wild or unresolved case
    tag: str


def _param_ramification(setup, k_max) -> list[tuple[int, int]]:
    """(index, number of conjugate parameters) for every ramified parameter."""
    L = setup.field
    a, b = setup.maps
    out = []
    for h, _ in poly.factor(L, _affine_wronskian(L, a, b)):
        W, s0, _ = _residue(setup, h, k_max)
        conv = _converter(L, W)
        av, bv = _eval_binary(W, a, conv, s0, W.one), _eval_binary(W, b, conv, s0, W.one)
        f = poly.strip([W.sub(W.mul(bv, conv(x)), W.mul(av, conv(y)))
                        for x, y in zip(a.coeffs, b.coeffs)])
        out.append((poly.multiplicity(W, f, s0), len(h) - 1))
    e = _inf_index(L, a, b)
    if e > 1:
        out.append((e, 1))
    return out


def riemann_hurwitz_audit(setup: ProjectionSetup, k_max: int = 4) -> HurwitzAudit:
    """Sum of (e - 1) over all ramified branches, checked against the
    Riemann-Hurwitz formula when every index is prime to p."""
    g = genus_of(setup.curve)
    if g is None:
        raise ProjectionError("the genus is undetermined")
    if not setup.separable:
        raise StrangeCenterError("%s is a strange center" % setup.center.format())
    if setup.curve.param is not None:
        pairs = _param_ramification(setup, k_max)
    else:
        profs = critical_profiles(setup, k_max)
        if not all(p.resolved for p in profs):
            ram = sum(p.orbit * sum(e - 1 for e in p.indices) for p in profs if p.resolved)
            return HurwitzAudit(g, setup.degree, ram, False, None, "unresolved")
        pairs = [(e, p.orbit) for p in profs for e in p.indices if e > 1]
    ram = sum(n * (e - 1) for e, n in pairs)
    tame = all(e % setup.curve.field.p for e, _ in pairs)
    expected = 2 * g - 2 + 2 * setup.degree
    if not tame:
        if ram > expected:
            raise AssertionError("ramification %d exceeds %d" % (ram, expected))
        return HurwitzAudit(g, setup.degree, ram, False, None, "wild")
    if ram != expected:
        raise AssertionError("Riemann-Hurwitz fails: 2g-2 = %d but degree*(-2) + %d = %d"
                             % (2 * g - 2, ram, -2 * setup.degree + ram))
    return HurwitzAudit(g, setup.degree, ram, True, True, "tame")
