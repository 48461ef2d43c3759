"""Branches of a plane curve: orders of lines, multiplicity, tangent, nu.

On a parametrized curve a branch is a parameter value (s:t).  Expanding the
parametrization around it, f(a + u c, b + u d) = sum_j V_j u^j, gives
everything exactly:

* the order of a line h is the least j with h . V_j != 0;
* the branch multiplicity is the least j >= 1 with V_j not proportional to
  V_0 (the minimum order over lines through the center);
* the tangent is the line through V_0 and V_m, and nu is its order.

On an implicit curve only smooth centers are supported; there the single
branch has multiplicity 1, the tangent line T_P C and nu = I_P(C, T_P C).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .algebra import poly
from .algebra.fields import embedding
from .algebra.forms import BinaryForm
from .algebra.linalg import cross, dot
from .curves import (
    CurveError,
    PlaneCurve,
    ProjLine,
    ProjPoint,
    intersection_multiplicity,
    level,
    multiplicity_at,
    tangent_line_at,
    tower_field,
)


class BranchError(CurveError):
    """Branch query outside the supported cases."""


@dataclass(frozen=True)
class Branch:
    curve: PlaneCurve
    center: ProjPoint  # over the branch's field
    param: tuple | None  # (s, t) over the same field, or None (implicit)
    multiplicity: int
    tangent: ProjLine
    nu: int

    @property
    def field(self):
        return self.center.field

    @property
    def nonsingular(self) -> bool:
        return self.multiplicity == 1

    def sort_key(self):
        return (self.field.k, self.param or (), self.center.coords)

    def format(self) -> str:
        loc = self.center.format()
        if self.param is not None:
            F = self.field
            loc = "t=(%s:%s) -> %s" % (F.format(self.param[0]), F.format(self.param[1]), loc)
        return "%s m=%d nu=%d" % (loc, self.multiplicity, self.nu)


def _lift_to(obj, field):
    return obj if obj.field == field else obj.lift(field)


def common_field(K, *objs):
    """Smallest tower field of K containing every point/line given."""
    n = 1
    for o in objs:
        j = level(o, K)
        n = n * j // gcd(n, j)
    return tower_field(K, n)


def _param_comps(C: PlaneCurve, L):
    return [f.lift(L) for f in C.param]


def _expansion(C: PlaneCurve, L, st) -> list[tuple]:
    """Vectors V_0..V_n with f(st + u w) = sum V_j u^j for a complement w."""
    a, b = st
    c, d = (L.zero, L.one) if a else (L.one, L.zero)
    S = poly.strip([a, c])
    T = poly.strip([b, d])
    n = C.degree
    spow, tpow = [[L.one]], [[L.one]]
    for _ in range(n):
        spow.append(poly.mul(L, spow[-1], S))
        tpow.append(poly.mul(L, tpow[-1], T))
    out = []
    for f in _param_comps(C, L):
        acc: list = []
        for i, coef in enumerate(f.coeffs):
            if coef:
                acc = poly.add(L, acc, poly.scale(L, poly.mul(L, spow[i], tpow[n - i]), coef))
        out.append(acc + [L.zero] * (n + 1 - len(acc)))
    return [(out[0][j], out[1][j], out[2][j]) for j in range(n + 1)]


def branch_at_param(C: PlaneCurve, st, field=None) -> Branch:
    """The branch of a parametrized curve at the parameter (s:t)."""
    if C.param is None:
        raise BranchError("curve has no parametrization")
    L = field if field is not None else C.field
    if field is None and isinstance(st[0], int) and L.k == 1:
        st = (L.from_int(st[0]), L.from_int(st[1]))
    a, b = st
    if b:
        a, b = L.div(a, b), L.one
    else:
        a, b = L.one, L.zero
    V = _expansion(C, L, (a, b))
    V0 = V[0]
    m = next((j for j in range(1, len(V)) if any(cross(L, V0, V[j]))), None)
    if m is None:
        raise BranchError("parametrization is constant near the parameter")
    tangent = cross(L, V0, V[m])
    nu = next((j for j in range(m + 1, len(V)) if dot(L, tangent, V[j])), None)
    if nu is None:
        raise BranchError("tangent line contains the curve")
    return Branch(C, ProjPoint(L, V0), (a, b), m, ProjLine(L, tangent), nu)


def branch_at_smooth_point(C: PlaneCurve, P: ProjPoint) -> Branch:
    T = tangent_line_at(C, P)
    nu = intersection_multiplicity(C, P, T)
    return Branch(C, P, None, 1, T, nu)


def branch_order(B: Branch, line: ProjLine):
    """Order of the line's equation along the branch (0 when the line
    misses the center)."""
    C = B.curve
    K = C.field
    L = common_field(K, B.center, line)
    if L.k % B.field.k:
        # the parameter may need a larger field than its center
        L = tower_field(K, L.k * B.field.k // gcd(L.k, B.field.k) // K.k)
    h = _lift_to(line, L).coords
    if B.param is not None:
        st = tuple(embedding(B.field, L)[c] for c in B.param) if L != B.field else B.param
        comps = _param_comps(C, L)
        hf = comps[0].scale(h[0]) + comps[1].scale(h[1]) + comps[2].scale(h[2])
        if hf.is_zero():
            raise BranchError("the line contains the curve")
        return hf.multiplicity_at(st)
    P = _lift_to(B.center, L)
    ln = _lift_to(line, L)
    if not ln.contains(P):
        return 0
    return intersection_multiplicity(C, P, ln)


def _param_fiber(C: PlaneCurve, R: ProjPoint) -> BinaryForm:
    L = R.field
    comps = _param_comps(C, L)
    g = None
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        e = comps[k].scale(R[j]) - comps[j].scale(R[k])
        if not e.is_zero():
            g = e if g is None else g.gcd(e)
    if g is None:
        raise BranchError("degenerate parametrization")
    return g


def param_fiber(C: PlaneCurve, R: ProjPoint, k_max: int):
    """Parameter values mapping to R, each over its minimal tower field.

    Returns (list of ((s, t), field), complete).
    """
    K = C.field
    g = _param_fiber(C, R)
    if g.degree == 0:
        raise BranchError("%s is not on the curve" % R.format())
    L = R.field
    jR = level(R, K)
    out = []
    complete = True
    if g.infinity_multiplicity():
        out.append(((L.one, L.zero), L))
    rest = g.coeffs_trimmed()
    if len(rest) > 1:
        for h, _ in poly.factor(L, rest):
            n = jR * (len(h) - 1)
            if n > k_max:
                complete = False
                continue
            L2 = tower_field(K, n)
            t = embedding(L, L2)
            for x in poly.roots_in(L2, [t[c] for c in h], L2.k):
                out.append(((x, L2.one), L2))
    return out, complete


def branches_at(C: PlaneCurve, R: ProjPoint, k_max: int = 4) -> list[Branch]:
    """All branches centered at R (parameter preimages within the tower for
    parametrized curves; the single branch at a smooth implicit point)."""
    if not C.contains(R):
        raise BranchError("%s is not on the curve" % R.format())
    if C.param is None:
        if multiplicity_at(C, R) != 1:
            raise BranchError("branches at singular points need a parametrization")
        return [branch_at_smooth_point(C, R)]
    params, complete = param_fiber(C, R, k_max)
    if not complete:
        raise BranchError("some parameter preimages of %s lie beyond GF(q^%d)" % (R.format(), k_max))
    return sorted((branch_at_param(C, st, L) for st, L in params), key=Branch.sort_key)


def nonsingular_branch(B: Branch) -> bool:
    return B.multiplicity == 1


def branch_tangent_nu(B: Branch) -> tuple[ProjLine, int]:
    if B.multiplicity != 1:
        raise BranchError("branch at %s is singular (multiplicity %d)"
                          % (B.center.format(), B.multiplicity))
    return B.tangent, B.nu


def param_points_of_level(K, j: int) -> list:
    """Points (s:t) of P^1 whose smallest field is GF(q^j), over that field."""
    L = tower_field(K, j)
    out = []
    if j == 1:
        out.append((L.one, L.zero))
    for x in range(L.q):
        if _elt_level(L, x, K) == j:
            out.append((x, L.one))
    return out


def _elt_level(L, x, K) -> int:
    d = L.degree_of(x) if x else 1
    lv = d * K.k // gcd(d, K.k)
    return lv // K.k


def tower_branches(C: PlaneCurve, k_max: int) -> list[Branch]:
    """Every branch whose locator is defined over GF(q^j), j <= k_max.

    Parametrized curves: one branch per parameter value; implicit curves: one
    branch per smooth point (singular points are skipped).
    """
    out = []
    K = C.field
    if C.param is not None:
        for j in range(1, k_max + 1):
            L = tower_field(K, j)
            for st in param_points_of_level(K, j):
                out.append(branch_at_param(C, st, L))
        return out
    from .curves import tower_points

    for P in tower_points(C, k_max):
        if multiplicity_at(C, P) == 1:
            out.append(branch_at_smooth_point(C, P))
    return out
