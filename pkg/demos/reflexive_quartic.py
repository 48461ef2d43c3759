"""
A reflexive quartic with a single Galois point
==============================================

Y Z^3 + F(X, Y) is smooth for a suitable quartic binary form F, and the
projection from (0:0:1) is Z -> Z with Z^3 = -F/Y: a cyclic cover of degree
3.  Away from the special families the bound is far from sharp.
"""

from galoispoints.algebra import field_make, parse_ternary
from galoispoints.bounds import bounds_report, summarize
from galoispoints.curves import ProjPoint, curve_from_implicit
from galoispoints.projection import projection_setup, riemann_hurwitz_audit

K = field_make(7)
C = curve_from_implicit(parse_ternary(K, "Y*Z^3 + X^4 + 2*X^2*Y^2 + X*Y^3 + 3*Y^4"))
s = summarize(C, k_max=2)
print(C)
print("g =", s.g, " M =", s.M, " delta =", s.delta)
print("Galois points:", [P.format() for P in s.survey.galois_points()])

# Riemann-Hurwitz from the Galois point: five points of total ramification
S = projection_setup(C, ProjPoint.of(K, 0, 0, 1))
a = riemann_hurwitz_audit(S)
print("ramification", a.ramification, "tag", a.tag)

for r in bounds_report(C, s).records:
    print("%-22s %3s %s %3s" % (r.name, r.lhs, "=" if r.equality else r.relation, r.rhs))
