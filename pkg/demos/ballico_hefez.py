"""
The rational quartic (s^4 : (s+t)^4 : t^4) over GF(3)
======================================================

A parametrized curve with three nodes.  It has four smooth Galois points and
all three nodes are Galois as well, so it sits on the boundary of both the
smooth count and the count including singular points.
"""

from galoispoints.bounds import bounds_report, summarize
from galoispoints.contact import kaji_genus_check
from galoispoints.curves import ballico_hefez, singular_points

C = ballico_hefez(3, 1)
print(C)
for P, m in singular_points(C).points:
    print("node", P.format(), "multiplicity", m)

s = summarize(C, k_max=2)
print("delta =", s.delta, " delta_s =", s.delta_s)
for r in s.survey.records:
    if r.verdict == "galois":
        print("  ", r.point.format(), "smooth" if r.smooth else "node", "group", r.structure)

print("dual curve:", s.dual.d_star, "degree;", kaji_genus_check(C, s.dual).status)

V = bounds_report(C, s)
for r in V.records:
    print("%-22s %3s %s %3s" % (r.name, r.lhs, "=" if r.equality else r.relation, r.rhs))
print("equality case:", V.classification.kind)
