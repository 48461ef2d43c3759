"""
Galois points of the Fermat quartic in characteristic 3
=======================================================

X^4 + Y^4 + Z^4 over GF(3) has degree p + 1.  Every one of its points over
GF(9) turns out to be a Galois point, and the count meets the upper bound
(M + 1)(2g - 2) + 3d exactly.
"""

from galoispoints.bounds import bounds_report, summarize
from galoispoints.contact import dual_invariants, flex_table
from galoispoints.curves import ProjPoint, fermat, points_of_level
from galoispoints.galois import deck_group
from galoispoints.projection import galois_filter, projection_setup

C = fermat(3, 1)
print(C)

# generic tangent order, flexes and the dual
T = flex_table(C, 2)
print("M =", T.M, " flexes:", len(T.entries), " weighted sum:", T.sv_sum, "of", T.bound)
D = dual_invariants(C)
print("q, s, d* =", D.q_gamma, D.s_gamma, D.d_star, " s*q*d* =", D.plucker_lhs)

# projecting from (1:1:1) is a cyclic triple cover
Q = ProjPoint.of(C.field, 1, 1, 1)
S = projection_setup(C, Q)
G = deck_group(C, Q, setup=S)
print("projection from", Q.format(), "degree", S.degree, "deck group", G.order, G.structure)

# a point over GF(27) is not a flex, and its tangent fiber gives it away
P = points_of_level(C, 3)[0]
v = galois_filter(projection_setup(C, P))
print(P.format(), "filter:", v.passed, "witness", v.witness.indices)

s = summarize(C, k_max=2)
for r in bounds_report(C, s).records:
    print("%-22s %3s %s %3s" % (r.name, r.lhs, "=" if r.equality else r.relation, r.rhs))
