import pytest

from galoispoints.branches import nonsingular_branch, tower_branches
from galoispoints.contact import (
    algebraic_contact_order,
    dual_invariants,
    flex_table,
    generic_contact,
    inseparable_degree,
    kaji_genus_check,
    sv_bound,
)
from galoispoints.curves import (
    cuspidal,
    genus_of,
    intersection_multiplicity,
    multiplicity_at,
    points_over,
    random_smooth,
    tangent_line_at,
    tower_points,
)


def _is_power_of(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def _direct_min_contact(C, k_max):
    """Oracle: minimum I_P(C, T_P C) over smooth points, via the curve model."""
    out = []
    for P in tower_points(C, k_max):
        if multiplicity_at(C, P) == 1:
            out.append(intersection_multiplicity(C, P, tangent_line_at(C, P)))
    return min(out)


def test_generic_contact_examples(fermat3, bh3, quartic7):
    prof = generic_contact(fermat3, 4)
    assert prof.M == 3 and prof.algebraic_M == 3
    assert _direct_min_contact(fermat3, 4) == 3
    assert generic_contact(bh3, 2).M == 3
    assert generic_contact(quartic7, 2).M == 2
    assert _direct_min_contact(quartic7, 1) == 2


@pytest.mark.parametrize("p,seed", [(5, 0), (5, 1), (7, 2), (7, 3), (5, 4)])
def test_contact_routes_agree(p, seed):
    C = random_smooth(p, d=4, seed=seed)
    prof = generic_contact(C, 2)
    assert prof.M == algebraic_contact_order(C)
    assert all(nu >= prof.M for _, nu in prof.evidence)


@pytest.mark.parametrize("seed", range(4))
def test_contact_routes_agree_parametrized(seed):
    C = cuspidal(5, d=4, seed=seed)
    assert generic_contact(C, 2).M == algebraic_contact_order(C)


def test_flex_table_fermat(fermat3):
    T = flex_table(fermat3, 2)
    assert len(T.entries) == 28
    assert all(e.weight == 1 for e in T.entries)
    assert T.sv_sum == 28 == sv_bound(3, 3, 4)
    assert T.complete
    # oracle: the flexes are exactly the points over GF(9)
    W = points_over(fermat3, 2)[0].field
    assert {e.branch.center.lift(W) for e in T.entries} == set(points_over(fermat3, 2))


def test_flex_table_bh(bh3):
    T = flex_table(bh3, 2)
    assert T.sv_sum == 4 and len(T.entries) == 4
    assert all(e.weight == 1 for e in T.entries)
    # oracle: non-singular parameter branches with nu above M
    M = generic_contact(bh3, 2).M
    strong = [B for B in tower_branches(bh3, 2) if nonsingular_branch(B) and B.nu > M]
    assert len(strong) == 4


def test_flex_table_quartic_bound(quartic7):
    T = flex_table(quartic7, 2)
    assert T.sv_sum <= 24 == T.bound


@pytest.mark.parametrize("seed", range(3))
def test_sv_sums_monotone(seed):
    C = random_smooth(5, d=4, seed=seed)
    sums = [flex_table(C, k).sv_sum for k in (1, 2, 3)]
    assert sums == sorted(sums)
    assert sums[-1] <= sv_bound(generic_contact(C, 2).M, genus_of(C), 4)


def test_dual_invariants_examples(fermat3, bh3, quartic7):
    D = dual_invariants(fermat3)
    assert (D.q_gamma, D.s_gamma, D.d_star) == (3, 1, 4)
    assert D.plucker_lhs == 12 == D.plucker_rhs and D.equality
    D = dual_invariants(bh3)
    assert (D.q_gamma, D.s_gamma, D.d_star) == (3, 1, 2)
    assert D.plucker_lhs == 6 == D.plucker_rhs
    D = dual_invariants(quartic7, 2)
    assert (D.q_gamma, D.s_gamma) == (1, 1)
    # a smooth reflexive quartic has class d(d - 1)
    assert D.d_star == 12


@pytest.mark.parametrize("seed", range(3))
def test_plucker_inequality_cuspidal(seed):
    C = cuspidal(5, d=4, seed=seed)
    D = dual_invariants(C, 2)
    assert D.plucker_lhs <= D.plucker_rhs
    if D.immersed:
        assert D.equality


def test_inseparable_degree():
    assert inseparable_degree(7, 2) == 1
    assert inseparable_degree(2, 2) == 2
    assert inseparable_degree(3, 3) == 3


def test_hefez_kleiman_observable(fermat3, fermat4, bh3):
    for C in (fermat3, fermat4, bh3):
        prof = generic_contact(C, 3)
        assert prof.M < 3 or _is_power_of(prof.M, C.field.p)
        D = dual_invariants(C, 3, profile=prof)
        if D.q_gamma >= 2:
            assert D.q_gamma == prof.M


def test_kaji(bh3, quartic7):
    r = kaji_genus_check(bh3)
    assert (r.genus, r.dual_genus, r.status) == (0, 0, "match")
    r = kaji_genus_check(cuspidal(5, d=4, seed=0))
    assert r.status == "match"
    assert kaji_genus_check(quartic7, dual_invariants(quartic7, 2)).status == "not determinable"
