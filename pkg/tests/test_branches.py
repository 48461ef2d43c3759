import pytest
from hypothesis import given, strategies as st

from galoispoints.algebra import field_make, parse_binary
from galoispoints.algebra.linalg import cross
from galoispoints.branches import (
    BranchError,
    branch_at_param,
    branch_order,
    branch_tangent_nu,
    branches_at,
    nonsingular_branch,
    tower_branches,
)
from galoispoints.contact import generic_contact
from galoispoints.curves import (
    ProjLine,
    ProjPoint,
    cuspidal,
    curve_from_param,
    intersection_multiplicity,
    level,
    points_of_level,
    singular_points,
    tower_points,
)
from galoispoints.galois import galois_survey


def test_bh_branch_at_infinity(bh3):
    K = bh3.field
    B = branch_at_param(bh3, (1, 0))
    assert B.center == ProjPoint.of(K, 1, 1, 0)
    assert branch_order(B, ProjLine.of(K, 0, 0, 1)) == 4
    # a line through (1:1:0) other than the tangent
    assert branch_order(B, ProjLine.of(K, 1, 2, 1)) == 1
    assert branch_order(B, ProjLine.of(K, 1, 0, 0)) == 0


def test_branch_counts(bh3, fermat3):
    for P, m in singular_points(bh3).points:
        bs = branches_at(bh3, P)
        assert len(bs) == 2 and all(nonsingular_branch(B) for B in bs)
    P = ProjPoint.of(fermat3.field, 1, 1, 1)
    (B,) = branches_at(fermat3, P)
    assert nonsingular_branch(B)
    T, nu = branch_tangent_nu(B)
    assert T == ProjLine.of(fermat3.field, 1, 1, 1) and nu == 4


def test_cuspidal_center_branches():
    C = cuspidal(5, d=4, seed=2)
    Q = ProjPoint.of(C.field, 0, 0, 1)
    bs = branches_at(C, Q)
    assert len(bs) == 1
    assert bs[0].multiplicity == 3


def test_cusp_branch_is_singular():
    F = field_make(5)
    C = curve_from_param(*(parse_binary(F, x) for x in ("s^3", "s*t^2", "t^3")))
    B = branch_at_param(C, (1, 0))
    assert B.multiplicity == 2 and not nonsingular_branch(B)
    with pytest.raises(BranchError):
        branch_tangent_nu(B)


def test_fermat_contact_by_level(fermat3):
    K = fermat3.field
    for P in tower_points(fermat3, 4):
        (B,) = branches_at(fermat3, P)
        expected = 3 if level(P, K) == 3 else 4
        assert B.nu == expected
    assert points_of_level(fermat3, 4) == ()


def test_bh_galois_branches_full_contact(bh3):
    S = galois_survey(bh3, 2)
    pts = S.galois_points(smooth=True)
    assert len(pts) == 4
    for P in pts:
        (B,) = branches_at(bh3, P)
        assert B.nu == 4


def _curves():
    from galoispoints.curves import ballico_hefez

    return [ballico_hefez(3, 1), cuspidal(5, d=4, seed=1), cuspidal(7, d=5, seed=2)]


CURVES = _curves()


@given(st.integers(0, len(CURVES) - 1), st.integers(0, 10**6), st.integers(0, 10**6))
def test_branch_orders_sum_to_intersection(ci, pi, li):
    C = CURVES[ci]
    pts = tower_points(C, 2)
    R = pts[pi % len(pts)]
    W = R.field
    v = (li % W.q, (li // W.q) % W.q, (li // W.q**2) % W.q)
    h = cross(W, R.coords, v)
    if not any(h):
        return
    line = ProjLine(W, h)
    total = sum(branch_order(B, line) for B in branches_at(C, R))
    assert total == intersection_multiplicity(C, R, line)


@pytest.mark.parametrize("ci", range(len(CURVES)))
def test_tangent_is_unique(ci):
    C = CURVES[ci]
    for B in tower_branches(C, 1):
        if not nonsingular_branch(B):
            continue
        W = B.field
        P = B.center
        lines = {ProjLine(W, cross(W, P.coords, (a, b, c)))
                 for a in range(W.q) for b in range(W.q) for c in range(W.q)
                 if any(cross(W, P.coords, (a, b, c)))}
        high = [ln for ln in lines if branch_order(B, ln) >= 2]
        assert high == [B.tangent]


@pytest.mark.parametrize("ci", range(len(CURVES)))
def test_nu_at_least_generic_contact(ci):
    C = CURVES[ci]
    M = generic_contact(C, 2).M
    assert all(B.nu >= M for B in tower_branches(C, 2) if nonsingular_branch(B))
