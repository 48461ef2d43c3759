import pytest

from galoispoints.algebra import field_make
from galoispoints.curves import (
    ProjPoint,
    level,
    points_of_level,
    points_over,
    random_smooth,
    singular_points,
)
from galoispoints.galois import (
    certify_point,
    deck_group,
    galois_survey,
    two_galois_line_check,
)
from galoispoints.projection import projection_setup

from oracles import implicit_deck_order, param_deck_order

F9 = field_make(3, 2)


def test_fermat_deck_group_matches_scan(fermat3):
    Q = ProjPoint.of(fermat3.field, 1, 1, 1)
    G = deck_group(fermat3, Q, F9)
    assert G.order == 3 == implicit_deck_order(fermat3, Q, F9)
    assert G.certified and G.structure.startswith("cyclic")


def test_fermat_nonflex_point_uncertified(fermat3):
    Q = points_of_level(fermat3, 3)[0]
    W = Q.field
    G = deck_group(fermat3, Q, W)
    assert G.order == 1 == implicit_deck_order(fermat3, Q, W)
    assert not G.certified
    assert certify_point(fermat3, Q).verdict == "not galois"


def test_bh_deck_groups_match_scan(bh3):
    for P, _ in singular_points(bh3).points:
        G = deck_group(bh3, P, F9)
        assert G.order == 2 == param_deck_order(bh3, P, F9) and G.certified
    for P in points_over(bh3, 1):
        G = deck_group(bh3, P, F9)
        assert G.order == param_deck_order(bh3, P, F9)
    generic = [P for P in points_of_level(bh3, 2)][:4]
    for P in generic:
        G = deck_group(bh3, P, F9)
        assert G.order == param_deck_order(bh3, P, F9) < 3
        assert not G.certified


def test_fermat_survey(fermat3):
    S = galois_survey(fermat3, 2, 2)
    assert (S.delta, S.delta_s, S.complete) == (28, 0, True)


def test_bh_survey(bh3):
    S = galois_survey(bh3, 2)
    assert (S.delta, S.delta_s) == (4, 3)


def test_survey_is_deterministic(bh3):
    a = galois_survey(bh3, 2)
    b = galois_survey(bh3, 2)
    assert [(r.point, r.verdict, r.group_order) for r in a.records] == \
           [(r.point, r.verdict, r.group_order) for r in b.records]


def test_parallel_survey_matches_serial(bh3):
    a = galois_survey(bh3, 2, jobs=1)
    b = galois_survey(bh3, 2, jobs=2)
    assert [(r.point, r.verdict) for r in a.records] == [(r.point, r.verdict) for r in b.records]


@pytest.mark.parametrize("seed", range(3))
def test_random_quartic_survey_soundness(seed):
    C = random_smooth(5, d=4, seed=seed)
    S = galois_survey(C, 2)
    for r in S.records:
        if r.verdict == "galois":
            assert r.filter.passed is not False
        if r.group_order is not None:
            assert projection_setup(C, r.point).degree % r.group_order == 0


def test_frobenius_equivariance(fermat4):
    S = galois_survey(fermat4, 3, 2)
    K = fermat4.field
    by = {(r.point.field.k, r.point.coords): r.verdict for r in S.records}
    for r in S.records:
        c = r.point.frobenius(K.k)
        assert by[(c.field.k, c.coords)] == r.verdict
    assert all(r.verdict == "not galois" for r in S.records if level(r.point, K) == 3)


def test_two_galois_line_check_fermat_all_pairs(fermat3):
    pts = galois_survey(fermat3, 2).galois_points()
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            assert two_galois_line_check(fermat3, pts[i], pts[j])


def test_two_galois_line_check_bh(bh3):
    pts = galois_survey(bh3, 2).galois_points(smooth=True)
    assert two_galois_line_check(bh3, pts[0], pts[1])
    with pytest.raises(ValueError):
        two_galois_line_check(bh3, pts[0], pts[0])
