import random
from math import lcm

import pytest

from galoispoints.algebra import factor_univariate, field_make, parse_binary, parse_ternary
from galoispoints.curves import (
    CurveError,
    ProjLine,
    ProjPoint,
    cuspidal,
    curve_from_implicit,
    curve_from_param,
    family,
    fermat,
    genus_of,
    intersection_multiplicity,
    intersection_with_line,
    level,
    multiplicity_at,
    points_of_level,
    points_over,
    random_smooth,
    singular_points,
    tangent_line_at,
    tower_field,
    tower_points,
)


def test_fermat_model(fermat3):
    assert fermat3.degree == 4
    assert fermat3.form == parse_ternary(field_make(3), "X^4 + Y^4 + Z^4")
    assert genus_of(fermat3) == 3
    sing = singular_points(fermat3)
    assert sing.points == () and sing.complete


def test_reducible_rejected():
    F = field_make(5)
    with pytest.raises(CurveError):
        curve_from_implicit(parse_ternary(F, "X*Y"))


def test_degree_gate():
    with pytest.raises(CurveError):
        fermat(2, 1)
    with pytest.raises(CurveError):
        family("hermitian", p=3)


def test_cuspidal_triple_point():
    C = cuspidal(5, d=4, seed=3)
    assert C.degree == 4
    Q = ProjPoint.of(C.field, 0, 0, 1)
    assert multiplicity_at(C, Q) == 3
    sing = singular_points(C)
    assert [(P, m) for P, m in sing.points] == [(Q, 3)]


def test_bh_nodes(bh3):
    assert genus_of(bh3) == 0
    sing = singular_points(bh3)
    assert sing.complete
    assert sorted(m for _, m in sing.points) == [2, 2, 2]


def test_genus_fermat_degree_five(fermat4):
    assert genus_of(fermat4) == 6


def test_multiplicity_examples(fermat3):
    K = fermat3.field
    assert multiplicity_at(fermat3, ProjPoint.of(K, 1, 1, 1)) == 1
    assert multiplicity_at(fermat3, ProjPoint.of(K, 1, 0, 0)) == 0


def test_full_contact_line(fermat3):
    K = fermat3.field
    P = ProjPoint.of(K, 1, 1, 1)
    T = tangent_line_at(fermat3, P)
    assert T == ProjLine.of(K, 1, 1, 1)
    inter = intersection_with_line(fermat3, T)
    assert inter.points == ((P, 4),) and inter.remainder == 0
    x0 = ProjLine.of(K, 1, 0, 0)
    assert intersection_with_line(fermat3, x0).remainder == 4
    split = intersection_with_line(fermat3, x0, field_make(3, 2))
    assert len(split.points) == 4 and all(m == 1 for _, m in split.points)
    with pytest.raises(CurveError):
        tangent_line_at(fermat3, ProjPoint.of(K, 1, 0, 0))


def test_conic_tangent():
    F = field_make(5)
    C = curve_from_implicit(parse_ternary(F, "X*Z - Y^2"))
    assert tangent_line_at(C, ProjPoint.of(F, 0, 0, 1)) == ProjLine.of(F, 1, 0, 0)


def test_level_counts(fermat4):
    counts = [len(points_of_level(fermat4, j)) for j in range(1, 5)]
    assert counts == [3, 2, 6, 60]
    assert len(points_over(fermat4, 2)) == 5
    K = fermat4.field
    for P in tower_points(fermat4, 3):
        assert P.field == tower_field(K, level(P, K))


def _random_line(F, rng):
    while True:
        v = [rng.randrange(F.q) for _ in range(3)]
        if any(v):
            return ProjLine(F, tuple(v))


@pytest.mark.parametrize("seed", range(40))
def test_bezout_on_lines(seed):
    rng = random.Random(seed)
    C = random_smooth(5, d=rng.choice([4, 5]), seed=seed % 5)
    ln = _random_line(C.field, rng)
    inter = intersection_with_line(C, ln)
    assert inter.total == C.degree
    # over a splitting field the remainder vanishes
    A, B = ln.spanning_points()
    r = C.form.restrict_to_line(A.coords, B.coords)
    n = 1
    for g, _ in factor_univariate(C.field, r.coeffs_trimmed()):
        n = lcm(n, len(g) - 1)
    assert intersection_with_line(C, ln, field_make(5, n)).remainder == 0


@pytest.mark.parametrize("seed", range(6))
def test_parametrization_satisfies_equation(seed):
    C = cuspidal(7, d=4 + seed % 2, seed=seed)
    assert C.form.substitute_binary(C.param).is_zero()


def test_bh_parametrization(bh3):
    assert bh3.form.substitute_binary(bh3.param).is_zero()


def test_improper_parametrization_rejected():
    F = field_make(5)
    f = [parse_binary(F, x) for x in ("s^4", "s^2*t^2", "t^4")]
    with pytest.raises(CurveError):
        curve_from_param(*f)


@pytest.mark.parametrize("seed", range(4))
def test_singular_iff_multiplicity(seed):
    C = cuspidal(5, d=4, seed=seed)
    sing = {P for P, _ in singular_points(C, 2).points}
    for P in tower_points(C, 2):
        assert (multiplicity_at(C, P) >= 2) == (P in sing)


@pytest.mark.parametrize("seed", range(4))
def test_tangent_contact_at_least_two(seed):
    C = random_smooth(7, d=4, seed=seed)
    for P in points_over(C, 1):
        T = tangent_line_at(C, P)
        assert intersection_multiplicity(C, P, T) >= 2
