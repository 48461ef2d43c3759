import random

import pytest

from galoispoints.algebra import field_make
from galoispoints.algebra.linalg import cross
from galoispoints.branches import branches_at
from galoispoints.curves import (
    ProjLine,
    ProjPoint,
    ballico_hefez,
    cuspidal,
    fermat,
    intersection_multiplicity,
    multiplicity_at,
    points_of_level,
    random_smooth,
    singular_points,
    tangent_line_at,
    to_minimal_field,
    tower_points,
)
from galoispoints.projection import (
    StrangeCenterError,
    fiber_profile,
    galois_filter,
    projection_setup,
    riemann_hurwitz_audit,
)


def _lines_through(Q):
    W = Q.field
    seen = set()
    for a in range(W.q):
        for b in range(W.q):
            for c in range(W.q):
                h = cross(W, Q.coords, (a, b, c))
                if any(h):
                    ln = ProjLine(W, h)
                    if ln not in seen:
                        seen.add(ln)
                        yield ln


def test_setup_examples(fermat3, bh3):
    K = fermat3.field
    S = projection_setup(fermat3, ProjPoint.of(K, 1, 1, 1))
    assert (S.degree, S.separable) == (3, True)
    assert projection_setup(fermat3, ProjPoint.of(K, 1, 0, 0)).degree == 4
    node = singular_points(bh3).points[0][0]
    S = projection_setup(bh3, node)
    assert (S.degree, S.separable) == (2, True)


def test_fermat_fibers(fermat3):
    K = fermat3.field
    Q = ProjPoint.of(K, 1, 1, 1)
    S = projection_setup(fermat3, Q)
    fp = fiber_profile(S, ProjLine.of(K, 1, 1, 1))
    assert fp.indices == (3,) and fp.deficit == 0 and fp.entries[0].center == Q
    fp = fiber_profile(S, ProjLine.of(K, 1, K.neg(1), 0))
    assert fp.indices == (1, 1, 1) and fp.deficit == 0
    assert sorted(e.center.field.k for e in fp.entries) == [1, 2, 2]


def test_bh_node_fiber(bh3):
    node = singular_points(bh3).points[0][0]
    S = projection_setup(bh3, node)
    tangents = {to_minimal_field(B.tangent, bh3.field) for B in branches_at(bh3, node)}
    for ln in _lines_through(node):
        if ln in tangents:
            continue
        fp = fiber_profile(S, ln)
        if fp.deficit == 0 and len(fp.entries) == 2:
            assert fp.indices == (1, 1)
            break
    else:
        pytest.fail("no split unramified fiber found")


def test_filter_examples(fermat3, bh3):
    K = fermat3.field
    assert galois_filter(projection_setup(fermat3, ProjPoint.of(K, 1, 1, 1))).passed
    node = singular_points(bh3).points[0][0]
    assert galois_filter(projection_setup(bh3, node)).passed


def test_filter_rejects_nonflex(fermat3):
    Q = points_of_level(fermat3, 3)[0]
    v = galois_filter(projection_setup(fermat3, Q))
    assert v.passed is False
    assert tuple(v.witness.indices) == (2, 1)
    assert v.witness.line == tangent_line_at(fermat3, Q)


def test_hurwitz_examples(fermat3, bh3, quartic7):
    node = singular_points(bh3).points[0][0]
    a = riemann_hurwitz_audit(projection_setup(bh3, node))
    assert (a.tame, a.balanced, a.ramification) == (True, True, 2)
    a = riemann_hurwitz_audit(projection_setup(fermat3, ProjPoint.of(fermat3.field, 1, 1, 1)))
    assert a.tag == "wild"
    K = quartic7.field
    outside = next(P for P in (ProjPoint.of(K, x, y, 1) for x in range(7) for y in range(7))
                   if not quartic7.contains(P))
    a = riemann_hurwitz_audit(projection_setup(quartic7, outside))
    assert a.tame and a.balanced and a.ramification == 2 * 3 - 2 + 2 * 4


CURVES = {
    "fermat": lambda: fermat(3, 1),
    "bh": lambda: ballico_hefez(3, 1),
    "cusp": lambda: cuspidal(5, d=4, seed=1),
    "quartic": lambda: random_smooth(5, d=4, seed=2),
}


@pytest.mark.parametrize("name", sorted(CURVES))
def test_fiber_conservation(name):
    C = CURVES[name]()
    rng = random.Random(name)
    K = C.field
    W = field_make(K.p, 2)
    on = list(tower_points(C, 1))
    off = [ProjPoint(W, (rng.randrange(W.q), rng.randrange(W.q), 1)) for _ in range(10)]
    centers = rng.sample(on, min(5, len(on))) + [P for P in off if not C.contains(P)][:5]
    for Q in centers:
        try:
            S = projection_setup(C, Q)
        except StrangeCenterError:
            continue
        for ln in _lines_through(Q):
            fp = fiber_profile(S, ln, 4)
            assert fp.total == S.degree


@pytest.mark.parametrize("seed", range(3))
def test_tangent_fiber_index(seed):
    C = random_smooth(7, d=4, seed=seed)
    for Q in tower_points(C, 1):
        if multiplicity_at(C, Q) != 1:
            continue
        S = projection_setup(C, Q)
        T = tangent_line_at(C, Q)
        fp = fiber_profile(S, T)
        here = [e.index for e in fp.entries if e.center == Q]
        assert here == [intersection_multiplicity(C, Q, T) - 1]
