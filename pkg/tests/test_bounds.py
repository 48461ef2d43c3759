import dataclasses

import pytest

from galoispoints.algebra import field_make, parse_binary, parse_ternary
from galoispoints.bounds import (
    BoundsError,
    UndeterminedGenus,
    bounds_report,
    char0_strict_bound,
    corollary_checks,
    equality_classify,
    main_bound,
    main_theorem_check,
    proposition_checks,
    summarize,
)
from galoispoints.curves import curve_from_implicit, curve_from_param, cuspidal, fermat


def _by_name(records):
    return {r.name: r for r in records}


@pytest.fixture(scope="module")
def fermat_summary(fermat3):
    return summarize(fermat3, k_max=2)


@pytest.fixture(scope="module")
def bh_summary(bh3):
    return summarize(bh3, k_max=2)


def inner_galois_quartic(p):
    """Y Z^3 + F(X, Y): projection from (0:0:1) is a cyclic triple cover."""
    K = field_make(p)
    return curve_from_implicit(parse_ternary(K, "Y*Z^3 + X^4 + 2*X^2*Y^2 + X*Y^3 + 3*Y^4"))


def test_main_bound_formula():
    assert main_bound(3, 3, 4) == 28
    assert main_bound(3, 0, 4) == 4
    assert main_bound(4, 6, 5) == 65


def test_fermat_records(fermat3, fermat_summary):
    r = main_theorem_check(fermat_summary)
    assert (r.lhs, r.rhs, r.equality) == (28, 28, True)
    cor = _by_name(corollary_checks(fermat_summary))
    assert (cor["with-singular-bound"].lhs, cor["with-singular-bound"].rhs) == (28, 28)
    props = _by_name(proposition_checks(fermat_summary, fermat3))
    imm = props["many-points-immersed"]
    assert (imm.lhs, imm.rhs, imm.relation, imm.holds) == (10, 28, "<", True)


def test_bh_records(bh3, bh_summary):
    r = main_theorem_check(bh_summary)
    assert (r.lhs, r.rhs, r.equality) == (4, 4, True)
    cor = _by_name(corollary_checks(bh_summary))["with-singular-bound"]
    assert (cor.lhs, cor.rhs, cor.equality) == (7, 7, True)
    hc = _by_name(proposition_checks(bh_summary, bh3))["high-contact-bound"]
    assert (hc.lhs, hc.rhs, hc.holds) == (4, 4, True)
    assert hc.caveats == ("every certified smooth Galois point has tangent contact 4",)


@pytest.mark.parametrize("p", [5, 7])
def test_inner_galois_quartic_strict(p):
    C = inner_galois_quartic(p)
    s = summarize(C, k_max=2)
    assert (s.M, s.g, s.delta, s.delta_s) == (2, 3, 1, 0)
    recs = _by_name([main_theorem_check(s)] + corollary_checks(s))
    assert recs["main-bound"].lhs == 1 and recs["main-bound"].rhs == 24
    assert not recs["main-bound"].equality
    strict = recs["reflexive-strict-bound"]
    assert strict.relation == "<" and strict.holds


def test_char0_formula():
    r = char0_strict_bound(4, 3)
    assert (r.lhs, r.rhs, r.holds) == (None, 24, None)
    r = char0_strict_bound(4, 3, 4)
    assert r.holds and r.relation == "<"


@pytest.mark.parametrize("seed", range(5))
def test_cuspidal_unibranch_bound(seed):
    C = cuspidal(5, d=4, seed=seed)
    s = summarize(C, k_max=2)
    assert s.M == 2
    rec = _by_name(proposition_checks(s, C))["unibranch-cusp-bound"]
    assert rec.holds and rec.rhs == 2


def test_classify_fermat(fermat3, fermat_summary):
    c = equality_classify(fermat3, fermat_summary)
    assert c.kind == "fermat-type"


def test_classify_bh_after_coordinate_change(bh3):
    K = bh3.field
    A = [[1, 2, 0], [0, 1, 1], [1, 0, 2]]
    comps = []
    for row in A:
        acc = None
        for coef, f in zip(row, bh3.param):
            term = f.scale(K.from_int(coef))
            acc = term if acc is None else acc + term
        comps.append(acc)
    C = curve_from_param(*comps, label="moved")
    s = summarize(C, k_max=2)
    c = equality_classify(C, s)
    assert c.kind == "ballico-hefez-type"
    assert c.matrix is not None


def test_classify_guard(fermat3, fermat_summary):
    fake = dataclasses.replace(fermat_summary, d=5, delta=31)
    assert main_theorem_check(fake).equality
    c = equality_classify(fermat3, fake)
    assert c.kind == "neither" and "ALARM" in c.reason


def test_bounds_verdicts_no_alarm(bh3, bh_summary):
    V = bounds_report(bh3, bh_summary)
    assert not V.alarm
    assert V.classification.kind == "ballico-hefez-type"


def test_degree_gate_and_genus():
    K = field_make(5)
    C = curve_from_param(*(parse_binary(K, x) for x in ("s^3", "s^2*t", "t^3")))
    with pytest.raises(BoundsError):
        summarize(C)
    # an implicit curve with a non-ordinary triple point
    D = curve_from_implicit(parse_ternary(K, "X^3*Z - X^4 - Y^4 - 2*X*Y^3"))
    with pytest.raises(UndeterminedGenus):
        summarize(D, k_max=2)


def test_fermat_degree_five_summary(fermat4):
    s = summarize(fermat4, k_max=4, search_k=8)
    assert (s.g, s.M, s.delta) == (6, 4, 65)
    assert main_theorem_check(s).equality
    assert fermat(2, 2) == fermat4
