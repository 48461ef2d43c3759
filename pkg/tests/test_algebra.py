import itertools
import random

import pytest
from hypothesis import given, strategies as st

from galoispoints.algebra import (
    BinaryForm,
    FieldError,
    embedding,
    factor_univariate,
    field_make,
    parse_binary,
    parse_mpoly,
    parse_ternary,
    projective_roots,
    resultant_eliminate,
)
from galoispoints.algebra import poly
from galoispoints.algebra.parse import ParseError
from galoispoints.algebra.quotient import QuotientField
from galoispoints.algebra.resultant import eliminate_z, univariate_resultant

SMALL_FIELDS = [(2, 2), (3, 2), (2, 4)]


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, k):
    F = field_make(p, k)
    els = list(F.elements())
    for a in els:
        assert F.add(a, F.neg(a)) == F.zero
        if a:
            assert F.mul(a, F.inv(a)) == F.one
    for a, b, c in itertools.product(els, repeat=3):
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))


def test_field_make_rejects_bad_input():
    with pytest.raises(FieldError):
        field_make(4)
    with pytest.raises(FieldError):
        field_make(3, 2, (1, 0, 1, 0))
    with pytest.raises(FieldError):
        field_make(3, 2, (2, 0, 1))  # t^2 - 1 is reducible
    assert field_make(3, 2) is field_make(3, 2) or field_make(3, 2) == field_make(3, 2)


def test_frobenius_and_pth_root():
    F = field_make(3, 4)
    for a in F.elements():
        assert F.pth_root(F.frobenius(a)) == a
        assert F.frobenius(a, 4) == a


def test_embedding_chain_commutes():
    F3, F9, F81 = field_make(3, 1), field_make(3, 2), field_make(3, 4)
    e39, e981, e381 = embedding(F3, F9), embedding(F9, F81), embedding(F3, F81)
    for a in F3.elements():
        assert e981[e39[a]] == e381[a]
    for a, b in itertools.product(F9.elements(), repeat=2):
        assert e981[F9.mul(a, b)] == F81.mul(e981[a], e981[b])
        assert e981[F9.add(a, b)] == F81.add(e981[a], e981[b])


def test_factor_examples():
    F = field_make(3)
    # s^4 - s = s (s - 1)^3
    fs = factor_univariate(F, [0, F.neg(1), 0, 0, 1])
    assert sorted(fs) == sorted([([0, 1], 1), ([F.neg(1), 1], 3)])
    assert factor_univariate(F, [1, 0, 1]) == [([1, 0, 1], 1)]
    assert factor_univariate(F, [1]) == []


@given(st.lists(st.integers(0, 6), min_size=1, max_size=9), st.sampled_from([(7, 1), (2, 3), (3, 2)]))
def test_factor_product_roundtrip(cs, pk):
    F = field_make(*pk)
    f = poly.strip([F.from_int(c) if F.k == 1 else c % F.q for c in cs])
    if not f:
        return
    prod = [poly.lc(f)]
    for g, m in factor_univariate(F, f):
        assert poly.is_irreducible(F, g)
        prod = poly.mul(F, prod, poly.power(F, g, m))
    assert prod == f


def test_resultant_examples():
    F = field_make(5)
    vars_ = ("X", "Y", "Z")
    f = parse_mpoly(F, "Z - X", vars_)
    g = parse_mpoly(F, "Z - Y", vars_)
    r = resultant_eliminate(f, g, "Z")
    target = parse_mpoly(F, "X - Y", r.vars)
    assert r in (target, target.scale(F.neg(1)))
    conic = resultant_eliminate(parse_mpoly(F, "Y*s^2 - X*s*t", ("X", "Y", "Z", "s", "t")),
                                parse_mpoly(F, "Z*s^2 - X*t^2", ("X", "Y", "Z", "s", "t")), "t")
    target = parse_mpoly(F, "X*Z - Y^2", conic.vars)
    assert not conic.is_zero()
    assert conic.exquo(target) is not None
    G = parse_ternary(F, "X^2 + Y*Z")
    assert eliminate_z(G, G).is_zero()


def test_projective_roots_examples():
    F = field_make(5)
    f = parse_binary(F, "s^2*t - s*t^2")
    roots = sorted(projective_roots(f))
    assert roots == sorted([((0, 1), 1), ((1, 1), 1), ((1, 0), 1)])
    F3, F9 = field_make(3), field_make(3, 2)
    g = parse_binary(F3, "s^4 + t^4")
    assert projective_roots(g) == []
    r9 = projective_roots(g, F9)
    assert len(r9) == 4 and all(m == 1 for _, m in r9)


@given(st.lists(st.integers(0, 2), min_size=3, max_size=6))
def test_projective_roots_embedding_compatible(cs):
    F3, F9 = field_make(3), field_make(3, 2)
    d = len(cs) - 1
    f = BinaryForm(F3, d, cs)
    if f.is_zero():
        return
    small = projective_roots(f)
    big = set(projective_roots(f, F9))
    e = embedding(F3, F9)
    for (s, t), m in small:
        assert ((e[s], e[t]), m) in big


def _binary_pairs(seed):
    F = field_make(5)
    rng = random.Random(seed)
    a = BinaryForm(F, 3, [rng.randrange(5) for _ in range(4)])
    b = BinaryForm(F, 4, [rng.randrange(5) for _ in range(5)])
    return F, a, b


@pytest.mark.parametrize("seed", range(25))
def test_resultant_vanishes_iff_common_root(seed):
    F, a, b = _binary_pairs(seed)
    if a.is_zero() or b.is_zero():
        return
    res = univariate_resultant(F, list(a.coeffs), list(b.coeffs), 3, 4)
    shared = a.gcd(b).degree > 0
    assert (res == 0) == shared


def test_quotient_field_arithmetic():
    F = field_make(3)
    Q = QuotientField(F, [1, 0, 1])  # GF(9) as GF(3)[x]/(x^2+1)
    x = Q.root()
    assert Q.mul(x, x) == Q.from_int(2)
    for a in [Q.from_int(1), x, Q.add(x, Q.from_int(1))]:
        assert Q.mul(a, Q.inv(a)) == Q.one
        assert Q.pow(Q.pth_root(a), 3) == a
    assert Q.q == 9


def test_parse_errors_report_column():
    F = field_make(3)
    with pytest.raises(ParseError) as err:
        parse_ternary(F, "X^4 + Y^3*$")
    assert err.value.pos == 10
    with pytest.raises(ParseError):
        parse_ternary(F, "X^2 + Y")
    with pytest.raises(ParseError):
        parse_ternary(F, "X^2 + Y^2 +")
