"""Sylvester resultants.

Two independent routes:

* ``resultant_eliminate`` works on ``MPoly`` entries and takes the Sylvester
  determinant by fraction-free (Bareiss) elimination, so it handles any
  number of remaining variables.
* ``eliminate_z`` is the fast path used by the geometry code: for two ternary
  forms it evaluates the Sylvester determinant at enough points of the chart
  Y = 1 and interpolates, returning a binary form in X, Y.
"""

from __future__ import annotations

from . import poly
from .fields import Field, embedding, extension
from .forms import BinaryForm, MPoly, TernaryForm


def sylvester(f: list, g: list, zero) -> list[list]:
    """Sylvester matrix of coefficient lists given highest degree first."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(f) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(g) + [zero] * (size - n - 1 - i))
    return rows


def bareiss_det(M: list[list], *, add, sub, mul, exquo, is_zero, zero, one):
    """Fraction-free determinant over an integral domain."""
    n = len(M)
    if n == 0:
        return one
    A = [list(r) for r in M]
    sign = False
    prev = one
    for k in range(n - 1):
        if is_zero(A[k][k]):
            for i in range(k + 1, n):
                if not is_zero(A[i][k]):
                    A[k], A[i] = A[i], A[k]
                    sign = not sign
                    break
            else:
                return zero
        akk = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = exquo(sub(mul(akk, A[i][j]), mul(A[i][k], A[k][j])), prev)
        prev = akk
    d = A[n - 1][n - 1]
    if sign:
        d = sub(zero, d)
    return d


def field_det(F, M: list[list]):
    """Determinant of a square matrix over a field by Gaussian elimination."""
    n = len(M)
    A = [list(r) for r in M]
    det = F.one
    for k in range(n):
        piv = None
        for i in range(k, n):
            if A[i][k]:
                piv = i
                break
        if piv is None:
            return F.zero
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            det = F.neg(det)
        akk = A[k][k]
        det = F.mul(det, akk)
        inv = F.inv(akk)
        for i in range(k + 1, n):
            if A[i][k]:
                c = F.mul(A[i][k], inv)
                row_k = A[k]
                row_i = A[i]
                for j in range(k + 1, n):
                    if row_k[j]:
                        row_i[j] = F.sub(row_i[j], F.mul(c, row_k[j]))
    return det


def resultant_eliminate(f: MPoly, g: MPoly, var: str) -> MPoly:
    """Res_var(f, g) as a polynomial in the remaining variables."""
    if var not in f.vars or var not in g.vars:
        raise ValueError("variable %r is absent" % var)
    if f.vars != g.vars:
        raise ValueError("polynomials live in different rings")
    if f.degree_in(var) < 1 or g.degree_in(var) < 1:
        raise ValueError("both polynomials must have positive degree in %r" % var)
    fc = list(reversed(f.coefficients_in(var)))
    gc = list(reversed(g.coefficients_in(var)))
    rest = fc[0].vars
    F = f.field
    zero = MPoly(F, rest, {})
    one = MPoly.constant(F, rest, F.one)
    M = sylvester(fc, gc, zero)
    return bareiss_det(
        M,
        add=lambda a, b: a + b,
        sub=lambda a, b: a - b,
        mul=lambda a, b: a * b,
        exquo=lambda a, b: a.exquo(b),
        is_zero=lambda a: a.is_zero(),
        zero=zero,
        one=one,
    )


def univariate_resultant(F, f: list, g: list, df: int | None = None, dg: int | None = None):
    """Res(f, g) of coefficient lists (low to high) with formal degrees df, dg."""
    if df is None:
        df = len(f) - 1
    if dg is None:
        dg = len(g) - 1
    fh = [f[i] if i < len(f) else F.zero for i in range(df, -1, -1)]
    gh = [g[i] if i < len(g) else F.zero for i in range(dg, -1, -1)]
    if df == 0 and dg == 0:
        return F.one
    return field_det(F, sylvester(fh, gh, F.zero))


def _result_degree(m: int, n: int, a: int, b: int) -> int:
    # Res_Z of forms of total degrees m, n and Z-degrees a, b is homogeneous
    # of degree b m + a n - a b in the remaining variables.
    return b * m + a * n - a * b


def eliminate_z(Fm: TernaryForm, Gm: TernaryForm) -> BinaryForm:
    """Res_Z(F, G) as a binary form in (X, Y), using the actual Z-degrees.

    Vanishes at (x:y) iff F(x,y,Z) and G(x,y,Z) share a root or both leading
    Z-coefficients vanish there.
    """
    K = Fm.field
    a, b = Fm.z_degree(), Gm.z_degree()
    if a < 0 or b < 0:
        raise ValueError("zero form")
    D = _result_degree(Fm.degree, Gm.degree, a, b)
    fz = Fm.z_coefficients_chart()
    gz = Gm.z_coefficients_chart()
    if not isinstance(K, Field):
        raise NotImplementedError("fast elimination is for finite fields")
    # evaluation field with at least D + 2 elements
    L = K
    m = 1
    while L.q < D + 2:
        m += 1
        L = extension(K, m)
    if L is not K:
        emb = embedding(K, L)
        fz = [[emb[c] for c in r] for r in fz]
        gz = [[emb[c] for c in r] for r in gz]
    xs = list(range(D + 1)) if L.k == 1 else [L.exp(i) for i in range(D)] + [0]
    ys = []
    for x in xs:
        fv = [poly.evaluate(L, r, x) for r in fz]
        gv = [poly.evaluate(L, r, x) for r in gz]
        ys.append(univariate_resultant(L, fv, gv, a, b))
    r = poly.lagrange_interpolate(L, xs, ys)
    if L is not K:
        inv = {v: i for i, v in enumerate(emb)}
        try:
            r = [inv[c] for c in r]
        except KeyError:  # pragma: no cover - would mean a broken embedding
            raise ArithmeticError("resultant left the base field")
    return BinaryForm(K, D, r)
