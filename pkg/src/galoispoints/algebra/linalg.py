"""Dense linear algebra over a field (row-reduction based)."""

from __future__ import annotations


def rref(F, M: list[list]) -> tuple[list[list], list[int]]:
    A = [list(r) for r in M]
    rows = len(A)
    cols = len(A[0]) if A else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(x, inv) for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def nullspace(F, M: list[list], cols: int | None = None) -> list[list]:
    """Basis of {v : M v = 0}."""
    if cols is None:
        cols = len(M[0]) if M else 0
    if not M:
        return [[F.one if i == j else F.zero for i in range(cols)] for j in range(cols)]
    R, pivots = rref(F, M)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [F.zero] * cols
        v[fc] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R[i][fc])
        basis.append(v)
    return basis


def solve(F, A: list[list], b: list):
    """A unique solution of A x = b for square invertible A, or None."""
    n = len(A)
    aug = [list(A[i]) + [b[i]] for i in range(n)]
    R, pivots = rref(F, aug)
    if pivots != list(range(n)):
        return None
    return [R[i][n] for i in range(n)]


def mat_mul(F, A, B):
    n, m, k = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            acc = F.zero
            for t in range(m):
                if A[i][t] and B[t][j]:
                    acc = F.add(acc, F.mul(A[i][t], B[t][j]))
            row.append(acc)
        out.append(row)
    return out


def det3(F, M) -> object:
    (a, b, c), (d, e, f), (g, h, i) = M
    m = F.mul
    t1 = m(a, F.sub(m(e, i), m(f, h)))
    t2 = m(b, F.sub(m(d, i), m(f, g)))
    t3 = m(c, F.sub(m(d, h), m(e, g)))
    return F.add(F.sub(t1, t2), t3)


def inverse(F, M):
    n = len(M)
    aug = [list(M[i]) + [F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def cross(F, u, v):
    return (
        F.sub(F.mul(u[1], v[2]), F.mul(u[2], v[1])),
        F.sub(F.mul(u[2], v[0]), F.mul(u[0], v[2])),
        F.sub(F.mul(u[0], v[1]), F.mul(u[1], v[0])),
    )


def dot(F, u, v):
    acc = F.zero
    for a, b in zip(u, v):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


def complete_basis(F, P) -> list[list]:
    """3x3 matrix whose columns are (A, B, P) with det != 0, A and B standard
    basis vectors; sends (0:0:1) to P and (x:y:0) to points of lines through P."""
    e = [(F.one, F.zero, F.zero), (F.zero, F.one, F.zero), (F.zero, F.zero, F.one)]
    for i in range(3):
        for j in range(i + 1, 3):
            cols = [e[i], e[j], tuple(P)]
            M = [[cols[c][r] for c in range(3)] for r in range(3)]
            if det3(F, M):
                return M
    raise ValueError("zero vector")  # unreachable for a projective point
