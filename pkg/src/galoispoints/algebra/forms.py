"""Multivariate polynomials, ternary forms and binary forms over a field.

``MPoly`` is a sparse map from exponent tuples to nonzero coefficients over a
fixed tuple of variable names.  ``TernaryForm`` specializes it to homogeneous
polynomials in X, Y, Z.  ``BinaryForm`` is dense: a degree-d form
``sum c_i s^i t^(d-i)`` is the coefficient list ``[c_0, ..., c_d]``, which is
also the dehomogenization at ``t = 1``.
"""

from __future__ import annotations

from math import comb

from . import poly
from .fields import embedding


class MPoly:
    __slots__ = ("field", "vars", "terms")

    def __init__(self, field, variables, terms=None):
        self.field = field
        self.vars = tuple(variables)
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[tuple(e)] = c
        self.terms = clean

    # -- construction helpers -------------------------------------------------

    def _new(self, terms):
        return MPoly(self.field, self.vars, terms)

    @classmethod
    def constant(cls, field, variables, c):
        n = len(tuple(variables))
        return cls(field, variables, {(0,) * n: c} if c else {})

    @classmethod
    def variable(cls, field, variables, name):
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = 1
        return cls(field, variables, {tuple(e): field.one})

    # -- ring operations ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if self.vars != other.vars or self.field != other.field:
            raise ValueError("incompatible polynomial rings")

    def __add__(self, other):
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = F.add(out.get(e, F.zero), c)
        return self._new(out)

    def __neg__(self):
        F = self.field
        return self._new({e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._check(other)
        F = self.field
        fmul, fadd = F.mul, F.add
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = fadd(out.get(e, F.zero), fmul(c1, c2))
        return self._new(out)

    def scale(self, a):
        F = self.field
        if not a:
            return self._new({})
        return self._new({e: F.mul(c, a) for e, c in self.terms.items()})

    def __pow__(self, n: int):
        r = MPoly.constant(self.field, self.vars, self.field.one)
        b = self
        while n:
            if n & 1:
                r = r * b
            n >>= 1
            if n:
                b = b * b
        return r

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field.key, self.vars, frozenset(self.terms.items())))

    def leading(self):
        e = max(self.terms)
        return e, self.terms[e]

    def exquo(self, other):
        """Exact quotient (raises ArithmeticError if other does not divide)."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        le, lcoef = other.leading()
        inv = F.inv(lcoef)
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            e = max(rem)
            c = rem[e]
            d = tuple(a - b for a, b in zip(e, le))
            if min(d) < 0:
                raise ArithmeticError("inexact multivariate division")
            qc = F.mul(c, inv)
            quot[d] = qc
            for e2, c2 in other.terms.items():
                t = tuple(a + b for a, b in zip(d, e2))
                v = F.sub(rem.get(t, F.zero), F.mul(qc, c2))
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return self._new(quot)

    # -- structure ------------------------------------------------------------

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var: str) -> int:
        i = self.vars.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def coefficients_in(self, var: str) -> list["MPoly"]:
        """[c_0, c_1, ...] with self = sum c_j var^j; c_j over the other variables."""
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        out = [dict() for _ in range(self.degree_in(var) + 1)]
        for e, c in self.terms.items():
            out[e[i]][e[:i] + e[i + 1:]] = c
        return [MPoly(self.field, rest, t) for t in out]

    def evaluate(self, point):
        F = self.field
        acc = F.zero
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = F.mul(v, F.pow(x, k))
            acc = F.add(acc, v)
        return acc

    def derivative(self, var: str) -> "MPoly":
        F = self.field
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                v = F.mul(F.from_int(e[i]), c)
                if v:
                    ne = list(e)
                    ne[i] -= 1
                    out[tuple(ne)] = v
        return self._new(out)

    def lift(self, dst):
        if dst == self.field:
            return self
        table = embedding(self.field, dst)
        return MPoly(dst, self.vars, {e: table[c] for e, c in self.terms.items()})

    def format(self) -> str:
        F = self.field
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else "%s^%d" % (v, k) for v, k in zip(self.vars, e) if k
            )
            cs = F.format(c)
            if " " in cs:
                cs = "(%s)" % cs
            if not mono:
                parts.append(cs)
            elif c == F.one:
                parts.append(mono)
            else:
                parts.append("%s*%s" % (cs, mono))
        return " + ".join(parts)

    def __repr__(self):
        return "MPoly(%s over %r)" % (self.format(), self.field)


XYZ = ("X", "Y", "Z")


class TernaryForm(MPoly):
    """Homogeneous polynomial in X, Y, Z of a fixed degree."""

    __slots__ = ("degree",)

    def __init__(self, field, degree: int, terms=None):
        super().__init__(field, XYZ, terms)
        for e in self.terms:
            if sum(e) != degree:
                raise ValueError("term %r has degree %d, expected %d" % (e, sum(e), degree))
        self.degree = degree

    @classmethod
    def from_mpoly(cls, f: MPoly, degree: int | None = None) -> "TernaryForm":
        if f.vars != XYZ:
            raise ValueError("expected a polynomial in X, Y, Z")
        if degree is None:
            degree = f.total_degree()
            if degree < 0:
                raise ValueError("the zero polynomial has no degree")
        return cls(f.field, degree, f.terms)

    @classmethod
    def linear(cls, field, a, b, c) -> "TernaryForm":
        return cls(field, 1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    def _new(self, terms):
        return MPoly(self.field, self.vars, terms)

    def __add__(self, other):
        return TernaryForm.from_mpoly(MPoly.__add__(self, other), self.degree)

    def __neg__(self):
        return TernaryForm.from_mpoly(MPoly.__neg__(self), self.degree)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TernaryForm):
            return TernaryForm.from_mpoly(MPoly.__mul__(self, other), self.degree + other.degree)
        return TernaryForm.from_mpoly(MPoly.scale(self, other), self.degree)

    def scale(self, a):
        return TernaryForm.from_mpoly(MPoly.scale(self, a), self.degree)

    def lift(self, dst):
        return TernaryForm.from_mpoly(MPoly.lift(self, dst), self.degree)

    def __eq__(self, other):
        return MPoly.__eq__(self, other)

    __hash__ = MPoly.__hash__

    def __repr__(self):
        return "TernaryForm(%s over %r)" % (self.format(), self.field)

    # -- calculus -------------------------------------------------------------

    def partial(self, var: str) -> "TernaryForm":
        return TernaryForm.from_mpoly(self.derivative(var), self.degree - 1)

    def gradient(self) -> tuple["TernaryForm", "TernaryForm", "TernaryForm"]:
        return tuple(self.partial(v) for v in XYZ)

    def hasse(self, alpha) -> "TernaryForm":
        """Hasse derivative D^(alpha): X^b -> prod binom(b_i, a_i) X^(b - a)."""
        F = self.field
        out = {}
        for e, c in self.terms.items():
            if all(b >= a for b, a in zip(e, alpha)):
                m = comb(e[0], alpha[0]) * comb(e[1], alpha[1]) * comb(e[2], alpha[2])
                v = F.mul(F.from_int(m), c)
                if v:
                    out[tuple(b - a for b, a in zip(e, alpha))] = v
        return TernaryForm(F, self.degree - sum(alpha), out)

    def gradient_at(self, P) -> tuple:
        return tuple(self.partial(v).evaluate(P) for v in XYZ)

    # -- substitution ---------------------------------------------------------

    def compose_linear(self, M) -> "TernaryForm":
        """The form P -> F(M P) for a 3x3 matrix M (rows of field elements)."""
        F = self.field
        lin = [TernaryForm.linear(F, *M[i]) for i in range(3)]
        return TernaryForm.from_mpoly(
            _substitute(self, lin, MPoly.constant(F, XYZ, F.one)), self.degree
        ) if self.terms else TernaryForm(F, self.degree, {})

    def substitute_binary(self, comps) -> "BinaryForm":
        """F(f0, f1, f2) for binary forms of a common degree."""
        F = self.field
        n = comps[0].degree
        pw = [[[F.one]] for _ in range(3)]
        for i in range(3):
            base = comps[i].coeffs_trimmed()
            for _ in range(self.degree):
                pw[i].append(poly.mul(F, pw[i][-1], base))
        acc: list = []
        for (a, b, c), coef in self.terms.items():
            term = poly.mul(F, poly.mul(F, pw[0][a], pw[1][b]), pw[2][c])
            acc = poly.add(F, acc, poly.scale(F, term, coef))
        return BinaryForm(F, n * self.degree, acc)

    def restrict_to_line(self, A, B) -> "BinaryForm":
        """The binary form (s, t) -> F(s A + t B)."""
        F = self.field
        comps = [BinaryForm(F, 1, [B[i], A[i]]) for i in range(3)]
        return self.substitute_binary(comps)

    def along(self, P, V) -> list:
        """Univariate u -> F(P + u V), coefficients low to high."""
        F = self.field
        comps = [BinaryForm(F, 1, [P[i], V[i]]) for i in range(3)]
        # s = u, t = 1: P + u V
        return self.substitute_binary(comps).coeffs_trimmed()

    def z_polynomial(self, x, y) -> list:
        """Z -> F(x, y, Z)."""
        F = self.field
        out = [F.zero] * (self.degree + 1)
        for (a, b, c), coef in self.terms.items():
            v = F.mul(coef, F.mul(F.pow(x, a), F.pow(y, b)))
            out[c] = F.add(out[c], v)
        return poly.strip(out)

    def z_degree(self) -> int:
        return self.degree_in("Z")

    def z_coefficients_chart(self) -> list[list]:
        """Coefficient of Z^j as a polynomial in x = X/Y (chart Y = 1)."""
        F = self.field
        dz = self.z_degree()
        out = [[F.zero] * (self.degree + 1) for _ in range(dz + 1)]
        for (a, b, c), coef in self.terms.items():
            out[c][a] = F.add(out[c][a], coef)
        return [poly.strip(r) for r in out]

    def proportional_to(self, other: "TernaryForm"):
        """Scalar lam with self == lam * other, or None."""
        if self.degree != other.degree or set(self.terms) != set(other.terms):
            return None
        if not self.terms:
            return self.field.one
        F = self.field
        e0 = next(iter(other.terms))
        lam = F.div(self.terms[e0], other.terms[e0])
        for e, c in other.terms.items():
            if self.terms[e] != F.mul(lam, c):
                return None
        return lam

    def monic_normalized(self) -> "TernaryForm":
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.terms[max(self.terms)]))


def _substitute(f: MPoly, images, one):
    n = max((max(e) for e in f.terms), default=0)
    powers = []
    for im in images:
        row = [one]
        for _ in range(n):
            row.append(row[-1] * im)
        powers.append(row)
    acc = MPoly(one.field, one.vars, {})
    for e, c in f.terms.items():
        t = one.scale(c)
        for i, k in enumerate(e):
            if k:
                t = t * powers[i][k]
        acc = acc + t
    return acc


class BinaryForm:
    """Dense binary form sum c_i s^i t^(d-i) of a declared degree d."""

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field, degree: int, coeffs):
        cs = list(coeffs)
        if len(cs) > degree + 1 and any(cs[degree + 1:]):
            raise ValueError("coefficients exceed the declared degree %d" % degree)
        cs = cs[: degree + 1] + [field.zero] * (degree + 1 - len(cs))
        self.field = field
        self.degree = degree
        self.coeffs = tuple(cs)

    @classmethod
    def from_poly(cls, field, f: list, degree: int) -> "BinaryForm":
        return cls(field, degree, f)

    def coeffs_trimmed(self) -> list:
        return poly.strip(list(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, BinaryForm)
            and self.field == other.field
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.key, self.degree, self.coeffs))

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("adding forms of different degrees")
        F = self.field
        return BinaryForm(F, self.degree, [F.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinaryForm(self.field, self.degree, [self.field.neg(a) for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            F = self.field
            return BinaryForm(
                F, self.degree + other.degree,
                poly.mul(F, self.coeffs_trimmed(), other.coeffs_trimmed()),
            )
        return self.scale(other)

    def scale(self, a):
        F = self.field
        return BinaryForm(F, self.degree, [F.mul(c, a) for c in self.coeffs])

    def evaluate(self, s, t):
        F = self.field
        acc = F.zero
        d = self.degree
        for i, c in enumerate(self.coeffs):
            if c:
                acc = F.add(acc, F.mul(c, F.mul(F.pow(s, i), F.pow(t, d - i))))
        return acc

    def infinity_multiplicity(self) -> int:
        """Multiplicity of the root (1:0)."""
        return self.degree - (len(self.coeffs_trimmed()) - 1)

    def roots(self, j: int | None = None) -> list[tuple[tuple, int]]:
        """Projective roots ((s, t), multiplicity) in the subfield of degree j,
        normalized so the last nonzero coordinate is 1."""
        if self.is_zero():
            raise ValueError("the zero form has every point as a root")
        F = self.field
        f = self.coeffs_trimmed()
        out = [((x, F.one), m) for x, m in poly.roots_with_multiplicity(F, f, j)]
        mi = self.infinity_multiplicity()
        if mi:
            out.append(((F.one, F.zero), mi))
        return out

    def multiplicity_profile(self) -> list[int]:
        """Root multiplicities over the algebraic closure, descending."""
        if self.is_zero():
            raise ValueError("zero form")
        F = self.field
        prof = poly.root_multiplicity_profile(F, self.coeffs_trimmed())
        mi = self.infinity_multiplicity()
        if mi:
            prof.append(mi)
        return sorted(prof, reverse=True)

    def distinct_root_count(self) -> int:
        return len(self.multiplicity_profile())

    def multiplicity_at(self, pt) -> int:
        s, t = pt
        F = self.field
        if not t:
            return self.infinity_multiplicity()
        x = F.div(s, t)
        f = self.coeffs_trimmed()
        return poly.multiplicity(F, f, x)

    def gcd(self, other: "BinaryForm") -> "BinaryForm":
        F = self.field
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        g = poly.gcd(F, self.coeffs_trimmed(), other.coeffs_trimmed())
        mi = min(self.infinity_multiplicity(), other.infinity_multiplicity())
        return BinaryForm(F, len(g) - 1 + mi, g)

    def exquo(self, other: "BinaryForm") -> "BinaryForm":
        F = self.field
        q = poly.exquo(F, self.coeffs_trimmed(), other.coeffs_trimmed())
        return BinaryForm(F, self.degree - other.degree, q)

    def compose_linear(self, M) -> "BinaryForm":
        """(s, t) -> f(a s + b t, c s + d t) for M = ((a, b), (c, d))."""
        F = self.field
        (a, b), (c, d) = M
        S = [b, a]  # as a polynomial in u with t = 1 after substituting s = u
        T = [d, c]
        S = poly.strip(list(S))
        T = poly.strip(list(T))
        acc: list = []
        n = self.degree
        spow = [[F.one]]
        tpow = [[F.one]]
        for _ in range(n):
            spow.append(poly.mul(F, spow[-1], S))
            tpow.append(poly.mul(F, tpow[-1], T))
        for i, coef in enumerate(self.coeffs):
            if coef:
                acc = poly.add(F, acc, poly.scale(F, poly.mul(F, spow[i], tpow[n - i]), coef))
        return BinaryForm(F, n, acc)

    def derivative_s(self) -> "BinaryForm":
        F = self.field
        cs = [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:]
        return BinaryForm(F, max(self.degree - 1, 0), cs)

    def derivative_t(self) -> "BinaryForm":
        F = self.field
        d = self.degree
        cs = [F.mul(F.from_int(d - i), c) for i, c in enumerate(self.coeffs)][: d]
        return BinaryForm(F, max(d - 1, 0), cs)

    def lift(self, dst) -> "BinaryForm":
        if dst == self.field:
            return self
        table = embedding(self.field, dst)
        return BinaryForm(dst, self.degree, [table[c] for c in self.coeffs])

    def to_mpoly(self, names=("s", "t")) -> MPoly:
        d = self.degree
        return MPoly(self.field, names, {(i, d - i): c for i, c in enumerate(self.coeffs) if c})

    @classmethod
    def from_mpoly(cls, f: MPoly, degree: int | None = None) -> "BinaryForm":
        if len(f.vars) != 2:
            raise ValueError("expected a polynomial in two variables")
        if degree is None:
            degree = f.total_degree()
        cs = [f.field.zero] * (degree + 1)
        for (i, j), c in f.terms.items():
            if i + j != degree:
                raise ValueError("not homogeneous of degree %d" % degree)
            cs[i] = c
        return cls(f.field, degree, cs)

    def format(self, names=("s", "t")) -> str:
        return self.to_mpoly(names).format()

    def __repr__(self):
        return "BinaryForm(%s, deg %d over %r)" % (self.format(), self.degree, self.field)
