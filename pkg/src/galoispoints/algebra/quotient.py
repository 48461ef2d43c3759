"""Residue field K[x]/(h) for an irreducible h, without lookup tables.

Used to decide whether a system has solutions over a root of ``h`` when that
root lies outside every table-backed field we are willing to build.  Elements
are tuples of base-field elements (low to high, no trailing zeros), so the
zero element is the falsy empty tuple, as the polynomial routines expect.
"""

from __future__ import annotations

from . import poly


class QuotientField:
    def __init__(self, base, modulus: list):
        m = poly.monic(base, poly.strip(list(modulus)))
        if len(m) < 2:
            raise ValueError("modulus must have positive degree")
        self.base = base
        self.modulus = m
        self.p = base.p
        self.zero = ()
        self.one = (base.one,)
        self.degree = len(m) - 1
        self.q = base.q ** self.degree

    def _wrap(self, f: list) -> tuple:
        return tuple(poly.rem(self.base, f, self.modulus))

    def embed(self, a) -> tuple:
        return (a,) if a else ()

    def root(self) -> tuple:
        """The class of x, a root of the modulus."""
        return self._wrap([self.base.zero, self.base.one])

    def add(self, a, b):
        return tuple(poly.add(self.base, list(a), list(b)))

    def sub(self, a, b):
        return tuple(poly.sub(self.base, list(a), list(b)))

    def neg(self, a):
        return tuple(poly.neg(self.base, list(a)))

    def mul(self, a, b):
        if not a or not b:
            return ()
        return self._wrap(poly.mul(self.base, list(a), list(b)))

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        K = self.base
        # extended Euclid: s*a + t*m = 1
        r0, r1 = list(self.modulus), list(a)
        s0, s1 = [], [K.one]
        while r1:
            q, r = poly.divmod_(K, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly.sub(K, s0, poly.mul(K, q, s1))
        c = K.inv(r0[0])
        return self._wrap(poly.scale(K, s0, c))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        r = self.one
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def pth_root(self, a):
        # Frobenius is a bijection of the finite field; its inverse is x -> x^(q/p)
        return self.pow(a, self.q // self.p)

    def from_int(self, n: int):
        return self.embed(self.base.from_int(n))

    def __repr__(self):
        return "QuotientField(%r, degree %d)" % (self.base, self.degree)
