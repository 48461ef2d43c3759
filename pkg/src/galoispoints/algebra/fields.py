"""Finite fields GF(p^k) with integer-encoded elements, plus the rationals.

An element of GF(p^k) = GF(p)[t]/(m(t)) is stored as the integer
``c_0 + c_1 p + ... + c_{k-1} p^{k-1}`` where ``c_0 + c_1 t + ...`` is its
reduced representative.  Prime-field elements therefore keep the same integer
in every extension, which makes lifting curves with prime-field coefficients
free.

Multiplication goes through exp/log tables of a primitive element and
addition through a Zech-logarithm table (XOR in characteristic 2), so every
field operation is a couple of list lookups.  Tables are built once per field
and never mutated.
"""

from __future__ import annotations

import functools
import random
from fractions import Fraction


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


class Field:
    """The finite field GF(p^k).

    ``modulus`` is the monic defining polynomial over GF(p), coefficients low
    to high (length k+1); it is ``None`` for prime fields.
    """

    def __init__(self, p: int, k: int = 1, modulus: tuple[int, ...] | None = None):
        self.p = p
        self.k = k
        self.modulus = modulus
        self.q = p**k
        self.zero = 0
        self.one = 1
        self._build_tables()

    # -- construction ---------------------------------------------------------

    def _slow_mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return a * b % p
        ca, cb = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        m = self.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                for j in range(k + 1):
                    prod[i - k + j] = (prod[i - k + j] - c * m[j]) % p
        return self._undigits(prod[:k])

    def _digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.k):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def _undigits(self, cs) -> int:
        n = 0
        for c in reversed(list(cs)):
            n = n * self.p + c
        return n

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        order = q - 1
        if q == 2:
            g = 1
        else:
            factors = _prime_factors(order)
            for g in range(2, q):
                ok = True
                for r in factors:
                    if self._slow_pow(g, order // r) == 1:
                        ok = False
                        break
                if ok:
                    break
        exp = [0] * (2 * order)
        log = [-1] * q
        x = 1
        for i in range(order):
            exp[i] = x
            exp[i + order] = x
            log[x] = i
            x = self._slow_mul(x, g)
        self._exp = exp
        self._log = log
        self.primitive = g
        if p == 2:
            self._zech = None
        else:
            zech = [0] * order
            for n in range(order):
                x = exp[n]
                y = x - x % p + (x % p + 1) % p
                zech[n] = log[y]
            self._zech = zech
        self.minus_one = 1 if p == 2 else exp[order // 2] if order % 2 == 0 else p - 1

    def _slow_pow(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            n >>= 1
        return r

    # -- arithmetic -----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        log = self._log
        la = log[a]
        order = self.q - 1
        z = self._zech[(log[b] - la) % order]
        if z < 0:
            return 0
        return self._exp[la + z]

    def neg(self, a: int) -> int:
        if a == 0 or self.p == 2:
            return a
        return self._exp[self._log[a] + self._log[self.minus_one]]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in %s" % self)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def from_int(self, n: int) -> int:
        return n % self.p

    def log(self, a: int) -> int:
        return self._log[a]

    def exp(self, n: int) -> int:
        return self._exp[n % (self.q - 1)]

    def sqrt(self, a: int) -> int | None:
        """Some square root of ``a`` or None."""
        if a == 0:
            return 0
        la = self._log[a]
        if self.p == 2:
            return self._exp[(la * ((self.q) // 2)) % (self.q - 1)]
        if la % 2:
            return None
        return self._exp[la // 2]

    def pth_root(self, a: int) -> int:
        return self.pow(a, self.q // self.p)

    # -- element structure ----------------------------------------------------

    @property
    def gen(self) -> int:
        """The class of ``t`` (the root of the modulus); 'g' in the text grammar."""
        if self.k == 1:
            raise FieldError("a prime field has no extension generator")
        return self.p

    def coefficients(self, a: int) -> list[int]:
        return self._digits(a)

    def from_coefficients(self, cs) -> int:
        cs = [c % self.p for c in cs]
        if len(cs) > self.k:
            # reduce via multiplication by powers of t
            acc = 0
            tp = 1
            for c in cs:
                acc = self.add(acc, self.mul(c, tp))
                tp = self.mul(tp, self.gen if self.k > 1 else 1)
            return acc
        return self._undigits(cs + [0] * (self.k - len(cs)))

    def elements(self) -> range:
        return range(self.q)

    def subfield_elements(self, j: int) -> list[int]:
        """Elements of the unique subfield GF(p^j), j | k, in increasing order."""
        if self.k % j:
            raise FieldError("GF(%d^%d) has no subfield of degree %d" % (self.p, self.k, j))
        step = (self.q - 1) // (self.p**j - 1)
        return sorted([0] + [self._exp[i * step] for i in range(self.p**j - 1)])

    def degree_of(self, a: int) -> int:
        """Degree over GF(p) of the smallest subfield containing ``a``."""
        if a == 0:
            return 1
        la = self._log[a]
        for j in range(1, self.k + 1):
            if self.k % j == 0 and la % ((self.q - 1) // (self.p**j - 1)) == 0:
                return j
        return self.k

    def in_subfield(self, a: int, j: int) -> bool:
        if a == 0:
            return True
        return self._log[a] % ((self.q - 1) // (self.p**j - 1)) == 0

    def frobenius(self, a: int, power: int = 1) -> int:
        return self.pow(a, self.p**power)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> int:
        if nonzero:
            return rng.randrange(1, self.q)
        return rng.randrange(self.q)

    def element(self, value) -> "FieldElement":
        return FieldElement(self, value)

    def format(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        cs = self._digits(a)
        terms = []
        for i in range(self.k - 1, -1, -1):
            c = cs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("g" if i == 1 else "g^%d" % i)
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append("%d*%s" % (c, mono))
        return " + ".join(terms) if terms else "0"

    # -- identity -------------------------------------------------------------

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def key(self):
        return (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __reduce__(self):
        return (field_make, (self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return "GF(%d)" % self.p
        return "GF(%d^%d)" % (self.p, self.k)


class RationalField:
    """The rationals, for formula evaluation and small exact checks."""

    p = 0
    k = 1
    modulus = None
    q = None
    zero = Fraction(0)
    one = Fraction(1)
    minus_one = Fraction(-1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def pow(self, a, n):
        return Fraction(a) ** n

    def from_int(self, n):
        return Fraction(n)

    def element(self, value) -> "FieldElement":
        return FieldElement(self, value)

    def format(self, a) -> str:
        return str(a)

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def key(self):
        return (0, 1, None)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


@functools.lru_cache(maxsize=None)
def field_make(p: int, k: int = 1, modulus: tuple[int, ...] | None = None):
    """Build GF(p^k), or QQ when ``p == 0``.

    Without a modulus the lexicographically first monic irreducible of degree
    ``k`` is used, so the same call always yields the same field.
    """
    if p == 0:
        if k != 1:
            raise FieldError("extensions of QQ are not supported")
        return QQ
    if not is_prime(p):
        raise FieldError("characteristic %d is not prime" % p)
    if k < 1:
        raise FieldError("extension degree must be positive")
    if k == 1:
        if modulus is not None and len(modulus) != 2:
            raise FieldError("a modulus for k=1 must be linear")
        return Field(p, 1, None)
    from . import poly

    base = field_make(p, 1)
    if modulus is None:
        modulus = first_irreducible(p, k)
    else:
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree %d" % k)
        if not poly.is_irreducible(base, list(modulus)):
            raise FieldError("modulus %r is reducible over GF(%d)" % (modulus, p))
    return Field(p, k, tuple(modulus))


@functools.lru_cache(maxsize=None)
def first_irreducible(p: int, k: int) -> tuple[int, ...]:
    from . import poly

    base = field_make(p, 1)
    for n in range(p**k):
        cs = []
        m = n
        for _ in range(k):
            m, r = divmod(m, p)
            cs.append(r)
        f = cs + [1]
        if f[0] == 0:
            continue
        if poly.is_irreducible(base, f):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def extension(F: Field, m: int) -> Field:
    """GF(p^(k m)) with its default modulus."""
    return field_make(F.p, F.k * m)


@functools.lru_cache(maxsize=None)
def embedding(src: Field, dst: Field) -> tuple[int, ...]:
    """Table mapping every element of ``src`` to its image in ``dst``.

    The generator of ``src`` goes to the smallest root of its modulus in
    ``dst`` that keeps the embeddings of all intermediate default fields
    commuting, so lifting along any chain of fields gives the same result.
    """
    if src.p != dst.p or dst.k % src.k:
        raise FieldError("%r does not embed in %r" % (src, dst))
    if src.k == 1 or src == dst:
        return tuple(range(src.q))
    from . import poly

    subs = [field_make(src.p, c) for c in range(2, src.k) if src.k % c == 0]
    checks = []
    for C in subs:
        g = C.gen
        checks.append((embedding(C, src)[g], embedding(C, dst)[g]))
    for root in sorted(poly.roots_in(dst, list(src.modulus), dst.k)):
        table = _embedding_table(src, dst, root)
        if all(table[a] == b for a, b in checks):
            return table
    raise FieldError("no compatible embedding of %r in %r" % (src, dst))  # pragma: no cover


def _embedding_table(src: Field, dst: Field, root: int) -> tuple[int, ...]:
    powers = [1]
    for _ in range(src.k - 1):
        powers.append(dst.mul(powers[-1], root))
    table = []
    for a in range(src.q):
        acc = 0
        for c, pw in zip(src.coefficients(a), powers):
            if c:
                acc = dst.add(acc, dst.mul(c, pw))
        table.append(acc)
    return tuple(table)


class FieldElement:
    """Operator-friendly wrapper around a field element."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        if isinstance(value, FieldElement):
            value = value.value
        if isinstance(field, Field):
            if not (isinstance(value, int) and 0 <= value < field.q):
                raise FieldError("%r is not an element encoding of %r" % (value, field))
        else:
            value = Fraction(value)
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("mixed fields %r and %r" % (self.field, other.field))
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "%s(%s)" % (self.field, self.field.format(self.value))
