"""Dense univariate polynomials over a field.

A polynomial is a list of field elements, lowest degree first, with no
trailing zeros; ``[]`` is the zero polynomial.  Every routine takes the field
as its first argument, in the style of a classic Galois-field toolkit.
"""

from __future__ import annotations

import random

from .fields import Field, FieldError


def strip(f: list) -> list:
    while f and not f[-1]:
        f.pop()
    return f


def degree(f: list) -> int:
    return len(f) - 1


def lc(f: list):
    return f[-1] if f else 0


def from_ints(F, cs) -> list:
    return strip([F.from_int(c) for c in cs])


def add(F, f: list, g: list) -> list:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    fadd = F.add
    for i, c in enumerate(g):
        out[i] = fadd(out[i], c)
    return strip(out)


def neg(F, f: list) -> list:
    return [F.neg(c) for c in f]


def sub(F, f: list, g: list) -> list:
    return add(F, f, neg(F, g))


def scale(F, f: list, a) -> list:
    if not a:
        return []
    mul = F.mul
    return strip([mul(c, a) for c in f])


def mul(F, f: list, g: list) -> list:
    if not f or not g:
        return []
    fmul, fadd = F.mul, F.add
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = fadd(out[i + j], fmul(a, b))
    return strip(out)


def power(F, f: list, n: int) -> list:
    r = [F.one]
    while n:
        if n & 1:
            r = mul(F, r, f)
        n >>= 1
        if n:
            f = mul(F, f, f)
    return r


def divmod_(F, f: list, g: list) -> tuple[list, list]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], r
    inv = F.inv(g[-1])
    fmul, fsub = F.mul, F.sub
    qt = [F.zero] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if not c:
            continue
        c = fmul(c, inv)
        qt[i - dg] = c
        for j in range(dg + 1):
            if g[j]:
                r[i - dg + j] = fsub(r[i - dg + j], fmul(c, g[j]))
    return strip(qt), strip(r[:dg])


def rem(F, f: list, g: list) -> list:
    return divmod_(F, f, g)[1]


def quo(F, f: list, g: list) -> list:
    return divmod_(F, f, g)[0]


def exquo(F, f: list, g: list) -> list:
    qt, r = divmod_(F, f, g)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return qt


def monic(F, f: list) -> list:
    if not f:
        return []
    return scale(F, f, F.inv(f[-1]))


def gcd(F, f: list, g: list) -> list:
    while g:
        f, g = g, rem(F, f, g)
    return monic(F, f)


def deriv(F, f: list) -> list:
    return strip([F.mul(F.from_int(i), c) for i, c in enumerate(f)][1:])


def hasse(F, f: list, j: int) -> list:
    """j-th Hasse derivative: sum of binom(i, j) c_i x^(i-j)."""
    from math import comb

    return strip([F.mul(F.from_int(comb(i, j)), f[i]) for i in range(j, len(f))])


def evaluate(F, f: list, x):
    acc = F.zero
    fmul, fadd = F.mul, F.add
    for c in reversed(f):
        acc = fadd(fmul(acc, x), c)
    return acc


def compose(F, f: list, g: list) -> list:
    out: list = []
    for c in reversed(f):
        out = add(F, mul(F, out, g), [c] if c else [])
    return out


def shift(F, f: list, a) -> list:
    """f(x + a)."""
    return compose(F, f, strip([a, F.one]))


def powmod(F, f: list, n: int, g: list) -> list:
    r = [F.one]
    f = rem(F, f, g)
    while n:
        if n & 1:
            r = rem(F, mul(F, r, f), g)
        n >>= 1
        if n:
            f = rem(F, mul(F, f, f), g)
    return r


def multiplicity(F, f: list, x) -> int:
    """Order of vanishing of f at x (f nonzero)."""
    if not f:
        raise ValueError("zero polynomial has infinite multiplicity")
    m = 0
    lin = strip([F.neg(x), F.one])
    while True:
        qt, r = divmod_(F, f, lin)
        if r:
            return m
        m += 1
        f = qt


def pth_root(F, f: list) -> list:
    """g with g^p = f, for f a polynomial in x^p."""
    p = F.p
    return strip([F.pth_root(f[i]) for i in range(0, len(f), p)])


def sqf_list(F, f: list) -> list[tuple[list, int]]:
    """Square-free decomposition of a nonzero polynomial: [(g_i, i)] with
    f = lc * prod g_i^i, each g_i monic square-free and pairwise coprime."""
    if not f:
        raise ValueError("zero polynomial")
    f = monic(F, f)
    if len(f) == 1:
        return []
    if F.p == 0:
        return _sqf_char0(F, f)
    out: dict[int, list] = {}
    _sqf_rec(F, f, 1, out)
    return sorted(((g, i) for i, g in out.items() if len(g) > 1), key=lambda t: t[1])


def _sqf_char0(F, f):
    out = []
    i = 1
    g = gcd(F, f, deriv(F, f))
    w = quo(F, f, g)
    while len(w) > 1:
        y = gcd(F, w, g)
        z = quo(F, w, y)
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w, g = y, quo(F, g, y)
    return out


def _merge(F, out, g, i):
    if len(g) <= 1:
        return
    if i in out:
        out[i] = mul(F, out[i], g)
    else:
        out[i] = g


def _sqf_rec(F, f, mult, out):
    # Yun's algorithm with the p-th power step for positive characteristic.
    p = F.p
    df = deriv(F, f)
    if not df:
        _sqf_rec(F, pth_root(F, f), mult * p, out)
        return
    c = gcd(F, f, df)
    w = quo(F, f, c)
    i = 1
    while len(w) > 1:
        y = gcd(F, w, c)
        z = quo(F, w, y)
        _merge(F, out, monic(F, z), i * mult)
        i += 1
        w = y
        c = quo(F, c, y)
    if len(c) > 1:
        _sqf_rec(F, pth_root(F, monic(F, c)), mult * p, out)


def sqf_part(F, f: list) -> list:
    r = [F.one]
    for g, _ in sqf_list(F, f):
        r = mul(F, r, g)
    return r


def distinct_root_count(F, f: list) -> int:
    """Number of distinct roots of f over the algebraic closure."""
    return sum(len(g) - 1 for g, _ in sqf_list(F, f))


def root_multiplicity_profile(F, f: list) -> list[int]:
    """Multiset of root multiplicities of f over the algebraic closure, sorted
    descending (computed without splitting f)."""
    out = []
    for g, i in sqf_list(F, f):
        out.extend([i] * (len(g) - 1))
    return sorted(out, reverse=True)


def _seed_of(f) -> int:
    return hash(tuple(f)) & 0xFFFFFFFF


def ddf(F, f: list) -> list[tuple[list, int]]:
    """Distinct-degree factorization of a monic square-free polynomial."""
    out = []
    h = [F.zero, F.one]
    x = [F.zero, F.one]
    i = 1
    q = F.q
    while 2 * i <= len(f) - 1:
        h = powmod(F, h, q, f)
        g = gcd(F, f, sub(F, h, x))
        if len(g) > 1:
            out.append((g, i))
            f = quo(F, f, g)
            h = rem(F, h, f)
        i += 1
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def edf(F, f: list, n: int, rng: random.Random | None = None) -> list[list]:
    """Split a monic square-free f whose irreducible factors all have degree n."""
    if len(f) - 1 == n:
        return [f]
    if rng is None:
        rng = random.Random(_seed_of(f))
    q = F.q
    N = len(f) - 1
    while True:
        a = strip([F.random_element(rng) for _ in range(N)])
        if len(a) <= 1:
            continue
        if F.p == 2:
            # trace map a + a^2 + ... + a^(2^(k n - 1))
            t = a
            s = a
            for _ in range(F.k * n - 1):
                t = rem(F, mul(F, t, t), f)
                s = add(F, s, t)
            g = gcd(F, f, s)
        else:
            e = (q**n - 1) // 2
            b = powmod(F, a, e, f)
            g = gcd(F, f, sub(F, b, [F.one]))
        if 1 < len(g) < len(f):
            return edf(F, g, n, rng) + edf(F, quo(F, f, g), n, rng)


def factor(F, f: list) -> list[tuple[list, int]]:
    """Monic irreducible factors with multiplicities, sorted by degree then
    coefficients."""
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if not isinstance(F, Field):
        raise FieldError("factorization is implemented over finite fields only")
    out = []
    for g, i in sqf_list(F, f):
        for h, n in ddf(F, g):
            for u in edf(F, h, n):
                out.append((u, i))
    out.sort(key=lambda t: (len(t[0]), list(reversed(t[0])), t[1]))
    return out


def is_irreducible(F, f: list) -> bool:
    """Rabin's test over a finite field."""
    f = monic(F, strip(list(f)))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [F.zero, F.one]
    q = F.q

    def frob_pow(m):
        return powmod(F, x, q**m, f)

    if sub(F, frob_pow(n), x):
        return False
    m = n
    primes = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            primes.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.append(m)
    for r in primes:
        g = gcd(F, f, sub(F, frob_pow(n // r), x))
        if len(g) > 1:
            return False
    return True


def split_linear(F, f: list) -> list:
    """Roots of a monic square-free f that splits into distinct linear factors."""
    n = len(f) - 1
    if n <= 0:
        return []
    if n == 1:
        return [F.neg(f[0])]
    if n == 2 and F.p != 2:
        # x^2 + b x + c
        b, c = f[1], f[0]
        two = F.from_int(2)
        disc = F.sub(F.mul(b, b), F.mul(F.from_int(4), c))
        s = F.sqrt(disc)
        if s is not None:
            inv2 = F.inv(two)
            return [F.mul(F.sub(s, b), inv2), F.mul(F.sub(F.neg(s), b), inv2)]
    return [F.neg(g[0]) for g in edf(F, f, 1)]


def rational_part(F, f: list, j: int | None = None) -> list:
    """gcd(f, x^Q - x) where Q is the size of the subfield of degree j."""
    if j is None:
        j = F.k
    Q = F.p**j
    x = [F.zero, F.one]
    h = powmod(F, x, Q, monic(F, f))
    return gcd(F, f, sub(F, h, x))


def roots_in(F, f: list, j: int | None = None) -> list:
    """Distinct roots of f lying in the subfield of degree j (default F)."""
    f = strip(list(f))
    if not f:
        raise ValueError("zero polynomial")
    if len(f) == 1:
        return []
    g = rational_part(F, f, j)
    return sorted(split_linear(F, g))


def roots_with_multiplicity(F, f: list, j: int | None = None) -> list[tuple[object, int]]:
    return [(x, multiplicity(F, f, x)) for x in roots_in(F, f, j)]


def lagrange_interpolate(F, xs: list, ys: list) -> list:
    """Newton interpolation through the points (xs[i], ys[i])."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = F.sub(coef[i], coef[i - 1])
            den = F.sub(xs[i], xs[i - j])
            coef[i] = F.div(num, den)
    out: list = []
    for i in range(n - 1, -1, -1):
        out = mul(F, out, strip([F.neg(xs[i]), F.one])) if out else []
        out = add(F, out, [coef[i]] if coef[i] else [])
    return out
