"""Brute-force oracles, written without the projection or galois modules.

They enumerate every candidate automorphism and are only fit for tiny fields.
"""

from itertools import product

from galoispoints.algebra.forms import BinaryForm
from galoispoints.algebra.linalg import complete_basis, cross


def implicit_deck_order(C, Q, W):
    """Count (b, c, e) with (x:y:z) -> (x:y:bx+cy+ez) preserving the curve,
    in coordinates where the center is (0:0:1)."""
    G = C.form.lift(W).compose_linear(complete_basis(W, Q.lift(W).coords))
    n = 0
    for b, c, e in product(range(W.q), range(W.q), range(1, W.q)):
        S = [[W.one, W.zero, W.zero], [W.zero, W.one, W.zero], [b, c, e]]
        if G.compose_linear(S).proportional_to(G) is not None:
            n += 1
    return n


def _pencil(C, Q, W):
    P = Q.lift(W).coords
    lines = []
    for v in product(range(W.q), repeat=3):
        h = cross(W, P, v)
        if any(h) and (not lines or any(cross(W, lines[0], h))):
            lines.append(h)
        if len(lines) == 2:
            break
    comps = [f.lift(W) for f in C.param]
    forms = []
    for h in lines:
        acc = BinaryForm(W, comps[0].degree, [])
        for coef, f in zip(h, comps):
            acc = acc + f.scale(coef)
        forms.append(acc)
    g = forms[0].gcd(forms[1])
    return forms[0].exquo(g), forms[1].exquo(g)


def pgl2(W):
    for a, b, c, d in product(range(W.q), repeat=4):
        if not W.sub(W.mul(a, d), W.mul(b, c)):
            continue
        first = next(x for x in (a, b, c, d) if x)
        if first == W.one:
            yield ((a, b), (c, d))


def param_deck_order(C, Q, W):
    """Count Moebius maps of the parameter line commuting with projection
    from Q, by scanning all of PGL(2, W)."""
    a, b = _pencil(C, Q, W)
    n = 0
    for m in pgl2(W):
        if (a.compose_linear(m) * b - b.compose_linear(m) * a).is_zero():
            n += 1
    return n

