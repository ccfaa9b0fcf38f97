"""Integer polynomial arithmetic and Sturm root counting.

Polynomials are lists of Python ints, lowest degree first, with no trailing
zeros (the zero polynomial is ``[]``). Everything stays in Z[x]: remainders
are pseudo-remainders reduced to primitive parts, which keeps coefficient
growth small without ever touching fractions.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd


def trim(p: list[int]) -> list[int]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: list[int]) -> int:
    return len(p) - 1


def derivative(p: list[int]) -> list[int]:
    return trim([i * c for i, c in enumerate(p)][1:])


def sub(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def content(p: list[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def primitive(p: list[int]) -> list[int]:
    """Primitive part with positive leading coefficient."""
    if not p:
        return []
    g = content(p)
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def prem(a: list[int], b: list[int]) -> list[int]:
    """lc(b)**(deg a - deg b + 1) * a  mod  b, computed in Z[x]."""
    r = list(a)
    db = degree(b)
    lc = b[-1]
    steps = degree(a) - db + 1
    while r and degree(r) >= db:
        shift = degree(r) - db
        top = r[-1]
        r = [c * lc for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= top * c
        r = trim(r)
        steps -= 1
    if steps > 0:
        r = [c * lc ** steps for c in r]
    return r


def exact_div(a: list[int], b: list[int]) -> list[int]:
    """Quotient a / b, which must be exact with integer coefficients."""
    r = list(a)
    db = degree(b)
    q = [0] * (degree(a) - db + 1)
    while r and degree(r) >= db:
        shift = degree(r) - db
        coef, rem = divmod(r[-1], b[-1])
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[shift] = coef
        for i, c in enumerate(b):
            r[i + shift] -= coef * c
        r = trim(r)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return trim(q)


def poly_gcd(a: list[int], b: list[int]) -> list[int]:
    a, b = primitive(a), primitive(b)
    if degree(a) < degree(b):
        a, b = b, a
    while b:
        a, b = b, primitive(prem(a, b))
    return a


def squarefree_factors(p: list[int]) -> list[tuple[list[int], int]]:
    """Yun's algorithm: p = const * prod f_i**i, returned as [(f_i, i), ...]."""
    out = []
    f = primitive(p)
    if degree(f) < 1:
        return out
    df = derivative(f)
    a = poly_gcd(f, df)
    b = exact_div(f, a)
    d = sub(exact_div(df, a), derivative(b))
    i = 1
    while degree(b) > 0:
        a = poly_gcd(b, d) if d else b
        b_next = exact_div(b, a)
        if degree(a) > 0:
            out.append((a, i))
        c = exact_div(d, a) if d else []
        d = sub(c, derivative(b_next))
        b = b_next
        i += 1
    return out


def sturm_sequence(p: list[int]) -> list[list[int]]:
    seq = [primitive(p), primitive(derivative(p))]
    while True:
        a, b = seq[-2], seq[-1]
        if degree(b) < 1:
            break
        r = prem(a, b)
        if not r:
            break
        # prem scales rem by lc(b)**k; undo a negative factor so -r keeps Sturm signs
        if b[-1] < 0 and (degree(a) - degree(b) + 1) % 2:
            r = [-c for c in r]
        g = content(r)
        seq.append([-c // g for c in r])
    return [s for s in seq if s]


def sign_at(p: list[int], x: Fraction) -> int:
    """Sign of p(x) for rational x, via the homogenised integer value."""
    num, den = x.numerator, x.denominator
    d = degree(p)
    val = 0
    for i, c in enumerate(p):
        val += c * num ** i * den ** (d - i)
    return (val > 0) - (val < 0)


def _variations(signs) -> int:
    signs = [s for s in signs if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def distinct_roots_above(p: list[int], a: Fraction) -> int:
    """Number of distinct real roots of squarefree p strictly greater than a."""
    seq = sturm_sequence(p)
    v_a = _variations(sign_at(s, a) for s in seq)
    v_inf = _variations((s[-1] > 0) - (s[-1] < 0) for s in seq)
    return v_a - v_inf


def roots_above(p: list[int], a) -> int:
    """Real roots strictly greater than ``a``, counted with multiplicity."""
    a = Fraction(a)
    return sum(mult * distinct_roots_above(f, a) for f, mult in squarefree_factors(p))


def reflect(p: list[int]) -> list[int]:
    """(-1)**deg p * p(-x): monic stays monic, roots are negated."""
    d = degree(p)
    return [c if (d - i) % 2 == 0 else -c for i, c in enumerate(p)]


def descartes_sign_changes(p: list[int]) -> int:
    return _variations((c > 0) - (c < 0) for c in p)
