"""Dense univariate polynomial helpers over an exact ordered field.

Polynomials are little-endian coefficient lists.  The coefficient field is
abstracted by a small ops object so the same Sturm/gcd code runs over plain
rationals (minimal polynomials) and over algebraic Scalars (determinant
polynomials, characteristic polynomials).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .rationals import QQ, as_rational, rat_sign


@dataclass(frozen=True)
class FieldOps:
    zero: object
    one: object
    is_zero: Callable[[object], bool]
    sign: Callable[[object], int]
    from_rational: Callable[[object], object]


QQ_FIELD = FieldOps(
    zero=QQ(0),
    one=QQ(1),
    is_zero=lambda q: q == 0,
    sign=rat_sign,
    from_rational=as_rational,
)


def trim(p: list, F: FieldOps) -> list:
    while p and F.is_zero(p[-1]):
        p.pop()
    return p


def degree(p: Sequence) -> int:
    return len(p) - 1


def add(p, q, F):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else F.zero
        b = q[i] if i < len(q) else F.zero
        out.append(a + b)
    return trim(out, F)


def neg(p):
    return [-c for c in p]


def sub(p, q, F):
    return add(p, neg(q), F)


def mul(p, q, F):
    if not p or not q:
        return []
    out = [F.zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if F.is_zero(a):
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return trim(out, F)


def scale(p, c, F):
    if F.is_zero(c):
        return []
    return trim([a * c for a in p], F)


def divmod_poly(a, b, F):
    """Field division: returns (q, r) with a = q*b + r, deg r < deg b."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [F.zero] * max(len(a) - len(b) + 1, 0)
    inv_lead = F.one / b[-1]
    while len(a) >= len(b) and a:
        coeff = a[-1] * inv_lead
        shift = len(a) - len(b)
        q[shift] = q[shift] + coeff
        for i, bc in enumerate(b):
            a[shift + i] = a[shift + i] - coeff * bc
        trim(a, F)
    return trim(q, F), a


def rem(a, b, F):
    return divmod_poly(a, b, F)[1]


def monic(p, F):
    if not p:
        return []
    inv = F.one / p[-1]
    return [c * inv for c in p]


def gcd(a, b, F):
    a, b = list(a), list(b)
    while b:
        a, b = b, rem(a, b, F)
    return monic(a, F)


def derivative(p, F):
    out = [p[i] * F.from_rational(QQ(i)) for i in range(1, len(p))]
    return trim(out, F)


def eval_at(p, x, F):
    acc = F.zero
    for c in reversed(p):
        acc = acc * x + c
    return acc


def squarefree_part(p, F):
    if degree(p) <= 0:
        return monic(p, F)
    g = gcd(p, derivative(p, F), F)
    if degree(g) == 0:
        return monic(p, F)
    q, r = divmod_poly(p, g, F)
    assert not r, "squarefree division must be exact"
    return monic(q, F)


def exact_div(a, b, F):
    q, r = divmod_poly(a, b, F)
    if r:
        raise ArithmeticError("division was not exact")
    return q


def yun_decomposition(p, F):
    """Squarefree decomposition: returns [(factor, multiplicity), ...]."""
    p = monic(p, F)
    if degree(p) < 1:
        return []
    dp = derivative(p, F)
    g = gcd(p, dp, F)
    if degree(g) == 0:
        return [(p, 1)]
    out = []
    c = exact_div(p, g, F)
    d = sub(exact_div(dp, g, F), derivative(c, F), F)
    i = 1
    while degree(c) > 0:
        a = gcd(c, d, F)
        if degree(a) > 0:
            out.append((a, i))
        c = exact_div(c, a, F)
        d = sub(exact_div(d, a, F), derivative(c, F), F)
        i += 1
    return out


def sturm_chain(p, F):
    chain = [list(p), derivative(p, F)]
    while chain[-1]:
        nxt = neg(rem(chain[-2], chain[-1], F))
        trim(nxt, F)
        if not nxt:
            break
        chain.append(nxt)
    return [c for c in chain if c]


def _sign_at(p, x, F):
    return F.sign(eval_at(p, x, F))


def _sign_at_inf(p, F, positive: bool):
    if not p:
        return 0
    s = F.sign(p[-1])
    if positive or degree(p) % 2 == 0:
        return s
    return -s


def sign_variations(signs) -> int:
    filtered = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(filtered, filtered[1:]) if a != b)


def sturm_count(p, F, a=None, b=None) -> int:
    """Distinct real roots of p in (a, b]; None endpoints mean -inf/+inf.

    Exact when a and b are not roots of p (infinite endpoints always fine).
    """
    chain = sturm_chain(p, F)
    if not chain or degree(chain[0]) < 1:
        return 0

    def variations(point, positive_inf):
        if point is None:
            return sign_variations([_sign_at_inf(q, F, positive_inf) for q in chain])
        x = F.from_rational(as_rational(point))
        return sign_variations([_sign_at(q, x, F) for q in chain])

    va = variations(a, False)
    vb = variations(b, True)
    return va - vb


def count_roots_open(p, F, a=None, b=None) -> int:
    """Distinct roots in the open interval (a, b), shifting off roots at a."""
    p = list(p)
    if a is not None:
        ar = as_rational(a)
        xa = F.from_rational(ar)
        # peel off roots exactly at a so the Sturm count is exact
        while p and degree(p) >= 1 and F.is_zero(eval_at(p, xa, F)):
            p = exact_div(p, [-xa, F.one], F)
    n = sturm_count(p, F, a, b)
    if b is not None:
        xb = F.from_rational(as_rational(b))
        if p and F.is_zero(eval_at(p, xb, F)):
            n -= 1
    return n
