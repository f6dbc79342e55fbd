"""Interval-accelerated exact inertia for finite-label diagrams.

The characteristic polynomial coefficients are signed sums of principal
minors.  Those are evaluated in certified dyadic interval arithmetic first;
any coefficient whose interval straddles zero (in particular every exact
zero, e.g. on the parabolic boundary) is recomputed exactly in the algebraic
field.  Descartes' rule is exact for the real-rooted characteristic
polynomial, so the resulting signature is exact while the common case never
enters a large field.
"""

from __future__ import annotations

from itertools import combinations

from .diagram import BOLD, DOTTED_NUM, FINITE, CoxeterDiagram
from .rationals import QQ
from .scalars import Scalar, cos_pi_over, lcm_level, _level
from .spectra import Inertia


def _round_down(x, bits: int):
    scaled = x * (1 << bits)
    fl = scaled.numerator // scaled.denominator
    return QQ(fl, 1 << bits)


def _round_up(x, bits: int):
    scaled = x * (1 << bits)
    fl = -((-scaled.numerator) // scaled.denominator)
    return QQ(fl, 1 << bits)


class _Dyadic:
    """Outward-rounded interval arithmetic at a fixed precision."""

    def __init__(self, bits: int):
        self.bits = bits

    def exact(self, q) -> tuple:
        return (q, q)

    def add(self, a, b):
        return (
            _round_down(a[0] + b[0], self.bits),
            _round_up(a[1] + b[1], self.bits),
        )

    def neg(self, a):
        return (-a[1], -a[0])

    def mul(self, a, b):
        p = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
        return (_round_down(min(p), self.bits), _round_up(max(p), self.bits))

    def sign(self, a):
        if a[0] > 0:
            return 1
        if a[1] < 0:
            return -1
        return None


_cos_cache: dict[tuple[int, int], tuple] = {}


def _cos_interval(m: int, bits: int) -> tuple:
    key = (m, bits)
    got = _cos_cache.get(key)
    if got is None:
        lo, hi = _level(m).root_interval(bits)
        got = (lo / 2, hi / 2)
        _cos_cache[key] = got
    return got


def _interval_entries(D: CoxeterDiagram, bits: int):
    n = D.order
    iv = _Dyadic(bits)
    zero = iv.exact(QQ(0))
    one = iv.exact(QQ(1))
    rows = [[zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = one
    for (a, b), lab in D.edges.items():
        if lab.kind == FINITE:
            lo, hi = _cos_interval(lab.m, bits)
            entry = (-hi, -lo)
        elif lab.kind == BOLD:
            entry = iv.exact(QQ(-1))
        elif lab.kind == DOTTED_NUM:
            entry = iv.exact(-lab.value)
        else:
            raise ValueError("fast inertia needs numeric edge weights")
        i, j = D.index(a), D.index(b)
        rows[i][j] = rows[j][i] = entry
    return rows, iv


def _det_interval(rows, iv, verts: tuple):
    def rec(rs, cs):
        if not rs:
            return iv.exact(QQ(1))
        i = rs[0]
        total = iv.exact(QQ(0))
        for pos, j in enumerate(cs):
            e = rows[i][j]
            if e[0] == 0 and e[1] == 0:
                continue
            minor = rec(rs[1:], cs[:pos] + cs[pos + 1 :])
            term = iv.mul(e, minor)
            if pos % 2:
                term = iv.neg(term)
            total = iv.add(total, term)
        return total

    vl = list(verts)
    return rec(vl, vl)


def _exact_coefficient(D: CoxeterDiagram, k: int) -> Scalar:
    """Sum of the k x k principal minors, exactly."""
    from .spectra import det_elim, gram

    total = Scalar.zero()
    names = list(D.vertices)
    for subset in combinations(names, k):
        total = total + det_elim(gram(D.restrict(subset))).as_scalar()
    return total


def fast_inertia(D: CoxeterDiagram, bits: int = 96) -> Inertia:
    """Exact inertia of an all-finite-label diagram.

    char(t) = t^n - e1 t^(n-1) + e2 t^(n-2) - ... with e_k the sum of k x k
    principal minors; interval signs first, exact algebraic recomputation for
    any coefficient the interval cannot decide.  Descartes' rule then counts
    positive and negative eigenvalues with multiplicity.
    """
    n = D.order
    if n == 0:
        return Inertia(0, 0, 0)
    rows, iv = _interval_entries(D, bits)
    names = list(range(n))
    signs = [1]  # leading coefficient of t^n
    minor_sums = []
    for k in range(1, n + 1):
        total = iv.exact(QQ(0))
        for subset in combinations(names, k):
            total = iv.add(total, _det_interval(rows, iv, subset))
        minor_sums.append(total)
    coeff_signs = [1]
    for k, total in enumerate(minor_sums, start=1):
        s = iv.sign(total)
        if s is None:
            s = _exact_coefficient(D, k).sign()
        # contribution of e_k to char(t) carries the factor (-1)^k
        coeff_signs.append(s * (1 if k % 2 == 0 else -1))
    # coeff_signs[i] is the sign of the t^(n-i) coefficient
    zero = 0
    while zero < n and coeff_signs[n - zero] == 0:
        zero += 1
    kept = coeff_signs[: n - zero + 1]
    pos = _variations(kept)
    neg = _variations([s * (1 if (len(kept) - 1 - i) % 2 == 0 else -1) for i, s in enumerate(kept)])
    return Inertia(pos, neg, zero)


def _variations(signs) -> int:
    filtered = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(filtered, filtered[1:]) if a != b)
