"""Exact arithmetic in the real cyclotomic fields Q(2cos(pi/L)).

Every Gram-matrix weight cos(pi/m) lies in Q(c) for c = 2cos(pi/L) once m
divides L, through the Chebyshev-style identity V_k(2cos t) = 2cos(kt).
A Scalar is a coefficient vector over Q reduced modulo the minimal
polynomial of c, so equality and zero tests are exact.  Signs of nonzero
values are decided by refining a rational enclosure of c until the interval
evaluation excludes zero; the enclosure refinement is exact bisection
against the minimal polynomial, no floating point involved.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from math import gcd as _int_gcd

from . import config
from .rationals import QQ, as_rational, rat_sign, rat_str
from . import univar
from .univar import QQ_FIELD


def totient(n: int) -> int:
    result = n
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _chebyshev_like(k: int) -> list:
    """Integer polynomial V_k with V_k(2cos t) = 2cos(kt)."""
    v0, v1 = [QQ(2)], [QQ(0), QQ(1)]
    if k == 0:
        return v0
    prev, cur = v0, v1
    for _ in range(k - 1):
        nxt = univar.sub(univar.mul([QQ(0), QQ(1)], cur, QQ_FIELD), prev, QQ_FIELD)
        prev, cur = cur, nxt
    return cur


@dataclass(frozen=True)
class MinPoly:
    level: int
    coeffs: tuple  # monic, little-endian, rationals with denominator 1

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


_minpoly_cache: dict[int, MinPoly] = {}
_minpoly_lock = threading.Lock()


def min_poly(L: int) -> MinPoly:
    """Minimal polynomial of 2cos(pi/L) over Q, by the divisor sieve.

    Start from P_L = V_L + 2, whose roots are the 2cos(pi(2j+1)/L); divide
    out the minimal polynomials of 2cos(pi/d) for proper divisors d, and the
    squarefree part of what remains is the irreducible factor with root
    2cos(pi/L).
    """
    if L < 1:
        raise ValueError("level must be >= 1")
    with _minpoly_lock:
        cached = _minpoly_cache.get(L)
    if cached is not None:
        return cached
    p = univar.add(_chebyshev_like(L), [QQ(2)], QQ_FIELD)
    for d in range(1, L):
        if L % d != 0:
            continue
        md = list(min_poly(d).coeffs)
        while True:
            q, r = univar.divmod_poly(p, md, QQ_FIELD)
            if r or not q:
                break
            p = q
    p = univar.squarefree_part(p, QQ_FIELD)
    if L >= 2:
        expected = totient(2 * L) // 2
        if univar.degree(p) != expected:
            raise AssertionError(f"sieve degree {univar.degree(p)} != phi(2L)/2 = {expected} at L={L}")
    _confirm_largest_root(p, L)
    result = MinPoly(L, tuple(p))
    with _minpoly_lock:
        _minpoly_cache[L] = result
    return result


def _isolate_largest_root(p):
    """Isolating interval (lo, hi] for the largest real root of squarefree p.

    All minimal-polynomial roots lie in (-2, 2); the interval keeps the sign
    invariant p(lo) < 0 < p(hi), so later refinement is plain bisection.
    """
    if univar.degree(p) == 1:
        r = -p[0] / p[1]
        return r, r
    lo, hi = QQ(-2), QQ(2)
    count = lambda a, b: univar.sturm_count(p, QQ_FIELD, a, b)
    while count(lo, hi) > 1:
        mid = (lo + hi) / 2
        if count(mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _refine_root(p, lo, hi, target):
    """Shrink an isolating interval (sign-change bisection) to width <= target."""
    if lo == hi:
        return lo, hi
    while hi - lo > target:
        mid = (lo + hi) / 2
        if univar.eval_at(p, mid, QQ_FIELD) > 0:
            hi = mid
        else:
            lo = mid
    return lo, hi


def _confirm_largest_root(p, L: int) -> None:
    """Exact check that the sieve's factor has 2cos(pi/L) as a root.

    The largest root of P_L = V_L + 2 is 2cos(pi/L); every other root of P_L
    is a conjugate of some 2cos(pi/d), d a proper divisor.  So the selected
    factor is right iff its largest root beats the largest root of every
    proper divisor's minimal polynomial.
    """
    target = QQ(1, 2**24)
    lo, hi = _refine_root(p, *_isolate_largest_root(p), target=target)
    for d in range(1, L):
        if L % d != 0:
            continue
        pd = list(min_poly(d).coeffs)
        dlo, dhi = _refine_root(pd, *_isolate_largest_root(pd), target=target)
        if not lo > dhi:
            raise AssertionError(
                f"sieve at level {L} selected a factor whose largest root "
                f"does not dominate level {d}"
            )


class _Level:
    """Cached per-level data: reduction rows and the root enclosure."""

    def __init__(self, L: int):
        self.L = L
        mp = min_poly(L)
        self.minpoly = list(mp.coeffs)
        self.deg = mp.degree
        self._reduction_rows: list[tuple] = []
        self._build_reduction()
        self._lock = threading.Lock()
        self._root_lo = None
        self._root_hi = None
        self._embeddings: dict[int, tuple] = {}

    def _build_reduction(self):
        # c^d = -(a_0 + a_1 c + ... + a_{d-1} c^{d-1}) for monic minpoly
        base = [-c for c in self.minpoly[:-1]]
        self._reduction_rows = [tuple(base)]

    def _row(self, i: int) -> tuple:
        """Coefficient vector of c^(deg+i) reduced modulo the minpoly."""
        d = self.deg
        base = self._reduction_rows[0]
        while len(self._reduction_rows) <= i:
            prev = self._reduction_rows[-1]
            shifted = [QQ(0)] + list(prev[:-1])
            top = prev[-1]
            self._reduction_rows.append(
                tuple(shifted[j] + top * base[j] for j in range(d))
            )
        return self._reduction_rows[i]

    def reduce(self, coeffs: list) -> tuple:
        """Reduce a raw coefficient list modulo the minimal polynomial."""
        d = self.deg
        out = list(coeffs[:d]) + [QQ(0)] * max(0, d - len(coeffs))
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c == 0:
                continue
            row = self._row(k - d)
            for i in range(d):
                out[i] += c * row[i]
        return tuple(out)

    def root_interval(self, width_bits: int):
        """Rational enclosure of 2cos(pi/L) with width <= 2^-width_bits."""
        with self._lock:
            if self._root_lo is None:
                self._root_lo, self._root_hi = _isolate_largest_root(self.minpoly)
            target = QQ(1, 2**width_bits)
            self._root_lo, self._root_hi = _refine_root(
                self.minpoly, self._root_lo, self._root_hi, target
            )
            return self._root_lo, self._root_hi

    def embedding_of(self, sublevel: int) -> tuple:
        """Image of 2cos(pi/sublevel) in this level, as a coefficient vector."""
        with self._lock:
            img = self._embeddings.get(sublevel)
        if img is None:
            k = self.L // sublevel
            img = self.reduce(_chebyshev_like(k))
            with self._lock:
                self._embeddings[sublevel] = img
        return img


_level_cache: dict[int, _Level] = {}
_level_lock = threading.Lock()


def _level(L: int) -> _Level:
    with _level_lock:
        lvl = _level_cache.get(L)
    if lvl is not None:
        return lvl
    cap = config.level_cap()
    if L > cap:
        raise LevelCapExceeded(f"level {L} exceeds the configured cap {cap}")
    lvl = _Level(L)
    with _level_lock:
        _level_cache.setdefault(L, lvl)
    return lvl


class LevelCapExceeded(ValueError):
    pass


def _lcm(a: int, b: int) -> int:
    return a // _int_gcd(a, b) * b


def _ival_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _ival_mul(a, b):
    p = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(p), max(p))


class Scalar:
    """An element of Q(2cos(pi/L)), exactly represented."""

    __slots__ = ("level", "coeffs")
    __hash__ = None  # equality crosses levels; do not use as dict keys

    def __init__(self, level: int, coeffs):
        self.level = level
        self.coeffs = tuple(coeffs)

    # -- construction -------------------------------------------------

    @staticmethod
    def from_rational(q) -> "Scalar":
        return Scalar(1, (as_rational(q),))

    @staticmethod
    def primitive(L: int) -> "Scalar":
        """The generator 2cos(pi/L) at its own level."""
        lvl = _level(L)
        if lvl.deg == 1:
            return Scalar(L, (-lvl.minpoly[0],))
        coeffs = [QQ(0)] * lvl.deg
        coeffs[1] = QQ(1)
        return Scalar(L, tuple(coeffs))

    @staticmethod
    def zero() -> "Scalar":
        return Scalar.from_rational(0)

    @staticmethod
    def one() -> "Scalar":
        return Scalar.from_rational(1)

    # -- level handling ------------------------------------------------

    def lift(self, L: int) -> "Scalar":
        if L == self.level:
            return self
        if L % self.level != 0:
            raise ValueError(f"cannot lift level {self.level} into level {L}")
        lvl = _level(L)
        img = lvl.embedding_of(self.level)  # image of the sublevel generator
        acc = [QQ(0)] * lvl.deg
        # Horner in the image of the old generator
        for c in reversed(self.coeffs):
            acc = list(lvl.reduce(univar.mul(acc, list(img), QQ_FIELD) or [QQ(0)]))
            acc[0] += c
        return Scalar(L, lvl.reduce(acc))

    @staticmethod
    def _unify(a: "Scalar", b: "Scalar"):
        if a.level == b.level:
            return a, b
        L = _lcm(a.level, b.level)
        return a.lift(L), b.lift(L)

    @staticmethod
    def _coerce(x):
        if isinstance(x, Scalar):
            return x
        try:
            return Scalar.from_rational(x)
        except TypeError:
            return None

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("scalar is irrational")
        return self.coeffs[0]

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        a, b = Scalar._unify(self, other)
        return Scalar(a.level, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.level, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        a, b = Scalar._unify(self, other)
        lvl = _level(a.level)
        raw = univar.mul(list(a.coeffs), list(b.coeffs), QQ_FIELD)
        if not raw:
            return Scalar(a.level, (QQ(0),) * lvl.deg)
        return Scalar(a.level, lvl.reduce(raw))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("scalar inverse of zero")
        lvl = _level(self.level)
        # extended Euclid: s*self + t*minpoly = 1, with remainders kept monic
        # step by step so the rational coefficients stay small
        a = univar.trim(list(self.coeffs), QQ_FIELD)
        b = list(lvl.minpoly)
        r0, r1 = a, b
        s0, s1 = [QQ(1)], []
        while r1:
            q, r = univar.divmod_poly(r0, r1, QQ_FIELD)
            s = univar.sub(s0, univar.mul(q, s1, QQ_FIELD), QQ_FIELD)
            if r:
                lead = r[-1]
                r = univar.scale(r, QQ(1) / lead, QQ_FIELD)
                s = univar.scale(s, QQ(1) / lead, QQ_FIELD)
            r0, r1 = r1, r
            s0, s1 = s1, s
        # r0 is a nonzero constant gcd
        inv_const = QQ(1) / r0[0]
        inv = univar.scale(s0, inv_const, QQ_FIELD)
        return Scalar(self.level, lvl.reduce(inv or [QQ(0)]))

    def __truediv__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Scalar.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def sign(self) -> int:
        if self.is_zero():
            return 0
        if self.is_rational():
            return rat_sign(self.coeffs[0])
        lvl = _level(self.level)
        bits = 64
        while True:
            iv = lvl.root_interval(bits)
            acc = (self.coeffs[-1], self.coeffs[-1])
            for c in reversed(self.coeffs[:-1]):
                acc = _ival_mul(acc, iv)
                acc = (acc[0] + c, acc[1] + c)
            if acc[0] > 0:
                return 1
            if acc[1] < 0:
                return -1
            bits *= 2

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- output -----------------------------------------------------------

    def to_float(self) -> float:
        c = 2.0 * math.cos(math.pi / self.level)
        acc = 0.0
        for q in reversed(self.coeffs):
            acc = acc * c + float(q)
        return acc

    def __str__(self):
        if self.is_rational():
            return rat_str(self.coeffs[0])
        parts = []
        for i, q in enumerate(self.coeffs):
            if q == 0:
                continue
            if i == 0:
                parts.append(rat_str(q))
            elif i == 1:
                parts.append(f"{rat_str(q)}*c")
            else:
                parts.append(f"{rat_str(q)}*c^{i}")
        return "(" + " + ".join(parts) + f")@{self.level}"

    __repr__ = __str__


SCALAR_FIELD = univar.FieldOps(
    zero=Scalar.zero(),
    one=Scalar.one(),
    is_zero=lambda s: s.is_zero(),
    sign=lambda s: s.sign(),
    from_rational=lambda q: Scalar.from_rational(q),
)


def scalar_sign(x) -> int:
    s = Scalar._coerce(x)
    if s is None:
        raise TypeError(f"not a scalar: {x!r}")
    return s.sign()


BOLD = "bold"


def scalar_from_label(m, level: int) -> Scalar:
    """The Gram weight of an edge: cos(pi/m) for finite m, 1 for a bold edge."""
    if m == BOLD:
        return Scalar.one().lift(level)
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"edge label must be an integer >= 2 or BOLD, got {m!r}")
    if level % m != 0:
        raise ValueError(f"label {m} does not divide the ambient level {level}")
    return cos_pi_over(m, level)


def cos_pi_over(m: int, level: int) -> Scalar:
    """cos(pi/m) inside the level-`level` field (m must divide level)."""
    if level % m != 0:
        raise ValueError(f"{m} does not divide level {level}")
    lvl = _level(level)
    img = lvl.embedding_of(m)
    return Scalar(level, img) * QQ(1, 2)


def sqrt2() -> Scalar:
    return Scalar.primitive(4)


def sqrt5() -> Scalar:
    return Scalar.primitive(5) * 2 - 1


def sqrt10() -> Scalar:
    return sqrt2() * sqrt5()


def lcm_level(labels) -> int:
    """Field level for a collection of finite edge labels."""
    L = 1
    for m in labels:
        L = _lcm(L, m)
    cap = config.level_cap()
    if L > cap:
        raise LevelCapExceeded(f"required level {L} exceeds the configured cap {cap}")
    return L
