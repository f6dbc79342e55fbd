"""Gram matrices, exact determinants (two independent algorithms), local
determinants, and exact inertia.

The two determinant routes (fraction-free elimination vs the cycle-sum
formula) are kept permanently as mutual oracles: all sign decisions in the
classification rest on them.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import config
from .diagram import BOLD as BOLD_KIND
from .diagram import DOTTED_NUM, DOTTED_SYM, FINITE, CoxeterDiagram, Subdiagram
from .rationals import QQ, as_rational
from .rhopoly import RhoPoly
from .scalars import SCALAR_FIELD, Scalar, lcm_level, scalar_from_label
from . import univar


@dataclass(frozen=True)
class Inertia:
    pos: int
    neg: int
    zero: int

    @property
    def order(self) -> int:
        return self.pos + self.neg + self.zero

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.pos, self.neg, self.zero)

    def __add__(self, other: "Inertia") -> "Inertia":
        return Inertia(self.pos + other.pos, self.neg + other.neg, self.zero + other.zero)


@dataclass(frozen=True)
class GramMatrix:
    n: int
    level: int
    entries: tuple  # tuple of tuples of RhoPoly
    vertices: tuple

    def entry(self, i: int, j: int) -> RhoPoly:
        return self.entries[i][j]


def _edge_weight(label, level: int) -> RhoPoly:
    if label.kind == FINITE:
        return RhoPoly.from_scalar(scalar_from_label(label.m, level))
    if label.kind == BOLD_KIND:
        return RhoPoly.one()
    if label.kind == DOTTED_NUM:
        return RhoPoly.from_scalar(Scalar.from_rational(label.value))
    if label.kind == DOTTED_SYM:
        return RhoPoly.var(label.var)
    raise ValueError(f"unknown edge kind {label.kind!r}")


def gram(D: CoxeterDiagram) -> GramMatrix:
    """Gram matrix: unit diagonal, -weight off the diagonal, 0 for non-edges."""
    level = lcm_level(D.finite_labels())
    n = D.order
    rows = [[RhoPoly.zero() for _ in range(n)] for _ in range(n)]
    one = RhoPoly.one()
    for i in range(n):
        rows[i][i] = one
    for (a, b), label in D.edges.items():
        i, j = D.index(a), D.index(b)
        w = -_edge_weight(label, level)
        rows[i][j] = w
        rows[j][i] = w
    return GramMatrix(n, level, tuple(tuple(r) for r in rows), D.vertices)


# -- determinant by fraction-free elimination ---------------------------------


def det_elim(M: GramMatrix | CoxeterDiagram) -> RhoPoly:
    """Exact determinant via Bareiss fraction-free elimination.

    Intermediate divisions are exact in the polynomial ring, so no fractions
    ever appear; works uniformly for symbolic dotted entries.
    """
    if isinstance(M, CoxeterDiagram):
        M = gram(M)
    n = M.n
    if n == 0:
        return RhoPoly.one()
    a = [[M.entries[i][j] for j in range(n)] for i in range(n)]
    sign = 1
    prev = RhoPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return RhoPoly.zero()
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
            a[i][k] = RhoPoly.zero()
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


# -- determinant by the cycle-sum formula -------------------------------------


def _cycles(D: CoxeterDiagram, level: int):
    """All simple cycles as (vertex bitmask, weight term).

    A single edge is a 2-cycle with p = w^2; an undirected cycle of length
    >= 3 contributes twice (its two orientations), folded into the term.
    """
    n = D.order
    adj: list[list[tuple[int, RhoPoly]]] = [[] for _ in range(n)]
    for (a, b), label in D.edges.items():
        i, j = D.index(a), D.index(b)
        w = _edge_weight(label, level)
        adj[i].append((j, w))
        adj[j].append((i, w))
    out = []
    for i in range(n):
        for j, w in adj[i]:
            if j > i:
                out.append(((1 << i) | (1 << j), w * w))
    # DFS for cycles of length >= 3: smallest vertex first, second vertex
    # below third to pick one orientation, then doubled.
    def extend(start: int, current: int, mask: int, weight: RhoPoly, second: int):
        for nxt, w in adj[current]:
            if nxt == start and mask.bit_count() >= 3:
                if current > second:
                    out.append((mask, weight * w * 2))
                continue
            if nxt <= start or (mask >> nxt) & 1:
                continue
            extend(start, nxt, mask | (1 << nxt), weight * w, second)

    for s in range(n):
        for nxt, w in adj[s]:
            if nxt <= s:
                continue
            extend(s, nxt, (1 << s) | (1 << nxt), w, nxt)
    return out


def det_cycles(D: CoxeterDiagram) -> RhoPoly:
    """Determinant as the signed sum over sets of disjoint cycles."""
    cap = config.limits().cycle_det_max_order
    if D.order > cap:
        raise ValueError(f"cycle-sum determinant capped at order {cap}, got {D.order}")
    level = lcm_level(D.finite_labels())
    cycles = _cycles(D, level)
    total = RhoPoly.zero()

    def rec(idx: int, used: int, acc: RhoPoly):
        nonlocal total
        if idx == len(cycles):
            total = total + acc
            return
        rec(idx + 1, used, acc)
        mask, term = cycles[idx]
        if not mask & used:
            rec(idx + 1, used | mask, -(acc * term))

    rec(0, 0, RhoPoly.one())
    return total


def det_cofactor(M: GramMatrix | CoxeterDiagram) -> RhoPoly:
    """Brute-force cofactor expansion; third route used only as a test oracle."""
    if isinstance(M, CoxeterDiagram):
        M = gram(M)

    def rec(rows: list[int], cols: list[int]) -> RhoPoly:
        if not rows:
            return RhoPoly.one()
        i = rows[0]
        total = RhoPoly.zero()
        for pos, j in enumerate(cols):
            e = M.entries[i][j]
            if e.is_zero():
                continue
            minor = rec(rows[1:], cols[:pos] + cols[pos + 1 :])
            term = e * minor
            total = total + (term if pos % 2 == 0 else -term)
        return total

    idx = list(range(M.n))
    return rec(idx, idx)


# -- local determinants ---------------------------------------------------------


class PolyFraction:
    """Exact quotient of RhoPolys; normalizes to a polynomial when divisible."""

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num: RhoPoly, den: RhoPoly = None):
        if den is None:
            den = RhoPoly.one()
        if den.is_zero():
            raise ZeroDivisionError("local determinant with identically zero denominator")
        try:
            num = num.exact_div(den)
            den = RhoPoly.one()
        except ArithmeticError:
            pass
        self.num = num
        self.den = den

    @property
    def is_polynomial(self) -> bool:
        return self.den == RhoPoly.one()

    def as_poly(self) -> RhoPoly:
        if not self.is_polynomial:
            raise ValueError("quotient is not a polynomial")
        return self.num

    def __mul__(self, other):
        if not isinstance(other, PolyFraction):
            other = PolyFraction(RhoPoly._coerce(other))
        return PolyFraction(self.num * other.num, self.den * other.den)

    def __sub__(self, other):
        if not isinstance(other, PolyFraction):
            other = PolyFraction(RhoPoly._coerce(other))
        return PolyFraction(self.num * other.den - other.num * self.den, self.den * other.den)

    def __eq__(self, other):
        if not isinstance(other, PolyFraction):
            other = PolyFraction(RhoPoly._coerce(other))
        return self.num * other.den == other.num * self.den

    def __str__(self):
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


def local_det(D: CoxeterDiagram, T) -> PolyFraction:
    """det(S, T) = det(S) / det(S minus T)."""
    if isinstance(T, Subdiagram):
        T = T.selected
    T = set(T)
    rest = [v for v in D.vertices if v not in T]
    den = det_elim(D.restrict(rest))
    if den.is_zero():
        raise ZeroDivisionError("det of the complement is identically zero")
    return PolyFraction(det_elim(D), den)


def join_diagrams(
    S1: CoxeterDiagram, v1: str, S2: CoxeterDiagram, v2: str, label
) -> CoxeterDiagram:
    """Disjoint union of S1 and S2 plus the unique joining edge v1--v2."""
    overlap = set(S1.vertices) & set(S2.vertices)
    if overlap:
        raise ValueError(f"diagrams share vertices {sorted(overlap)}")
    verts = list(S1.vertices) + list(S2.vertices)
    edges = dict(S1.edges)
    edges.update(S2.edges)
    edges[(v1, v2)] = label
    return CoxeterDiagram(verts, edges)


def join_local_det(
    S1: CoxeterDiagram, v1: str, S2: CoxeterDiagram, v2: str, w
) -> PolyFraction:
    """Right-hand side of the join formula:
    det(S, <v1, v2>) = det(S1, v1) * det(S2, v2) - w^2."""
    w = RhoPoly._coerce(w)
    return local_det(S1, {v1}) * local_det(S2, {v2}) - PolyFraction(w * w)


# -- exact inertia ----------------------------------------------------------------


def _substituted_matrix(M: GramMatrix, assignment: dict) -> list[list[Scalar]]:
    fixed = {}
    for var, val in (assignment or {}).items():
        val = as_rational(val)
        if not val > 1:
            raise ValueError(f"dotted variable {var} must be assigned a rational > 1")
        fixed[var] = val
    rows = []
    for i in range(M.n):
        row = []
        for j in range(M.n):
            p = M.entries[i][j].substitute_all(fixed)
            if not p.is_scalar():
                raise ValueError(f"unassigned dotted variables {p.vars}")
            row.append(p.as_scalar())
        rows.append(row)
    return rows


def inertia(M: GramMatrix | CoxeterDiagram, assignment: dict | None = None) -> Inertia:
    """Exact (n+, n-, n0) by symmetric elimination with 1x1 and 2x2 pivots.

    The updates are fraction-free: the Schur complement is rescaled by the
    pivot (or its square for 2x2 blocks) instead of divided, and a running
    sign tracks whether the rescalings have mirrored the spectrum.
    """
    if isinstance(M, CoxeterDiagram):
        M = gram(M)
    a = _substituted_matrix(M, assignment or {})
    n = len(a)
    pos = neg = zero = 0
    live = list(range(n))
    flip = 1
    while live:
        pivot = None
        for i in live:
            if not a[i][i].is_zero():
                pivot = i
                break
        if pivot is not None:
            d = a[pivot][pivot]
            s = d.sign() * flip
            if s > 0:
                pos += 1
            else:
                neg += 1
            live.remove(pivot)
            col = {u: a[u][pivot] for u in live}
            for u in live:
                for v in live:
                    if u <= v:
                        val = d * a[u][v] - col[u] * col[v]
                        a[u][v] = a[v][u] = val
            if d.sign() < 0:
                flip = -flip
            continue
        # all live diagonal entries are zero
        off = None
        for ii, i in enumerate(live):
            for j in live[ii + 1 :]:
                if not a[i][j].is_zero():
                    off = (i, j)
                    break
            if off:
                break
        if off is None:
            zero += len(live)
            break
        i, j = off
        # 2x2 block [[0, b], [b, 0]] contributes one eigenvalue of each sign,
        # symmetric under mirroring; b^2-scaling never flips
        pos += 1
        neg += 1
        live.remove(i)
        live.remove(j)
        b = a[i][j]
        b2 = b * b
        ci = {u: a[u][i] for u in live}
        cj = {u: a[u][j] for u in live}
        for u in live:
            for v in live:
                if u <= v:
                    val = b2 * a[u][v] - b * (ci[u] * cj[v] + cj[u] * ci[v])
                    a[u][v] = a[v][u] = val
    return Inertia(pos, neg, zero)


def charpoly(M: GramMatrix | CoxeterDiagram, assignment: dict | None = None) -> list[Scalar]:
    """Characteristic polynomial det(tI - M) as Scalar coefficients."""
    if isinstance(M, CoxeterDiagram):
        M = gram(M)
    a = _substituted_matrix(M, assignment or {})
    n = len(a)
    tvar = "__t__"
    t = RhoPoly.var(tvar)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = RhoPoly.from_scalar(-a[i][j])
            if i == j:
                entry = entry + t
            row.append(entry)
        rows.append(row)
    shim = GramMatrix(n, M.level, tuple(tuple(r) for r in rows), M.vertices)
    p = det_elim(shim)
    coeffs = p.univariate_coeffs(tvar)
    return coeffs


def inertia_via_charpoly(M: GramMatrix | CoxeterDiagram, assignment: dict | None = None) -> Inertia:
    """Independent inertia oracle: Sturm root counting on the characteristic
    polynomial, with multiplicities recovered from the squarefree decomposition."""
    coeffs = charpoly(M, assignment)
    zero = 0
    while coeffs and coeffs[0].is_zero():
        coeffs.pop(0)
        zero += 1
    if not coeffs or len(coeffs) == 1:
        return Inertia(0, 0, zero + (0 if coeffs else 0))
    pos = neg = 0
    for factor, mult in univar.yun_decomposition(coeffs, SCALAR_FIELD):
        pos += mult * univar.count_roots_open(factor, SCALAR_FIELD, a=0, b=None)
        neg += mult * univar.count_roots_open(factor, SCALAR_FIELD, a=None, b=0)
    return Inertia(pos, neg, zero)
