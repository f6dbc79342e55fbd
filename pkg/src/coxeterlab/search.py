"""Bounded exhaustive searches: expansion emptiness, x0-products of Lanner
diagrams, and the two-triangle neighbor table.

All inner loops run on integer label matrices with memoized catalog
recognition (smallcat); algebraic arithmetic only touches the survivors.
Edges added by the searches are absent or finite with label <= cap: a bold
edge immediately creates the affine pair witness and a dotted edge creates a
new order-2 Lanner diagram, so both are pruned a priori (the pruning is
property-tested by force-including them).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from . import config, smallcat
from .certify import SuperhyperbolicVerdict, certify_superhyperbolic_any, d_func
from .diagram import CoxeterDiagram, EdgeLabel, build
from .rationals import QQ
from .scalars import Scalar, cos_pi_over, lcm_level, sqrt2
from .taxonomy import (
    lanner_triangles,
    scan_subdiagrams,
    table3_entries,
    triangle_diagram,
)

LANNER = smallcat.LANNER
PARABOLIC = smallcat.PARABOLIC


def _label_options(cap: int) -> tuple:
    return (0,) + tuple(range(3, cap + 1))


class _Builder:
    """Incrementally grown label matrix with witness pruning.

    Subsets of size <= 5 through each freshly decided pair are checked the
    moment the pair is decided; connected parabolic candidates of size 6..9
    are checked when a vertex row completes (their labels are all in
    {3, 4, 6}, so the enumeration runs on the 'clean' adjacency).
    """

    def __init__(self, N: int, allowed_masks):
        self.N = N
        self.mat = [[0] * N for _ in range(N)]
        self.adj = [0] * N
        self.clean = [0] * N
        self.allowed = frozenset(allowed_masks)
        self._combos: dict[tuple[int, int], list] = {}

    def set_edge(self, a: int, b: int, v: int):
        self.mat[a][b] = self.mat[b][a] = v
        if v:
            self.adj[a] |= 1 << b
            self.adj[b] |= 1 << a
            if v in (3, 4, 6):
                self.clean[a] |= 1 << b
                self.clean[b] |= 1 << a
        else:
            self.adj[a] &= ~(1 << b)
            self.adj[b] &= ~(1 << a)
            self.clean[a] &= ~(1 << b)
            self.clean[b] &= ~(1 << a)

    def _connected(self, verts: tuple) -> bool:
        mask = 0
        for v in verts:
            mask |= 1 << v
        seen = 1 << verts[0]
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= self.adj[v] & mask
            frontier = nxt & ~seen
            seen |= frontier
        return seen == mask

    def _combinations(self, j: int, k: int) -> list:
        key = (j, k)
        got = self._combos.get(key)
        if got is None:
            got = list(combinations(range(j), k))
            self._combos[key] = got
        return got

    def check_pair(self, t: int, j: int) -> bool:
        """No forbidden witness among subsets <= 5 through the pair (t, j)."""
        mat = self.mat
        allowed = self.allowed
        for extra in range(0, 4):
            for others in self._combinations(j, extra):
                verts = others + (j, t)
                if not self._connected(verts):
                    continue
                key = tuple(
                    mat[verts[a]][verts[b]]
                    for a in range(len(verts))
                    for b in range(a + 1, len(verts))
                )
                kind = smallcat.witness_kind(key)
                if kind == PARABOLIC:
                    return False
                if kind == LANNER:
                    mask = 0
                    for v in verts:
                        mask |= 1 << v
                    if mask not in allowed:
                        return False
        return True

    def check_deep_parabolic(self, t: int) -> bool:
        """No connected parabolic witness of size 6..9 through vertex t."""
        mat = self.mat
        upto = (1 << (t + 1)) - 1

        def rec(S: int, X: int) -> bool:
            size = S.bit_count()
            if size >= 6:
                verts = tuple(i for i in range(t + 1) if (S >> i) & 1)
                key = tuple(
                    mat[verts[a]][verts[b]]
                    for a in range(len(verts))
                    for b in range(a + 1, len(verts))
                )
                if smallcat.witness_kind(key) == PARABOLIC:
                    return False
            if size >= 9:
                return True
            nb = 0
            s = S
            while s:
                v = (s & -s).bit_length() - 1
                s &= s - 1
                nb |= self.clean[v]
            cand = nb & upto & ~S & ~X
            while cand:
                bit = cand & -cand
                cand ^= bit
                if not rec(S | bit, X):
                    return False
                X |= bit
            return True

        return rec(1 << t, 0)

    def whole_connected(self) -> bool:
        return self._connected(tuple(range(self.N)))


# -- expansion search -----------------------------------------------------------


def _base_allowed_masks(base: CoxeterDiagram) -> list[int]:
    masks = []
    for witness in scan_subdiagrams(base, "lanner"):
        mask = 0
        for name in witness:
            mask |= 1 << base.index(name)
        masks.append(mask)
    return masks


def expansion_extensions_mat(
    base_mat: list[list[int]],
    allowed_masks,
    extra: int,
    cap: int,
    attach_indices: Optional[tuple] = None,
    limit: Optional[int] = None,
):
    """All ways to add `extra` vertices and absent/finite edges without a new
    Lanner or parabolic witness; returns full label matrices.

    Every added vertex must touch `attach_indices` (default: all base
    vertices).  This is the structural half of the expansion notion: an
    added vertex represents an order-2 Lanner component of a product, and a
    component with no edge toward the base would already force a
    superhyperbolic disjoint union.
    """
    n0 = len(base_mat)
    N = n0 + extra
    if attach_indices is None:
        attach_indices = tuple(range(n0))
    attach_set = frozenset(attach_indices)
    bld = _Builder(N, allowed_masks)
    for i in range(n0):
        for j in range(i + 1, n0):
            if base_mat[i][j]:
                bld.set_edge(i, j, base_mat[i][j])
    # base subsets are assumed valid (the base is a catalog diagram)
    options = _label_options(cap)
    results: list[tuple] = []

    def place(t: int):
        if t == N:
            results.append(tuple(tuple(row) for row in bld.mat))
            return limit is None or len(results) < limit
        return row(t, 0, t == n0, False)

    def row(t: int, j: int, free: bool, attached: bool) -> bool:
        if j == t:
            if not attached:
                return True
            if not bld.check_deep_parabolic(t):
                return True
            return place(t + 1)
        if j >= n0:
            # entries to earlier extension vertices: unordered
            for v in options:
                bld.set_edge(t, j, v)
                if bld.check_pair(t, j):
                    if not row(t, j + 1, free, attached):
                        bld.set_edge(t, j, 0)
                        return False
            bld.set_edge(t, j, 0)
            return True
        prev = bld.mat[t - 1][j] if not free else None
        for v in options:
            nfree = free
            if not free:
                if v < prev:
                    continue
                nfree = v > prev
            bld.set_edge(t, j, v)
            if bld.check_pair(t, j):
                natt = attached or (v != 0 and j in attach_set)
                if not row(t, j + 1, nfree, natt):
                    bld.set_edge(t, j, 0)
                    return False
        bld.set_edge(t, j, 0)
        return True

    place(n0)
    return results


def _rebuild_extension(base: CoxeterDiagram, mat) -> CoxeterDiagram:
    n0 = base.order
    N = len(mat)
    names = list(base.vertices) + [f"x{i + 1}" for i in range(N - n0)]
    edges = dict(base.edges)
    for i in range(N):
        for j in range(max(i + 1, n0), N):
            if mat[i][j]:
                edges[(names[i], names[j])] = EdgeLabel.finite(mat[i][j])
    return CoxeterDiagram(names, edges)


def expansion_search(
    base: CoxeterDiagram,
    extra: int,
    cap: int = 10,
    attach_to: Optional[tuple] = None,
    limit: Optional[int] = None,
) -> list[CoxeterDiagram]:
    """Expansions of a Lanner diagram by `extra` vertices, each attached to
    the base (or to `attach_to`), with no new Lanner or parabolic
    subdiagram."""
    if extra < 1:
        raise ValueError("extra must be >= 1")
    if cap < 5:
        raise ValueError("cap must be >= 5")
    base_mat = smallcat.matrix_of(base)
    attach = None
    if attach_to is not None:
        attach = tuple(base.index(v) for v in attach_to)
    mats = expansion_extensions_mat(
        base_mat, _base_allowed_masks(base), extra, cap, attach, limit
    )
    seen = set()
    out = []
    for m in mats:
        key = smallcat.canonical_key([list(r) for r in m])
        if key in seen:
            continue
        seen.add(key)
        out.append(_rebuild_extension(base, m))
    return out


def lanner_universe(order: int, cap: int) -> list[tuple[str, CoxeterDiagram]]:
    if order == 2:
        return [("L2", build(["p0", "p1"], [("p0", "p1", ("rho", "r"))]))]
    if order == 3:
        return [
            (f"L3({k},{l},{m})", triangle_diagram(k, l, m))
            for (k, l, m) in lanner_triangles(cap)
        ]
    if order in (4, 5):
        return [
            (e.name, e.diagram)
            for e in table3_entries(5)
            if e.family == f"L{order}"
        ]
    raise ValueError("Lanner orders are 2..5")


def _expansion_worker(args):
    name, base_mat, allowed, extra, cap = args
    found = expansion_extensions_mat(
        [list(r) for r in base_mat], allowed, extra, cap, None, None
    )
    return name, len(found)


def expansion_empty_for_order(
    order: int, extra: int, cap: int = 10, jobs: int = 1
) -> dict[str, int]:
    """Extension counts for every Lanner diagram of the given order; the
    emptiness claims hold when every count is zero."""
    tasks = []
    for name, diagram in lanner_universe(order, cap):
        base_mat = smallcat.matrix_of(diagram)
        allowed = _base_allowed_masks(diagram)
        tasks.append((name, tuple(tuple(r) for r in base_mat), tuple(allowed), extra, cap))
    results: dict[str, int] = {}
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for name, count in pool.map(_expansion_worker, tasks):
                results[name] = count
    else:
        for task in tasks:
            name, count = _expansion_worker(task)
            results[name] = count
    return dict(sorted(results.items()))


# -- x0 products -------------------------------------------------------------------


@dataclass(frozen=True)
class ProductSpec:
    component_orders: tuple
    label_cap: int = 10

    def __post_init__(self):
        orders = tuple(self.component_orders)
        if sorted(orders, reverse=True) != list(orders):
            raise ValueError("component orders must be non-increasing")
        if any(k not in (2, 3, 4, 5) for k in orders):
            raise ValueError("component orders must be in 2..5")
        if self.label_cap < 5:
            raise ValueError("cap must be >= 5")
        guard = config.limits().product_total_order_cap
        if sum(orders) > guard:
            raise GuardExceeded(f"total order {sum(orders)} exceeds the guard {guard}")


class GuardExceeded(ValueError):
    pass


@dataclass
class AdmissibleDiagram:
    diagram: CoxeterDiagram
    components: list[tuple[str, ...]]
    verdict: SuperhyperbolicVerdict

    def to_json_dict(self) -> dict:
        return {
            "diagram": self.diagram.to_json_dict(),
            "components": [list(c) for c in self.components],
            "verdict": self.verdict.summary(),
        }


def _component_choices(spec: ProductSpec):
    universes = {k: lanner_universe(k, spec.label_cap) for k in set(spec.component_orders)}

    def rec(i, acc):
        if i == len(spec.component_orders):
            yield list(acc)
            return
        k = spec.component_orders[i]
        start = 0
        if i > 0 and spec.component_orders[i - 1] == k:
            start = acc[-1][0]
        for idx in range(start, len(universes[k])):
            yield from rec(i + 1, acc + [(idx, k)])

    yield from rec(0, [])


def _product_worker(args):
    (orders, cap, choice) = args
    universes = {k: lanner_universe(k, cap) for k in set(orders)}
    comps = []
    for slot, (idx, k) in enumerate(choice):
        name, D = universes[k][idx]
        mapping = {}
        for vi, v in enumerate(D.vertices):
            mapping[v] = f"c{slot}_{vi}"
        D = D.relabel(mapping)
        if k == 2:
            # one rho per order-2 component
            (pair, lab) = next(iter(D.edges.items()))
            D = CoxeterDiagram(
                D.vertices, {pair: EdgeLabel.dotted_var(f"r{slot + 1}")}
            )
        comps.append((name, D))
    names = []
    comp_slices = []
    offset = 0
    for _, D in comps:
        names.extend(D.vertices)
        comp_slices.append((offset, offset + D.order))
        offset += D.order
    N = offset
    allowed = []
    comp_of = [0] * N
    for ci, (a, b) in enumerate(comp_slices):
        mask = 0
        for i in range(a, b):
            mask |= 1 << i
            comp_of[i] = ci
        allowed.append(mask)
    bld = _Builder(N, allowed)
    fixed = {}
    for ci, (_, D) in enumerate(comps):
        a, _b = comp_slices[ci]
        cmat = smallcat.matrix_of(D)
        for i in range(D.order):
            for j in range(i + 1, D.order):
                if cmat[i][j]:
                    fixed[(a + i, a + j)] = cmat[i][j]
    options = _label_options(cap)
    found: list[tuple] = []

    def place(t: int) -> None:
        if t == N:
            found.append(tuple(tuple(row) for row in bld.mat))
            return
        row(t, 0)

    def row(t: int, j: int) -> None:
        if j == t:
            if bld.check_deep_parabolic(t):
                place(t + 1)
            return
        if comp_of[j] == comp_of[t]:
            v = fixed.get((j, t), 0)
            bld.set_edge(t, j, v)
            if bld.check_pair(t, j):
                row(t, j + 1)
            bld.set_edge(t, j, 0)
            return
        for v in options:
            bld.set_edge(t, j, v)
            if bld.check_pair(t, j):
                row(t, j + 1)
        bld.set_edge(t, j, 0)

    place(0)
    out = []
    for m in found:
        edges = {}
        for ci, (_, D) in enumerate(comps):
            edges.update(D.edges)
        for i in range(N):
            for j in range(i + 1, N):
                if comp_of[i] != comp_of[j] and m[i][j]:
                    edges[(names[i], names[j])] = EdgeLabel.finite(m[i][j])
        diagram = CoxeterDiagram(names, edges)
        comp_sets = [tuple(D.vertices) for _, D in comps]
        out.append((diagram.to_json(), [list(c) for c in comp_sets]))
    return out


def check_product_membership(
    diagram: CoxeterDiagram, spec: ProductSpec
) -> Optional[list[tuple[str, ...]]]:
    """Component witness sets if the diagram lies in the x0-product set."""
    lanner = scan_subdiagrams(diagram, "lanner")
    if scan_subdiagrams(diagram, "parabolic"):
        return None
    orders = sorted((len(w) for w in lanner), reverse=True)
    if orders != list(spec.component_orders):
        return None
    union: set[str] = set()
    for w in lanner:
        if union & w:
            return None
        union |= w
    if union != set(diagram.vertices):
        return None
    ordered = sorted(lanner, key=len, reverse=True)
    return [tuple(sorted(w)) for w in ordered]


def product_search(
    spec: ProductSpec,
    fixtures: Optional[list[CoxeterDiagram]] = None,
    jobs: int = 1,
    certify: bool = True,
) -> list[AdmissibleDiagram]:
    """Diagrams in the x0-product set for the given component orders.

    With `fixtures`, the enumeration is skipped and the membership filter plus
    certification run on the given diagrams only.
    """
    results: list[AdmissibleDiagram] = []
    if fixtures is not None:
        for D in fixtures:
            comps = check_product_membership(D, spec)
            if comps is None:
                continue
            verdict = (
                certify_superhyperbolic_any(D)
                if certify
                else SuperhyperbolicVerdict(False, "unknown")
            )
            results.append(AdmissibleDiagram(D, comps, verdict))
        return results
    tasks = [
        (spec.component_orders, spec.label_cap, choice)
        for choice in _component_choices(spec)
    ]
    raw: list[tuple] = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_product_worker, tasks):
                raw.extend(chunk)
    else:
        for task in tasks:
            raw.extend(_product_worker(task))
    seen = set()
    import json as _json

    for djson, comps in sorted(raw):
        D = CoxeterDiagram.from_json_dict(_json.loads(djson))
        key = smallcat.canonical_key(smallcat.matrix_of(D))
        if key in seen:
            continue
        seen.add(key)
        verdict = (
            certify_superhyperbolic_any(D)
            if certify
            else SuperhyperbolicVerdict(False, "unknown")
        )
        results.append(AdmissibleDiagram(D, [tuple(c) for c in comps], verdict))
    return results


# -- neighbor table (two joined triangles) ---------------------------------------


@dataclass(frozen=True)
class NeighborConfig:
    triangle: tuple  # sorted labels (k, l, m)
    marked_labels: tuple  # (p, q) at the attaching vertex, sorted
    far_label: int
    attach: int
    local_det_abs: Scalar
    diagram: CoxeterDiagram  # the 4-vertex <L, u4>

    def shape_key(self) -> tuple:
        return smallcat.canonical_key(smallcat.matrix_of(self.diagram))

    def describe(self) -> dict:
        return {
            "triangle": list(self.triangle),
            "marked": list(self.marked_labels),
            "far": self.far_label,
            "attach": self.attach,
            "abs_local_det": str(self.local_det_abs),
            "approx": round(self.local_det_abs.to_float(), 6),
        }


def _marked_triangle(p: int, q: int, far: int, attach: int) -> CoxeterDiagram:
    """(p,q,far) triangle with u4 attached at the (p,q)-vertex by `attach`."""
    D = triangle_diagram(p, q, far)  # u3 carries the p and q edges
    edges = dict(D.edges)
    edges[("u3", "u4")] = EdgeLabel.finite(attach)
    return CoxeterDiagram(list(D.vertices) + ["u4"], edges)


def _marked_options(k: int, l: int, m: int) -> list[tuple]:
    """(p, q, far) per vertex of the triangle, deduped by unordered (p, q)."""
    seen = {}
    for (p, q, far) in ((k, l, m), (l, m, k), (m, k, l)):
        seen.setdefault((tuple(sorted((p, q))), far), (p, q, far))
    return sorted(seen.values())


def _valid_single_attach_configs(cap: int) -> list[NeighborConfig]:
    out = []
    for (k, l, m) in lanner_triangles(cap):
        for (p, q, far) in _marked_options(k, l, m):
            for attach in range(3, cap + 1):
                D = _marked_triangle(p, q, far, attach)
                lanner = scan_subdiagrams(D, "lanner")
                if scan_subdiagrams(D, "parabolic"):
                    continue
                tri_set = frozenset(("u1", "u2", "u3"))
                if [w for w in lanner if w != tri_set]:
                    continue
                if tri_set not in lanner:
                    continue
                d = d_func(p, q, far)
                out.append(
                    NeighborConfig(
                        triangle=tuple(sorted((k, l, m))),
                        marked_labels=tuple(sorted((p, q))),
                        far_label=far,
                        attach=attach,
                        local_det_abs=abs(d),
                        diagram=D,
                    )
                )
    return out


def join_two_triangles(c1: NeighborConfig, c2: NeighborConfig) -> CoxeterDiagram:
    """The 6-vertex diagram: both triangles joined at their marked vertices."""
    left = triangle_diagram(c1.marked_labels[0], c1.marked_labels[1], c1.far_label,
                            names=("a1", "a2", "a3"))
    right = triangle_diagram(c2.marked_labels[0], c2.marked_labels[1], c2.far_label,
                             names=("b1", "b2", "b3"))
    edges = dict(left.edges)
    edges.update(right.edges)
    edges[("a3", "b3")] = EdgeLabel.finite(c1.attach)
    return CoxeterDiagram(list(left.vertices) + list(right.vertices), edges)


@dataclass
class NeighborReport:
    cap: int
    configs: list[NeighborConfig]
    six_shapes: list[NeighborConfig]
    six_matches_expected: bool
    surviving: list[NeighborConfig]
    surviving_det_is_sqrt2_over_3: bool
    third_bound_matches: list[NeighborConfig]
    third_unique: bool
    third_unique_at_higher_cap: bool

    def summary(self) -> dict:
        return {
            "cap": self.cap,
            "valid_configs": len(self.configs),
            "six": [c.describe() for c in self.six_shapes],
            "six_matches_expected": self.six_matches_expected,
            "surviving": [c.describe() for c in self.surviving],
            "sqrt2_over_3_exact": self.surviving_det_is_sqrt2_over_3,
            "small_det_configs": [c.describe() for c in self.third_bound_matches],
            "small_det_unique": self.third_unique,
            "small_det_unique_at_higher_cap": self.third_unique_at_higher_cap,
        }


def _expected_six_shapes() -> set:
    """The six <L1, u4> diagrams of the two-triangle analysis, from the figures."""
    shapes = [
        (5, 5, 2, 3),  # (p, q, far, attach)
        (4, 5, 2, 3),
        (3, 4, 3, 3),
        (5, 2, 4, 3),
        (4, 2, 5, 3),
        (3, 2, 7, 3),
    ]
    return {
        smallcat.canonical_key(smallcat.matrix_of(_marked_triangle(p, q, far, a)))
        for (p, q, far, a) in shapes
    }


def _small_det_configs(cap: int) -> list[NeighborConfig]:
    """Marked triangles whose two edges at the marked vertex have multiplicity
    <= 1 and |local det| <= 3 / (4 sqrt 2)."""
    bound = sqrt2() * 3 / 8  # 3 / (4 sqrt 2)
    out = []
    for (k, l, m) in lanner_triangles(cap):
        for (p, q, far) in _marked_options(k, l, m):
            if p > 3 or q > 3:
                continue
            d = abs(d_func(p, q, far))
            if (d - bound).sign() <= 0:
                out.append(
                    NeighborConfig(
                        triangle=tuple(sorted((k, l, m))),
                        marked_labels=tuple(sorted((p, q))),
                        far_label=far,
                        attach=3,
                        local_det_abs=d,
                        diagram=_marked_triangle(p, q, far, 3),
                    )
                )
    return out


def neighbor_table_check(cap: int = 7, recheck_cap: int = 20) -> NeighborReport:
    """Reproduce the neighbor analysis of two joined order-3 Lanner diagrams.

    When two marked triangles are joined by a simple edge inside a diagram
    that is not superhyperbolic, the join formula forces
    d1 * d2 <= w^2 = cos^2(pi/3); on the smaller side that means
    |local det| <= cos(pi/3).  The possible <L1, u4> configurations are
    therefore the witness-valid simple-edge attachments with
    |local det| <= 1/2, and those are the six listed diagrams.
    """
    if cap < 7:
        raise ValueError("cap must be >= 7")
    configs = _valid_single_attach_configs(cap)
    configs.sort(key=lambda c: c.local_det_abs.to_float())
    w = cos_pi_over(3, 3)
    six = [
        c
        for c in configs
        if c.attach == 3 and (c.local_det_abs - w).sign() <= 0
    ]
    six_ok = {c.shape_key() for c in six} == _expected_six_shapes()
    # the surviving configuration: <L1, u4> must extend by two more vertices
    # attached to the triangle itself
    surviving = [
        c
        for c in six
        if expansion_search(c.diagram, 2, cap, attach_to=("u1", "u2", "u3"), limit=1)
    ]
    sqrt_ok = (
        len(surviving) == 1
        and surviving[0].local_det_abs == sqrt2() / 3
        and surviving[0].marked_labels == (3, 4)
    )
    small = _small_det_configs(cap)
    small_unique = len(small) == 1 and small[0].triangle == (2, 3, 7)
    small_high = _small_det_configs(recheck_cap)
    small_high_unique = len(small_high) == 1 and small_high[0].triangle == (2, 3, 7)
    return NeighborReport(
        cap=cap,
        configs=configs,
        six_shapes=six,
        six_matches_expected=six_ok,
        surviving=surviving,
        surviving_det_is_sqrt2_over_3=sqrt_ok,
        third_bound_matches=small,
        third_unique=small_unique,
        third_unique_at_higher_cap=small_high_unique,
    )
