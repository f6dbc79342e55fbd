"""Diagram classification, witness scans, and the catalog of small diagrams.

classify / is_lanner are definitional (exact inertia).  The subdiagram scans
go through the combinatorial recognizers in smallcat, which is what keeps
the searches fast; the two routes are property-tested against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Optional

from . import smallcat
from .diagram import BOLD, DOTTED_NUM, DOTTED_SYM, CoxeterDiagram, EdgeLabel, build
from .spectra import inertia


class DiagramClass(Enum):
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"
    SUPERHYPERBOLIC = "superhyperbolic"
    OTHER_INDEFINITE = "other_indefinite"  # unreachable; the four above cover all signatures


def classify(D: CoxeterDiagram, assignment: dict | None = None) -> DiagramClass:
    """Elliptic / parabolic / hyperbolic / superhyperbolic from exact inertia."""
    sig = inertia(D, assignment)
    if sig.neg == 0:
        return DiagramClass.ELLIPTIC if sig.zero == 0 else DiagramClass.PARABOLIC
    if sig.neg == 1:
        return DiagramClass.HYPERBOLIC
    return DiagramClass.SUPERHYPERBOLIC


def is_lanner(D: CoxeterDiagram, assignment: dict | None = None) -> bool:
    """Hyperbolic with every proper subdiagram elliptic.

    Order 2: exactly the dotted edge (symbolic dotted pairs count, since they
    are hyperbolic for every value > 1).  For order >= 3 a dotted or bold
    edge already yields a non-elliptic proper pair, so only all-finite-label
    diagrams remain; those are classified exactly.
    """
    n = D.order
    if n < 2:
        return False
    if n == 2:
        lab = next(iter(D.edges.values()), None)
        return lab is not None and lab.is_dotted
    if D.has_dotted() or D.has_bold():
        return False
    if classify(D, assignment) is not DiagramClass.HYPERBOLIC:
        return False
    # ellipticity is hereditary, so the maximal proper subdiagrams suffice
    for drop in D.vertices:
        sub = D.restrict([v for v in D.vertices if v != drop])
        if classify(sub) is not DiagramClass.ELLIPTIC:
            return False
    return True


def scan_subdiagrams(D: CoxeterDiagram, predicate: str) -> list[frozenset]:
    """All minimal witness subsets for 'lanner', 'parabolic-connected', or
    'parabolic'.

    Lanner witnesses have order <= 5 (the catalog maximum); connected
    parabolic witnesses have order <= 9.  Minimal parabolic subdiagrams are
    connected, so the 'parabolic' predicate coincides with
    'parabolic-connected' on minimal witnesses.
    """
    if predicate not in ("lanner", "parabolic", "parabolic-connected"):
        raise ValueError(f"unknown predicate {predicate!r}")
    want = smallcat.LANNER if predicate == "lanner" else smallcat.PARABOLIC
    max_size = 5 if want == smallcat.LANNER else 9
    mat = smallcat.matrix_of(D)
    n = D.order
    adj = [0] * n
    for i in range(n):
        for j in range(n):
            if mat[i][j]:
                adj[i] |= 1 << j
    out = []
    for mask in smallcat.connected_subsets(adj, max_size):
        if mask.bit_count() < 2:
            continue
        verts = tuple(i for i in range(n) if (mask >> i) & 1)
        if smallcat.witness_kind(smallcat.submatrix_key(mat, verts)) == want:
            out.append(frozenset(D.vertices[i] for i in verts))
    out.sort(key=lambda s: (len(s), sorted(D.index(v) for v in s)))
    return out


def polytope_admissible(D: CoxeterDiagram, assignment: dict | None = None) -> bool:
    """Necessary condition for a compact-polytope diagram: hyperbolic and no
    parabolic subdiagram.  (The face-poset condition is out of scope.)"""
    if classify(D, assignment) is not DiagramClass.HYPERBOLIC:
        return False
    return not scan_subdiagrams(D, "parabolic")


# -- catalog ------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    family: str
    table: int
    params: tuple
    diagram: CoxeterDiagram


def _path(labels: list[int]) -> CoxeterDiagram:
    n = len(labels) + 1
    vs = [f"v{i}" for i in range(n)]
    return build(vs, [(vs[i], vs[i + 1], labels[i]) for i in range(len(labels))])


def _cycle(labels: list[int]) -> CoxeterDiagram:
    n = len(labels)
    vs = [f"v{i}" for i in range(n)]
    edges = [(vs[i], vs[(i + 1) % n], labels[i]) for i in range(n)]
    return build(vs, edges)


def _star_arms(arms: list[int]) -> CoxeterDiagram:
    """Tree of 3-labeled edges: arms of the given lengths from a center."""
    vs = ["c"]
    edges = []
    for ai, length in enumerate(arms):
        prev = "c"
        for k in range(length):
            v = f"a{ai}_{k}"
            vs.append(v)
            edges.append((prev, v, 3))
            prev = v
    return build(vs, edges)


def table1_entries(max_n: int = 10, max_g2: int = 10) -> list[CatalogEntry]:
    out = []
    one = build(["v0"], [])
    out.append(CatalogEntry("A1", "A", 1, (1,), one))
    for n in range(2, max_n + 1):
        out.append(CatalogEntry(f"A{n}", "A", 1, (n,), _path([3] * (n - 1))))
    for n in range(2, max_n + 1):
        out.append(CatalogEntry(f"B{n}", "B", 1, (n,), _path([3] * (n - 2) + [4])))
    for n in range(4, max_n + 1):
        out.append(CatalogEntry(f"D{n}", "D", 1, (n,), _star_arms([1, 1, n - 3])))
    for m in range(5, max_g2 + 1):
        if m == 5:
            continue  # G2^5 is listed as H2 territory; keep one canonical entry per shape
        out.append(CatalogEntry(f"G2^{m}", "G2", 1, (m,), _path([m])))
    out.append(CatalogEntry("G2^5", "G2", 1, (5,), _path([5])))
    out.append(CatalogEntry("F4", "F", 1, (4,), _path([3, 4, 3])))
    out.append(CatalogEntry("E6", "E", 1, (6,), _star_arms([1, 2, 2])))
    out.append(CatalogEntry("E7", "E", 1, (7,), _star_arms([1, 2, 3])))
    out.append(CatalogEntry("E8", "E", 1, (8,), _star_arms([1, 2, 4])))
    out.append(CatalogEntry("H3", "H", 1, (3,), _path([5, 3])))
    out.append(CatalogEntry("H4", "H", 1, (4,), _path([5, 3, 3])))
    return out


def table2_entries(max_n: int = 10) -> list[CatalogEntry]:
    out = []
    out.append(
        CatalogEntry("~A1", "~A", 2, (1,), build(["v0", "v1"], [("v0", "v1", "bold")]))
    )
    for n in range(2, max_n + 1):
        out.append(CatalogEntry(f"~A{n}", "~A", 2, (n,), _cycle([3] * (n + 1))))
    for n in range(3, max_n + 1):
        vs = ["l0", "l1"] + [f"p{i}" for i in range(n - 1)]
        edges = [("l0", "p0", 3), ("l1", "p0", 3)]
        for i in range(n - 2):
            lab = 4 if i == n - 3 else 3
            edges.append((f"p{i}", f"p{i+1}", lab))
        out.append(CatalogEntry(f"~B{n}", "~B", 2, (n,), build(vs, edges)))
    for n in range(2, max_n + 1):
        out.append(CatalogEntry(f"~C{n}", "~C", 2, (n,), _path([4] + [3] * (n - 2) + [4])))
    out.append(CatalogEntry("~D4", "~D", 2, (4,), _star_arms([1, 1, 1, 1])))
    for n in range(5, max_n + 1):
        vs = ["a0", "a1", "b0", "b1"] + [f"q{i}" for i in range(n - 3)]
        edges = [("a0", "q0", 3), ("a1", "q0", 3), ("b0", f"q{n-4}", 3), ("b1", f"q{n-4}", 3)]
        for i in range(n - 4):
            edges.append((f"q{i}", f"q{i+1}", 3))
        out.append(CatalogEntry(f"~D{n}", "~D", 2, (n,), build(vs, edges)))
    out.append(CatalogEntry("~G2", "~G", 2, (2,), _path([3, 6])))
    out.append(CatalogEntry("~F4", "~F", 2, (4,), _path([3, 4, 3, 3])))
    out.append(CatalogEntry("~E6", "~E", 2, (6,), _star_arms([2, 2, 2])))
    out.append(CatalogEntry("~E7", "~E", 2, (7,), _star_arms([1, 3, 3])))
    out.append(CatalogEntry("~E8", "~E", 2, (8,), _star_arms([1, 2, 5])))
    return out


def lanner_triangles(label_cap: int) -> list[tuple[int, int, int]]:
    out = []
    for k in range(2, label_cap + 1):
        for l in range(k, label_cap + 1):
            for m in range(l, label_cap + 1):
                if Fraction(1, k) + Fraction(1, l) + Fraction(1, m) < 1:
                    out.append((k, l, m))
    return out


def triangle_diagram(k: int, l: int, m: int, names=("u1", "u2", "u3")) -> CoxeterDiagram:
    """Triangle with edge u1u2 = m, u2u3 = l, u3u1 = k (labels 2 mean no edge);
    u3 is the vertex carrying the k and l edges."""
    edges = []
    if m != 2:
        edges.append((names[0], names[1], m))
    if l != 2:
        edges.append((names[1], names[2], l))
    if k != 2:
        edges.append((names[2], names[0], k))
    return build(list(names), edges)


def table3_entries(label_cap: int = 10) -> list[CatalogEntry]:
    out = [
        CatalogEntry(
            "L2", "L2", 3, (), build(["v0", "v1"], [("v0", "v1", ("rho", "r"))])
        )
    ]
    for (k, l, m) in lanner_triangles(label_cap):
        out.append(
            CatalogEntry(
                f"L3({k},{l},{m})", "L3", 3, (k, l, m), triangle_diagram(k, l, m)
            )
        )
    specs4 = [
        [("v0", "v1", 3), ("v1", "v2", 5), ("v2", "v3", 3)],
        [("v0", "v1", 5), ("v1", "v2", 3), ("v1", "v3", 3)],
        [("v0", "v1", 5), ("v1", "v2", 3), ("v2", "v3", 4)],
        [("v0", "v1", 5), ("v1", "v2", 3), ("v2", "v3", 5)],
        [("v0", "v1", 4), ("v1", "v2", 3), ("v2", "v3", 3), ("v3", "v0", 3)],
        [("v0", "v1", 4), ("v1", "v2", 3), ("v2", "v3", 4), ("v3", "v0", 3)],
        [("v0", "v1", 5), ("v1", "v2", 3), ("v2", "v3", 3), ("v3", "v0", 3)],
        [("v0", "v1", 5), ("v1", "v2", 3), ("v2", "v3", 4), ("v3", "v0", 3)],
        [("v0", "v1", 5), ("v1", "v2", 3), ("v2", "v3", 5), ("v3", "v0", 3)],
    ]
    for i, spec in enumerate(specs4):
        out.append(
            CatalogEntry(f"L4_{i+1}", "L4", 3, (i + 1,), build([f"v{j}" for j in range(4)], spec))
        )
    specs5 = [
        [("v0", "v1", 5), ("v1", "v2", 3), ("v2", "v3", 3), ("v3", "v4", 3)],
        [("v0", "v1", 5), ("v1", "v2", 3), ("v2", "v3", 3), ("v3", "v4", 4)],
        [("v0", "v1", 5), ("v1", "v2", 3), ("v2", "v3", 3), ("v3", "v4", 5)],
        [("v0", "v1", 5), ("v1", "v2", 3), ("v2", "v3", 3), ("v2", "v4", 3)],
        [("v0", "v1", 3), ("v1", "v2", 3), ("v2", "v3", 4), ("v3", "v4", 3), ("v4", "v0", 3)],
    ]
    for i, spec in enumerate(specs5):
        out.append(
            CatalogEntry(f"L5_{i+1}", "L5", 3, (i + 1,), build([f"v{j}" for j in range(5)], spec))
        )
    return out


def catalog_match(D: CoxeterDiagram) -> Optional[CatalogEntry]:
    """Identify a connected diagram inside Tables 1-3, up to isomorphism."""
    mat = smallcat.matrix_of(D)
    if not smallcat._is_connected(mat) and D.order != 1:
        return None
    got = smallcat.connected_finite_name(mat)
    if got is not None:
        kind, name = got
        table = 1 if kind == "elliptic" else 2
        return CatalogEntry(name, name.rstrip("0123456789^"), table, (), D)
    name = smallcat.lanner_name(mat)
    if name is not None:
        return CatalogEntry(name, name.split("(")[0].split("_")[0], 3, (), D)
    return None


def catalog_json(max_n: int = 10, label_cap: int = 10) -> dict:
    def pack(entries):
        return [
            {"name": e.name, "family": e.family, "diagram": e.diagram.to_json_dict()}
            for e in entries
        ]

    return {
        "table1": pack(table1_entries(max_n)),
        "table2": pack(table2_entries(max_n)),
        "table3": pack(table3_entries(label_cap)),
    }


def enumerate_connected_diagrams(order: int, label_cap: int = 7):
    """All connected diagrams on `order` vertices with finite labels <= cap.

    Used by the catalog-completeness tests; no bold or dotted edges.
    """
    vs = [f"v{i}" for i in range(order)]
    pairs = list(combinations(range(order), 2))
    choices = [0] + list(range(3, label_cap + 1))

    def rec(i, acc):
        if i == len(pairs):
            mat = [[0] * order for _ in range(order)]
            for (a, b), lab in acc:
                mat[a][b] = mat[b][a] = lab
            if smallcat._is_connected(mat) or order == 1:
                edges = [(vs[a], vs[b], lab) for (a, b), lab in acc]
                yield build(vs, edges)
            return
        for c in choices:
            yield from rec(i + 1, acc + [(pairs[i], c)] if c else acc)

    yield from rec(0, [])
