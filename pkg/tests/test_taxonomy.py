"""Classification, witness scans, catalogs."""

from __future__ import annotations

import random

from coxeterlab import smallcat
from coxeterlab.diagram import build
from coxeterlab.numeric import fast_inertia
from coxeterlab.rationals import QQ
from coxeterlab.taxonomy import (
    DiagramClass,
    catalog_json,
    catalog_match,
    classify,
    enumerate_connected_diagrams,
    is_lanner,
    lanner_triangles,
    polytope_admissible,
    scan_subdiagrams,
    table1_entries,
    table2_entries,
    table3_entries,
    triangle_diagram,
)


def test_classify_named_examples():
    h4 = [e for e in table1_entries(4) if e.name == "H4"][0]
    assert classify(h4.diagram) is DiagramClass.ELLIPTIC
    e8t = [e for e in table2_entries(8) if e.name == "~E8"][0]
    assert classify(e8t.diagram) is DiagramClass.PARABOLIC
    assert classify(triangle_diagram(2, 3, 7)) is DiagramClass.HYPERBOLIC


def test_is_lanner_examples():
    dotted = build(["a", "b"], [("a", "b", ("rho", "r"))])
    assert is_lanner(dotted)
    assert not is_lanner(build(["a", "b"], [("a", "b", "bold")]))
    assert is_lanner(triangle_diagram(2, 3, 7))
    assert not is_lanner(triangle_diagram(2, 3, 6))  # parabolic boundary
    for e in table3_entries(5):
        if e.family in ("L4", "L5"):
            assert is_lanner(e.diagram), e.name


def test_scan_examples():
    # diagram (1) instance with a (2,3,7) triangle: witnesses are the
    # triangle and the dotted pair
    from coxeterlab.fixtures import form1_diagram

    D = form1_diagram(2, 3, 7, 3, 3, 3)
    witnesses = scan_subdiagrams(D, "lanner")
    assert frozenset(("u1", "u2", "u3")) in witnesses
    assert frozenset(("u4", "u6")) in witnesses
    h4 = [e for e in table1_entries(4) if e.name == "H4"][0]
    assert scan_subdiagrams(h4.diagram, "lanner") == []
    assert scan_subdiagrams(h4.diagram, "parabolic") == []
    bold = build(["a", "b"], [("a", "b", "bold")])
    assert scan_subdiagrams(bold, "parabolic") == [frozenset(("a", "b"))]
    assert scan_subdiagrams(bold, "parabolic-connected") == [frozenset(("a", "b"))]


def test_polytope_admissible_examples():
    assert polytope_admissible(triangle_diagram(2, 3, 7))
    e6t = [e for e in table2_entries(6) if e.name == "~E6"][0]
    assert not polytope_admissible(e6t.diagram)
    from coxeterlab.fixtures import s_diagram

    assert not polytope_admissible(s_diagram(1), {"r": QQ(2)})


def test_catalog_match_examples():
    h3 = build(["a", "b", "c"], [("a", "b", 3), ("b", "c", 5)])
    assert catalog_match(h3).name == "H3"
    boldtri = build(
        ["a", "b", "c"],
        [("a", "b", "bold"), ("b", "c", "bold"), ("a", "c", "bold")],
    )
    assert catalog_match(boldtri) is None
    cyc = build(
        ["a", "b", "c", "d"],
        [("a", "b", 4), ("b", "c", 3), ("c", "d", 3), ("d", "a", 3)],
    )
    m = catalog_match(cyc)
    assert m is not None and m.table == 3 and m.name.startswith("L4")


def test_catalog_instances_match_their_tables():
    for e in table1_entries(7):
        m = catalog_match(e.diagram)
        assert m is not None and m.table == 1, e.name
    for e in table2_entries(7):
        m = catalog_match(e.diagram)
        assert m is not None and m.table == 2, e.name


def test_lanner_triangle_condition():
    assert (2, 3, 7) in lanner_triangles(7)
    assert (2, 3, 6) not in lanner_triangles(7)
    assert (3, 3, 4) in lanner_triangles(7)


def test_catalog_json_shape():
    data = catalog_json(max_n=5, label_cap=7)
    assert {"table1", "table2", "table3"} <= set(data)
    assert any(e["name"] == "H4" for e in data["table1"])
    assert any(e["name"] == "~G2" for e in data["table2"])


def _exact_class(D):
    sig = fast_inertia(D)
    if sig.neg == 0 and sig.zero == 0:
        return "elliptic"
    if sig.neg == 0:
        return "parabolic"
    if sig.neg == 1:
        return "hyperbolic"
    return "superhyperbolic"


def test_catalog_completeness_exhaustive_small_order():
    """Connected diagrams of order <= 4 with labels <= 7: recognizers agree
    with the exact classification, every elliptic/parabolic/Lanner instance
    is matched by its table, elliptic diagrams are acyclic with maximal
    degree 3, and every hyperbolic diagram contains a witness."""
    for order in (1, 2, 3, 4):
        for D in enumerate_connected_diagrams(order, label_cap=7):
            mat = smallcat.matrix_of(D)
            cls = _exact_class(D)
            assert smallcat.is_elliptic_small(mat) == (cls == "elliptic")
            assert smallcat.is_parabolic_connected_small(mat) == (cls == "parabolic")
            lan_exact = cls == "hyperbolic" and all(
                _exact_class(D.restrict([v for v in D.vertices if v != drop]))
                == "elliptic"
                for drop in D.vertices
            )
            assert smallcat.is_lanner_small(mat) == lan_exact
            if cls == "elliptic":
                m = catalog_match(D)
                assert m is not None and m.table == 1
                degs = [sum(1 for x in row if x) for row in mat]
                assert max(degs, default=0) <= 3
                assert len(D.edges) == max(order - 1, 0)
            elif cls == "parabolic":
                m = catalog_match(D)
                assert m is not None and m.table == 2
            if lan_exact:
                m = catalog_match(D)
                assert m is not None and m.table == 3
            if cls == "hyperbolic":
                assert scan_subdiagrams(D, "lanner") or scan_subdiagrams(
                    D, "parabolic"
                )


def test_recognizers_match_exact_on_random_order_5_and_6():
    rng = random.Random(41)
    for _ in range(150):
        n = rng.choice([5, 6])
        vs = [f"v{i}" for i in range(n)]
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                lab = rng.choice([0, 0, 0, 3, 3, 3, 4, 4, 5, 6])
                if lab:
                    edges.append((vs[i], vs[j], lab))
        D = build(vs, edges)
        mat = smallcat.matrix_of(D)
        cls = _exact_class(D)
        assert smallcat.is_parabolic_connected_small(mat) == (
            cls == "parabolic" and len(smallcat.components(mat)) == 1
        )
        if n == 5:
            lan_exact = cls == "hyperbolic" and all(
                _exact_class(D.restrict([v for v in D.vertices if v != drop]))
                == "elliptic"
                for drop in D.vertices
            )
            assert smallcat.is_lanner_small(mat) == lan_exact
        if cls == "hyperbolic":
            assert scan_subdiagrams(D, "lanner") or scan_subdiagrams(D, "parabolic")
