"""Expansion, product, and neighbor searches."""

from __future__ import annotations

import pytest

from coxeterlab import fixtures, smallcat
from coxeterlab.diagram import CoxeterDiagram, EdgeLabel, build
from coxeterlab.rationals import QQ
from coxeterlab.search import (
    GuardExceeded,
    ProductSpec,
    check_product_membership,
    expansion_search,
    lanner_universe,
    neighbor_table_check,
    product_search,
)
from coxeterlab.taxonomy import scan_subdiagrams, triangle_diagram


def test_expansion_nonempty_examples():
    # the (3,3,4) triangle expands with one and with two vertices
    L = triangle_diagram(3, 4, 3)
    one = expansion_search(L, 1, cap=7)
    two = expansion_search(L, 2, cap=7)
    assert one and two
    for D in one + two:
        assert not scan_subdiagrams(D, "parabolic")
        witnesses = scan_subdiagrams(D, "lanner")
        assert witnesses == [frozenset(("u1", "u2", "u3"))]


def test_expansion_237_dies_at_three():
    t = triangle_diagram(2, 3, 7)
    assert expansion_search(t, 2, cap=10)
    assert expansion_search(t, 3, cap=10) == []


def test_expansion_requires_attachment():
    # an extension vertex with no edge into the base never appears
    L = triangle_diagram(3, 4, 3)
    for D in expansion_search(L, 2, cap=7):
        for x in ("x1", "x2"):
            assert any(
                x in pair and (pair[0] in L.vertices or pair[1] in L.vertices)
                for pair in D.edges
            ), D.to_text()


def test_expansion_validates_inputs():
    L = triangle_diagram(2, 3, 7)
    with pytest.raises(ValueError):
        expansion_search(L, 0)
    with pytest.raises(ValueError):
        expansion_search(L, 1, cap=4)


def test_pruning_of_bold_and_dotted_is_sound():
    # force-include a bold / dotted edge into a valid expansion: the scans
    # must immediately report the forbidden witness
    L = triangle_diagram(3, 4, 3)
    D = expansion_search(L, 1, cap=7)[0]
    x = "x1"
    anchor = next(v for v in L.vertices)
    edges = dict(D.edges)
    edges[(x, "zb")] = EdgeLabel.bold()
    with_bold = CoxeterDiagram(list(D.vertices) + ["zb"], edges)
    assert any(len(w) == 2 for w in scan_subdiagrams(with_bold, "parabolic"))
    edges = dict(D.edges)
    edges[(x, "zd")] = EdgeLabel.dotted_var("t")
    with_dotted = CoxeterDiagram(list(D.vertices) + ["zd"], edges)
    new_lanner = [w for w in scan_subdiagrams(with_dotted, "lanner") if len(w) == 2]
    assert frozenset((x, "zd")) in new_lanner


def test_lanner_universe_sizes():
    assert len(lanner_universe(2, 10)) == 1
    assert len(lanner_universe(4, 10)) == 9
    assert len(lanner_universe(5, 10)) == 5
    assert all(name.startswith("L3") for name, _ in lanner_universe(3, 7))


def test_product_spec_guard():
    with pytest.raises(GuardExceeded):
        ProductSpec((5, 4, 2, 2), 7)
    with pytest.raises(ValueError):
        ProductSpec((2, 3), 7)  # must be non-increasing


def test_product_membership_filter():
    spec = ProductSpec((3, 2, 2, 2), 7)
    names = dict(fixtures.case_b_family())
    good = names["case_b_3_0"]
    comps = check_product_membership(good, spec)
    assert comps is not None
    assert sorted(len(c) for c in comps) == [2, 2, 2, 3]
    bad = names["case_b_4_3"]  # contains a parabolic path
    assert check_product_membership(bad, spec) is None


def test_product_search_two_pairs_contains_disconnected_pair():
    res = product_search(ProductSpec((2, 2), 7), certify=False)
    assert any(
        all(lab.is_dotted for lab in adm.diagram.edges.values())
        and len(adm.diagram.edges) == 2
        for adm in res
    )


def test_product_search_case_b_fixtures():
    fx = [d for _, d in fixtures.case_b_family()]
    out = product_search(ProductSpec((3, 2, 2, 2), 7), fixtures=fx)
    assert 0 < len(out) < len(fx)  # two members are rejected by the scans
    for adm in out:
        assert adm.verdict.status == "superhyperbolic"
        assert adm.verdict.subset is not None


def test_neighbor_table():
    rep = neighbor_table_check(cap=7, recheck_cap=20)
    assert rep.six_matches_expected
    assert len(rep.six_shapes) == 6
    assert rep.surviving_det_is_sqrt2_over_3
    assert len(rep.surviving) == 1
    assert rep.surviving[0].triangle == (3, 3, 4)
    assert rep.third_unique and rep.third_unique_at_higher_cap
    assert rep.third_bound_matches[0].triangle == (2, 3, 7)


def test_canonical_key_deduplicates_isomorphic():
    a = build(["a", "b", "c"], [("a", "b", 3), ("b", "c", 5)])
    b = build(["x", "y", "z"], [("y", "z", 3), ("x", "y", 5)])
    assert smallcat.canonical_key(smallcat.matrix_of(a)) == smallcat.canonical_key(
        smallcat.matrix_of(b)
    )


def test_cap_sensitivity_of_emptiness():
    # the acceptance emptiness verdicts are stable under raising the label cap
    from coxeterlab.search import expansion_empty_for_order

    r4 = expansion_empty_for_order(4, 3, cap=13)
    assert all(v == 0 for v in r4.values())
    r5 = expansion_empty_for_order(5, 3, cap=13)
    assert all(v == 0 for v in r5.values())
    r3 = expansion_empty_for_order(3, 5, cap=13)
    assert all(v == 0 for v in r3.values())


def test_product_results_witnesses_equal_components():
    res = product_search(ProductSpec((2, 2), 6), certify=False)
    for adm in res[:40]:
        witnesses = scan_subdiagrams(adm.diagram, "lanner")
        assert sorted(map(sorted, witnesses)) == sorted(map(sorted, adm.components))
