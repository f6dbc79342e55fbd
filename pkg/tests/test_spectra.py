"""Gram matrices, the two determinant routes, local determinants, inertia."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from coxeterlab.diagram import build
from coxeterlab.numeric import fast_inertia
from coxeterlab.rationals import QQ
from coxeterlab.rhopoly import RhoPoly
from coxeterlab.scalars import sqrt2
from coxeterlab.spectra import (
    det_cofactor,
    det_cycles,
    det_elim,
    gram,
    inertia,
    inertia_via_charpoly,
    join_diagrams,
    join_local_det,
    local_det,
)
from coxeterlab.diagram import EdgeLabel


def _random_diagram(rng, max_order=6, labels=(3, 4, 5, 6), rho_vars=2):
    n = rng.randint(1, max_order)
    vs = [f"v{i}" for i in range(n)]
    edges = []
    used_vars = 0
    for i in range(n):
        for j in range(i + 1, n):
            roll = rng.random()
            if roll < 0.45:
                continue
            if roll < 0.8:
                edges.append((vs[i], vs[j], rng.choice(labels)))
            elif roll < 0.88:
                edges.append((vs[i], vs[j], "bold"))
            elif roll < 0.96 and used_vars < rho_vars:
                used_vars += 1
                edges.append((vs[i], vs[j], ("rho", f"t{used_vars}")))
            else:
                edges.append((vs[i], vs[j], QQ(rng.randint(5, 9), 4)))
    return build(vs, edges)


def test_gram_examples():
    single = gram(build(["a"], []))
    assert single.entries[0][0] == RhoPoly.one()
    edge3 = gram(build(["a", "b"], [("a", "b", 3)]))
    assert edge3.entries[0][1] == RhoPoly.from_scalar(QQ(-1, 2))
    dotted = gram(build(["a", "b"], [("a", "b", ("rho", "r"))]))
    assert dotted.entries[0][1] == -RhoPoly.var("r")


def test_det_examples():
    dotted = build(["a", "b"], [("a", "b", ("rho", "r"))])
    r = RhoPoly.var("r")
    assert det_elim(gram(dotted)) == 1 - r**2
    a3 = build(["1", "2", "3"], [("1", "2", 3), ("2", "3", 3)])
    assert det_elim(gram(a3)).as_scalar() == QQ(1, 2)
    assert det_cofactor(a3) == det_elim(gram(a3))
    assert det_elim(gram(build([], []))) == RhoPoly.one()


def test_det_cycles_examples():
    assert det_cycles(build(["a"], [])) == RhoPoly.one()
    edge = build(["a", "b"], [("a", "b", 3)])
    assert det_cycles(edge).as_scalar() == QQ(3, 4)
    tri = build(["a", "b", "c"], [("a", "b", 7), ("b", "c", 3)])
    expected = det_cofactor(tri)
    assert det_cycles(tri) == expected  # no 3-cycle term: one weight is zero


def test_det_s1_matches_paper_formula():
    s1 = build(
        ["1", "2", "3", "4", "5", "6", "7"],
        [("1", "2", 3), ("1", "3", 3), ("2", "3", 4), ("1", "4", 3),
         ("4", "5", ("rho", "r")), ("5", "6", 3), ("5", "7", 3)],
    )
    r = RhoPoly.var("r")
    assert det_elim(gram(s1)) == (sqrt2() * 4 * r**2 - sqrt2() * 2 - 1) / 16


def test_a_chain_closed_form():
    for n in range(1, 11):
        vs = [str(i) for i in range(n)]
        an = build(vs, [(str(i), str(i + 1), 3) for i in range(n - 1)])
        assert det_elim(gram(an)).as_scalar() == QQ(n + 1, 2**n)
        if n <= 6:
            assert det_cofactor(an).as_scalar() == QQ(n + 1, 2**n)


def test_det_oracles_agree_randomized():
    rng = random.Random(2024)
    for _ in range(120):
        D = _random_diagram(rng)
        a = det_elim(gram(D))
        assert a == det_cycles(D)
        if D.order <= 5:
            assert a == det_cofactor(D)


def test_block_property_and_inertia_additivity():
    rng = random.Random(7)
    for _ in range(20):
        A = _random_diagram(rng, max_order=3, rho_vars=0)
        B = _random_diagram(rng, max_order=3, rho_vars=0)
        Bm = B.relabel({v: f"w_{v}" for v in B.vertices})
        both = build(
            list(A.vertices) + list(Bm.vertices),
            [],
        )
        edges = dict(A.edges)
        edges.update(Bm.edges)
        from coxeterlab.diagram import CoxeterDiagram

        both = CoxeterDiagram(list(A.vertices) + list(Bm.vertices), edges)
        assert det_elim(gram(both)) == det_elim(gram(A)) * det_elim(gram(Bm))
        assert inertia(both).as_tuple() == (inertia(A) + inertia(Bm)).as_tuple()


def test_local_det_examples():
    a2 = build(["a", "b"], [("a", "b", 3)])
    q = local_det(a2, {"a"})
    assert q.as_poly().as_scalar() == QQ(3, 4)
    # det(S, S) = det(S) since det(empty) = 1
    tri = build(["a", "b", "c"], [("a", "b", 3), ("b", "c", 3), ("a", "c", 3)])
    assert local_det(tri, set(tri.vertices)) == det_elim(gram(tri))
    # A2 joined to a vertex by a label-3 edge: 3/4 * 1 - 1/4 = 1/2
    v = build(["z"], [])
    rhs = join_local_det(a2, "a", v, "z", QQ(1, 2))
    assert rhs == QQ(1, 2)
    joined = join_diagrams(a2, "a", v, "z", EdgeLabel.finite(3))
    assert local_det(joined, {"a", "z"}) == rhs


def test_join_formula_randomized():
    rng = random.Random(99)
    for _ in range(25):
        S1 = _random_diagram(rng, max_order=3, rho_vars=1)
        S2 = _random_diagram(rng, max_order=2, rho_vars=0)
        S2 = S2.relabel({v: f"y_{v}" for v in S2.vertices})
        v1, v2 = S1.vertices[0], S2.vertices[0]
        try:
            lhs_diagram = join_diagrams(S1, v1, S2, v2, EdgeLabel.finite(4))
            lhs = local_det(lhs_diagram, {v1, v2})
            rhs = join_local_det(S1, v1, S2, v2, RhoPoly.from_scalar(QQ(1, 2)) * sqrt2())
        except ZeroDivisionError:
            continue
        assert lhs == rhs


def test_inertia_examples():
    id3 = build(["a", "b", "c"], [])
    assert inertia(id3).as_tuple() == (3, 0, 0)
    dotted = build(["a", "b"], [("a", "b", ("rho", "r"))])
    assert inertia(dotted, {"r": QQ(3, 2)}).as_tuple() == (1, 1, 0)
    tri = build(["a", "b", "c"], [("a", "b", 7), ("b", "c", 3)])
    assert inertia(tri).as_tuple() == (2, 1, 0)
    assert inertia_via_charpoly(tri).as_tuple() == (2, 1, 0)


def test_inertia_requires_assignment():
    dotted = build(["a", "b"], [("a", "b", ("rho", "r"))])
    with pytest.raises(ValueError, match="unassigned"):
        inertia(dotted)
    with pytest.raises(ValueError, match="> 1"):
        inertia(dotted, {"r": QQ(1, 2)})


def test_inertia_routes_agree_randomized():
    rng = random.Random(31)
    for _ in range(30):
        D = _random_diagram(rng, max_order=5)
        assignment = {v: QQ(rng.randint(5, 12), 4) for v in D.dotted_vars()}
        a = inertia(D, assignment).as_tuple()
        b = inertia_via_charpoly(D, assignment).as_tuple()
        assert a == b
        if not D.dotted_vars() and not D.has_bold():
            assert fast_inertia(D).as_tuple() == a


def test_interlacing_under_subdiagrams():
    rng = random.Random(13)
    for _ in range(20):
        D = _random_diagram(rng, max_order=5, rho_vars=0)
        sig = inertia(D)
        for drop in D.vertices:
            sub = D.restrict([v for v in D.vertices if v != drop])
            sub_sig = inertia(sub)
            assert sub_sig.neg <= sig.neg
            assert sub_sig.pos <= sig.pos


def test_sylvester_parity():
    rng = random.Random(17)
    for _ in range(30):
        D = _random_diagram(rng, max_order=6, rho_vars=1)
        assignment = {v: QQ(rng.randint(5, 10), 4) for v in D.dotted_vars()}
        det = det_elim(gram(D)).substitute_all(assignment).as_scalar()
        sig = inertia(D, assignment)
        if sig.zero == 0:
            assert det.sign() == (-1) ** sig.neg
        else:
            assert det.is_zero()


def test_no_product_of_two_hyperbolic_inside_hyperbolic():
    # a disjoint pair of hyperbolic diagrams has negative index 2, so it can
    # never embed into a diagram with negative index 1
    rng = random.Random(23)
    from coxeterlab.diagram import CoxeterDiagram

    count = 0
    while count < 10:
        A = _random_diagram(rng, max_order=3, rho_vars=0)
        B = _random_diagram(rng, max_order=3, rho_vars=0)
        if inertia(A).neg != 1 or inertia(B).neg != 1:
            continue
        Bm = B.relabel({v: f"w_{v}" for v in B.vertices})
        edges = dict(A.edges)
        edges.update(Bm.edges)
        both = CoxeterDiagram(list(A.vertices) + list(Bm.vertices), edges)
        assert inertia(both).neg >= 2
        count += 1


def test_det_cycles_order_cap():
    import pytest as _pytest

    vs = [f"v{i}" for i in range(10)]
    big = build(vs, [(vs[i], vs[i + 1], 3) for i in range(9)])
    with _pytest.raises(ValueError, match="capped"):
        det_cycles(big)


def test_gram_determinant_degree_bound():
    # each dotted variable appears in one symmetric entry pair, so the
    # determinant has degree <= 2 in it
    rng = random.Random(71)
    for _ in range(15):
        D = _random_diagram(rng, max_order=5, rho_vars=2)
        det = det_elim(gram(D))
        for var in D.dotted_vars():
            assert det.degree_in(var) <= 2
