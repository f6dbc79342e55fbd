"""The superhyperbolicity machinery against the closed forms."""

from __future__ import annotations

import math
import random

import pytest

from coxeterlab import fixtures
from coxeterlab.certify import (
    D_func,
    DomainError,
    Failed,
    InapplicableError,
    ShiftPositive,
    SturmWitness,
    case_identity_checks,
    certify_superhyperbolic_any,
    certify_superhyperbolic_family,
    d_func,
    dotted_leaf_test,
    positive_on_ray,
)
from coxeterlab.diagram import build
from coxeterlab.rationals import QQ
from coxeterlab.rhopoly import RhoPoly
from coxeterlab.scalars import sqrt2
from coxeterlab.spectra import det_cofactor, det_elim, gram, local_det
from coxeterlab.taxonomy import triangle_diagram


def test_d_examples():
    d237 = d_func(2, 3, 7)
    assert d237.sign() == 1
    assert abs(d237.to_float() - 0.32798527760568286) < 1e-12
    assert d_func(2, 3, 6).is_zero()  # parabolic boundary
    assert d_func(2, 2, 5) == -1  # both cosines vanish
    assert d_func(3, 4, 3) == sqrt2() / 3


def test_d_matches_marked_local_determinant():
    for k in range(2, 9):
        for l in range(2, 9):
            for m in range(2, 9):
                tri = triangle_diagram(k, l, m)
                q = local_det(tri, {"u3"})
                assert q.as_poly().as_scalar() == -d_func(k, l, m), (k, l, m)


def test_D_examples():
    # m' = 2 kills the second term
    val = D_func(2, 3, 7, 4, 5, 2)
    from coxeterlab.scalars import cos_pi_over, lcm_level

    L = lcm_level([4, 5])
    s = cos_pi_over(5, L) + cos_pi_over(4, L)
    assert val == s * s
    with pytest.raises(DomainError):
        D_func(2, 3, 6, 3, 3, 3)  # d = 0
    for tup in fixtures.FORM1_TUPLES:
        assert D_func(*tup).sign() >= 0, tup


def test_D_monotone_spot_check():
    rng = random.Random(77)
    seen = 0
    while seen < 20:
        k, l = rng.choice([2, 3, 4]), rng.choice([3, 4, 5])
        m = rng.choice([3, 4, 5, 6, 7])
        lp, mp = rng.choice([2, 3, 4]), rng.choice([3, 4])
        if d_func(k, l, m).sign() <= 0:
            continue
        lo = D_func(k, l, m, 3, lp, mp)
        hi = D_func(k, l, m, 4, lp, mp)
        assert (hi - lo).sign() >= 0
        seen += 1


def test_positive_on_ray_examples():
    r = RhoPoly.var("r")
    cert = positive_on_ray(r**2 - 1)
    assert isinstance(cert, ShiftPositive) and cert.is_positive
    delta_a = fixtures.corollary_case("a").expected_delta
    cert = positive_on_ray(delta_a)
    assert isinstance(cert, ShiftPositive)
    s1 = fixtures.s_expected(1)
    assert positive_on_ray(s1).is_positive
    # a polynomial that fails: 1 - r^2 is negative beyond 1
    cert = positive_on_ray(1 - r**2)
    assert isinstance(cert, Failed) and cert.counterexample is not None


def test_positive_on_ray_sturm_route():
    # the D-case delta needs the Sturm fallback: its shift has a negative
    # linear coefficient but the quadratic has no real roots at all
    delta_d = fixtures.corollary_case("d").expected_delta
    cert = positive_on_ray(delta_d)
    assert isinstance(cert, SturmWitness)
    assert cert.is_positive


def test_shift_positive_never_contradicts_sampling():
    polys = [fixtures.s_expected(i) for i in range(1, 8)]
    polys += [fixtures.corollary_case(n).expected_delta for n in fixtures.CASE_NAMES]
    grid = [QQ(9, 8), QQ(3, 2), QQ(2), QQ(3), QQ(4)]
    for p in polys:
        for val in grid:
            out = p
            for v in p.vars:
                out = out.substitute(v, val)
            assert out.as_scalar().sign() == 1, (str(p), val)


def test_s_formulas_exact_and_certified():
    for i in range(1, 8):
        det = det_elim(gram(fixtures.s_diagram(i)))
        assert det == fixtures.s_expected(i), f"S{i}"
        assert positive_on_ray(det).is_positive, f"S{i}"
        verdict = certify_superhyperbolic_family(fixtures.s_diagram(i))
        assert verdict.holds_for_all_rho, f"S{i}"


def test_uvw_formulas_exact_and_certified():
    for name in ("u", "v", "w"):
        det = det_elim(gram(fixtures.uvw_diagram(name)))
        assert det == fixtures.uvw_expected(name), name
        assert certify_superhyperbolic_family(fixtures.uvw_diagram(name)).holds_for_all_rho


def test_corollary_deltas_exact_and_leaf_test():
    for name in fixtures.CASE_NAMES:
        case = fixtures.corollary_case(name)
        det_ws = det_elim(gram(case.diagram.restrict(list(case.core) + [case.w])))
        det_s = det_elim(gram(case.diagram.restrict(case.core)))
        assert det_ws - det_s == case.expected_delta, name
        verdict = dotted_leaf_test(case.diagram, case.w, case.v)
        assert verdict.holds_for_all_rho, name


def test_dotted_leaf_identity_numeric_base():
    # S is a numeric dotted pair; the expansion identity is cross-checked
    # against the cofactor oracle
    D = build(
        ["p", "q", "w", "v"],
        [("p", "q", QQ(3, 2)), ("w", "p", 3), ("v", "w", ("rho", "r"))],
    )
    verdict = dotted_leaf_test(D, "w", "v")
    det = det_elim(gram(D))
    assert det == det_cofactor(D)
    assert verdict.status in ("superhyperbolic", "unknown")


def test_dotted_leaf_precondition_errors():
    D = build(["a", "b", "c"], [("a", "b", ("rho", "r")), ("b", "c", 3)])
    with pytest.raises(InapplicableError):
        dotted_leaf_test(D, "c", "a")  # a is dotted to b, not to c
    no_hyp = build(["a", "b", "w", "v"], [("a", "b", 3), ("w", "a", 3), ("v", "w", ("rho", "r"))])
    with pytest.raises(InapplicableError, match="Lanner"):
        dotted_leaf_test(no_hyp, "w", "v")


def test_case_identity_checks():
    checks = case_identity_checks()
    assert [c.name for c in checks] == ["case_d_sub", "case_e_sub_3", "case_e_sub_4"]
    for chk in checks:
        assert chk.matches, chk.name
        assert chk.certificate.is_positive, chk.name


def test_certify_inapplicable_cases():
    lone = build(["a", "b"], [("a", "b", ("rho", "r"))])
    verdict = certify_superhyperbolic_family(lone)
    # a single dotted edge is hyperbolic, never superhyperbolic
    assert not verdict.holds_for_all_rho
    elliptic = build(["a", "b"], [("a", "b", 3)])
    assert certify_superhyperbolic_family(elliptic).status == "inapplicable"


def test_certify_any_finds_subdiagrams():
    # disconnected pair of dotted edges: certified directly
    pair = build(["a", "b", "c", "d"], [("a", "b", ("rho", "r1")), ("c", "d", ("rho", "r2"))])
    assert certify_superhyperbolic_any(pair).holds_for_all_rho
    # case-B family member: certified through a 7-vertex subdiagram
    name, D = fixtures.case_b_family()[0]
    verdict = certify_superhyperbolic_any(D)
    assert verdict.holds_for_all_rho
    assert verdict.subset is not None


def test_parity_rule_on_random_numeric_diagrams():
    rng = random.Random(8)
    from coxeterlab.spectra import inertia

    for _ in range(25):
        n = rng.randint(2, 7)
        vs = [f"v{i}" for i in range(n)]
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                lab = rng.choice([0, 0, 3, 3, 4, 5])
                if lab:
                    edges.append((vs[i], vs[j], lab))
        D = build(vs, edges)
        det = det_elim(gram(D)).as_scalar()
        sig = inertia(D)
        if sig.zero == 0:
            assert det.sign() == (-1) ** sig.neg
