"""Superhyperbolicity machinery: the triangle local-determinant function d,
the join discriminant D, positivity certificates on the ray rho > 1, and the
sign/parity certificate for parametric families with dotted edges.

The parity argument: if det(S) > 0 for every assignment of the dotted
variables > 1, the Gram matrix is nonsingular there and sign(det) = (-1)^n-
forces n- even; one Lanner subdiagram forces n- >= 1; hence n- >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .diagram import CoxeterDiagram, DOTTED_SYM
from .rationals import QQ, as_rational
from .rhopoly import RhoPoly
from .scalars import SCALAR_FIELD, Scalar, cos_pi_over, lcm_level, scalar_sign
from .spectra import det_elim, gram
from .taxonomy import scan_subdiagrams
from . import univar


class DomainError(ValueError):
    pass


def d_func(k: int, l: int, m: int) -> Scalar:
    """Minus the local determinant of a (k,l,m) triangle on the vertex joining
    the k and l edges: (cos^2(pi/k) + cos^2(pi/l) + 2cos cos cos(pi/m)) /
    sin^2(pi/m) - 1."""
    for label in (k, l, m):
        if not isinstance(label, int) or label < 2:
            raise DomainError(f"labels must be integers >= 2, got {label!r}")
    level = lcm_level([2, k, l, m])
    ck = cos_pi_over(k, level)
    cl = cos_pi_over(l, level)
    cm = cos_pi_over(m, level)
    sin2 = 1 - cm * cm
    if sin2.is_zero():
        raise DomainError("m must be finite and >= 2")
    return (ck * ck + cl * cl + ck * cl * cm * 2) / sin2 - 1


def D_func(k: int, l: int, m: int, kp: int, lp: int, mp: int) -> Scalar:
    """Join discriminant: (cos(pi/l') + cos(pi/k'))^2 -
    sin^2(pi/l') cos^2(pi/m') / d(k,l,m).  Nonnegative iff the six-vertex
    family stays superhyperbolic for every rho > 1."""
    d = d_func(k, l, m)
    if d.is_zero():
        raise DomainError(f"d({k},{l},{m}) = 0; the discriminant is undefined")
    level = lcm_level([2, kp, lp, mp])
    ckp = cos_pi_over(kp, level)
    clp = cos_pi_over(lp, level)
    cmp_ = cos_pi_over(mp, level)
    s = clp + ckp
    return s * s - (1 - clp * clp) * cmp_ * cmp_ / d


# -- positivity certificates ---------------------------------------------------


@dataclass(frozen=True)
class ShiftPositive:
    """All coefficients after rho := 1 + t are >= 0 with at least one > 0,
    which makes the polynomial strictly positive for every rho > 1."""

    shifted: RhoPoly

    @property
    def kind(self) -> str:
        return "shift_positive"

    @property
    def is_positive(self) -> bool:
        return True


@dataclass(frozen=True)
class SturmWitness:
    """Univariate: no roots in (1, oo) and positive leading behavior."""

    var: str
    roots_beyond_one: int
    leading_sign: int

    @property
    def kind(self) -> str:
        return "sturm"

    @property
    def is_positive(self) -> bool:
        return self.roots_beyond_one == 0 and self.leading_sign > 0


@dataclass(frozen=True)
class Failed:
    counterexample: Optional[dict]
    incomplete: bool = False

    @property
    def kind(self) -> str:
        return "failed"

    @property
    def is_positive(self) -> bool:
        return False


PositivityCertificate = ShiftPositive | SturmWitness | Failed


def _grid_counterexample(p: RhoPoly) -> Optional[dict]:
    grid = [QQ(9, 8), QQ(3, 2), QQ(2), QQ(3), QQ(4)]
    vars_ = p.vars

    def rec(i, acc):
        if i == len(vars_):
            val = p.substitute_all(acc).as_scalar()
            if val.sign() <= 0:
                return dict(acc)
            return None
        for g in grid:
            acc[vars_[i]] = g
            hit = rec(i + 1, acc)
            if hit is not None:
                return hit
        del acc[vars_[i]]
        return None

    return rec(0, {})


def positive_on_ray(p: RhoPoly) -> PositivityCertificate:
    """Certify p > 0 for all assignments of its variables in (1, oo).

    Shift certificate first (sound for any number of variables); exact Sturm
    on (1, oo) for univariate polynomials; otherwise Failed, with a grid
    counterexample when one exists and an explicit incomplete marker when
    not.
    """
    if p.is_zero():
        return Failed(counterexample={v: QQ(2) for v in p.vars} or {}, incomplete=False)
    shifted = p.shift_vars()
    if all(c.sign() > 0 for c in shifted.coefficients()):
        return ShiftPositive(shifted)
    if len(p.vars) == 1:
        var = p.vars[0]
        coeffs = p.univariate_coeffs(var)
        roots = univar.count_roots_open(coeffs, SCALAR_FIELD, a=1, b=None)
        lead = coeffs[-1].sign()
        wit = SturmWitness(var=var, roots_beyond_one=roots, leading_sign=lead)
        if wit.is_positive:
            return wit
        return Failed(counterexample=_grid_counterexample(p), incomplete=False)
    hit = _grid_counterexample(p)
    if hit is not None:
        return Failed(counterexample=hit, incomplete=False)
    return Failed(counterexample=None, incomplete=True)


# -- superhyperbolicity verdicts -------------------------------------------------


@dataclass(frozen=True)
class SuperhyperbolicVerdict:
    holds_for_all_rho: bool
    status: str  # 'superhyperbolic' | 'unknown' | 'inapplicable'
    determinant: Optional[RhoPoly] = None
    certificate: Optional[PositivityCertificate] = None
    lanner_witness: Optional[frozenset] = None
    subset: Optional[tuple] = None  # certifying subdiagram, when not the whole

    def summary(self) -> dict:
        out = {"status": self.status}
        if self.determinant is not None:
            out["determinant"] = str(self.determinant)
        if self.certificate is not None:
            out["certificate"] = self.certificate.kind
        if self.lanner_witness is not None:
            out["lanner_witness"] = sorted(self.lanner_witness)
        if self.subset is not None:
            out["subset"] = sorted(self.subset)
        return out


class InapplicableError(ValueError):
    pass


def certify_superhyperbolic_family(D: CoxeterDiagram) -> SuperhyperbolicVerdict:
    """Direct certificate on D: positive determinant for all rho > 1 plus a
    Lanner witness force n- >= 2 at every assignment."""
    witnesses = scan_subdiagrams(D, "lanner")
    if not witnesses:
        return SuperhyperbolicVerdict(False, "inapplicable")
    det = det_elim(gram(D))
    cert = positive_on_ray(det)
    if cert.is_positive:
        return SuperhyperbolicVerdict(
            True,
            "superhyperbolic",
            determinant=det,
            certificate=cert,
            lanner_witness=witnesses[0],
        )
    return SuperhyperbolicVerdict(
        False, "unknown", determinant=det, certificate=cert, lanner_witness=witnesses[0]
    )


def certify_superhyperbolic_any(D: CoxeterDiagram) -> SuperhyperbolicVerdict:
    """Try the direct certificate on D and then on its subdiagrams (largest
    first); a superhyperbolic subdiagram makes the whole diagram
    superhyperbolic by eigenvalue interlacing."""
    whole = certify_superhyperbolic_family(D)
    if whole.holds_for_all_rho or whole.status == "inapplicable":
        return whole
    names = list(D.vertices)
    for size in range(D.order - 1, 2, -1):
        for subset in combinations(names, size):
            sub = D.restrict(subset)
            verdict = certify_superhyperbolic_family(sub)
            if verdict.holds_for_all_rho:
                return SuperhyperbolicVerdict(
                    True,
                    "superhyperbolic",
                    determinant=verdict.determinant,
                    certificate=verdict.certificate,
                    lanner_witness=verdict.lanner_witness,
                    subset=subset,
                )
    return whole


def dotted_leaf_test(D: CoxeterDiagram, w: str, v: str) -> SuperhyperbolicVerdict:
    """Dotted-leaf criterion: v hangs off w by a single symbolic dotted edge
    and S = D minus {v, w} contains a hyperbolic subdiagram; then
    det(<w,S>) - det(S) > 0 certifies <v,w,S> superhyperbolic.

    Also verifies the expansion identity
    det(<v,w,S>) = det(<w,S>) - rho^2 det(S) exactly.
    """
    v_edges = [(pair, lab) for pair, lab in D.edges.items() if v in pair]
    if len(v_edges) != 1:
        raise InapplicableError(f"{v} must have exactly one edge, found {len(v_edges)}")
    (pair, lab) = v_edges[0]
    if set(pair) != {v, w} or lab.kind != DOTTED_SYM:
        raise InapplicableError(f"{v} must be dotted to {w} by a symbolic edge")
    rho = RhoPoly.var(lab.var)
    s_names = [x for x in D.vertices if x not in (v, w)]
    S = D.restrict(s_names)
    if not scan_subdiagrams(S, "lanner"):
        raise InapplicableError("the remainder S carries no hyperbolic (Lanner) subdiagram")
    det_ws = det_elim(gram(D.restrict(s_names + [w])))
    det_s = det_elim(gram(S))
    identity_lhs = det_elim(gram(D))
    if identity_lhs != det_ws - rho * rho * det_s:
        raise AssertionError("dotted-leaf determinant identity failed")
    delta = det_ws - det_s
    cert = positive_on_ray(delta)
    status = "superhyperbolic" if cert.is_positive else "unknown"
    return SuperhyperbolicVerdict(
        cert.is_positive,
        status,
        determinant=delta,
        certificate=cert,
        lanner_witness=scan_subdiagrams(S, "lanner")[0],
    )


# -- the named inline identities of the case analysis ----------------------------


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    computed: RhoPoly
    expected: RhoPoly
    matches: bool
    certificate: PositivityCertificate


def case_identity_checks() -> list[IdentityCheck]:
    """Recompute the three inline case determinants symbolically and compare
    them, coefficient-exactly, against their closed forms."""
    from . import fixtures

    out = []
    for name, diagram, expected in fixtures.case_inline_identities():
        computed = det_elim(gram(diagram))
        out.append(
            IdentityCheck(
                name=name,
                computed=computed,
                expected=expected,
                matches=computed == expected,
                certificate=positive_on_ray(computed),
            )
        )
    return out
