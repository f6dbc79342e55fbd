"""Face-count bound arithmetic for polytopes with no short Lanner subdiagrams.

Everything is exact rational arithmetic, symbolic in the vertex count a0.
The d = 13 case is an equality-versus-strict contradiction, so strictness is
tracked explicitly through the chain instead of being rounded away.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .rationals import QQ, rat_str


def A_coeff(d: int, i: int, k: int) -> QQ:
    """The binomial face-average bound A_d^(i,k)."""
    if not (0 <= i < k <= d // 2):
        raise ValueError(f"need 0 <= i < k <= floor(d/2), got i={i}, k={k}, d={d}")
    hi = (d + 1) // 2  # ceil(d/2)
    lo = d // 2
    num = comb(hi, i) + comb(lo, i)
    den = comb(hi, k) + comb(lo, k)
    return QQ(comb(d - i, k - i)) * QQ(num, den)


def mean_polygon_bound(d: int) -> QQ:
    """Strict upper bound for the mean edge count of 2-faces of a simple
    d-polytope: 4(d-1)/(d-2) for even d, 4d/(d-1) for odd d."""
    if d < 3:
        raise ValueError("dimension must be >= 3")
    if d % 2 == 0:
        value = QQ(4 * (d - 1), d - 2)
    else:
        value = QQ(4 * d, d - 1)
    if d >= 4:  # k = 2 <= floor(d/2) holds, so the general formula applies
        general = A_coeff(d, 1, 2)
        if value != general:
            raise AssertionError(f"closed form disagrees with the general formula at d={d}")
    return value


@dataclass(frozen=True)
class FaceBoundReport:
    d: int
    a_bound: QQ  # A_d^(1,2)
    quad_share: QQ  # a_{2,4} > quad_share * a_2 (2/3, from the no-triangles step)
    lower_coeff: QQ  # a_{2,4} > lower_coeff * a0   (strict)
    lower_strict: bool
    upper_coeff: QQ  # a_{2,4} <= upper_coeff * a0
    upper_strict: bool
    contradiction: bool

    def summary(self) -> dict:
        return {
            "d": self.d,
            "mean_polygon_bound": rat_str(self.a_bound),
            "lower": f"a_24 > {rat_str(self.lower_coeff)}*a0",
            "upper": f"a_24 <= {rat_str(self.upper_coeff)}*a0",
            "contradiction": self.contradiction,
        }


def three_free_contradiction(d: int) -> FaceBoundReport:
    """The counting contradiction for diagrams with no Lanner subdiagram of
    order >= 3: with no triangular 2-faces, a_{2,4} > (2/3) a_2 >
    (2/3) C(d,2) a0 / A_d^(1,2), which exceeds the per-vertex budget
    a0 (d - 1) once d >= 13 (equality with the strict side at d = 13).

    Evaluable on 3 <= d <= 29 (no compact Coxeter polytopes beyond 29).
    """
    if not (3 <= d <= 29):
        raise ValueError("dimension must be in 3..29")
    bound = mean_polygon_bound(d)
    quad_share = QQ(2, 3)
    # a_2 > C(d,2) a0 / bound (strict mean bound), carried strictly
    lower = quad_share * QQ(comb(d, 2)) / bound
    upper = QQ(d - 1)
    contradiction = lower > upper or lower == upper  # the lower side is strict
    return FaceBoundReport(
        d=d,
        a_bound=bound,
        quad_share=quad_share,
        lower_coeff=lower,
        lower_strict=True,
        upper_coeff=upper,
        upper_strict=False,
        contradiction=contradiction,
    )
