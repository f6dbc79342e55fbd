"""Face-count bound arithmetic."""

from __future__ import annotations

import pytest

from coxeterlab.nikulin import A_coeff, mean_polygon_bound, three_free_contradiction
from coxeterlab.rationals import QQ


def test_A_examples():
    assert A_coeff(13, 1, 2) == QQ(13, 3)
    assert A_coeff(4, 1, 2) == 6
    assert A_coeff(6, 0, 3) > 0  # evaluates without error
    with pytest.raises(ValueError):
        A_coeff(5, 2, 2)
    with pytest.raises(ValueError):
        A_coeff(4, 1, 3)


def test_mean_polygon_bound():
    assert mean_polygon_bound(13) == QQ(13, 3)
    assert mean_polygon_bound(3) == 6
    assert mean_polygon_bound(4) == 6
    for d in range(4, 30):
        assert mean_polygon_bound(d) == A_coeff(d, 1, 2)
    with pytest.raises(ValueError):
        mean_polygon_bound(2)


def test_A_even_split_symmetry():
    # for even d the ceil/floor halves coincide, so the two binomial
    # averages are literally the same number
    from math import comb

    for d in range(4, 30, 2):
        hi, lo = (d + 1) // 2, d // 2
        assert hi == lo
        for k in range(1, d // 2 + 1):
            for i in range(0, k):
                assert A_coeff(d, i, k) == QQ(comb(d - i, k - i)) * QQ(
                    2 * comb(lo, i), 2 * comb(lo, k)
                )


def test_three_free_contradiction():
    r13 = three_free_contradiction(13)
    assert r13.contradiction
    assert r13.lower_coeff == 12 and r13.upper_coeff == 12
    assert r13.lower_strict and not r13.upper_strict
    assert not three_free_contradiction(12).contradiction
    for d in range(13, 30):
        assert three_free_contradiction(d).contradiction, d
    # gap is monotone over the theorem's range
    gaps = [
        three_free_contradiction(d).lower_coeff - three_free_contradiction(d).upper_coeff
        for d in range(13, 30)
    ]
    assert all(b >= a for a, b in zip(gaps, gaps[1:]))
    with pytest.raises(ValueError):
        three_free_contradiction(2)
    with pytest.raises(ValueError):
        three_free_contradiction(30)
