"""Unit tests for the distance functions, checked against sampling oracles."""

import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fdikit import (
    Box,
    FuzzyNumber,
    FuzzyVector,
    Tfn,
    as_fuzzy,
    d_fuzzy_vec,
    d_levelwise,
    d_membership,
    dist_rn,
    hausdorff_box,
    hausdorff_interval,
)

from conftest import rand_fuzzy_levels


@st.composite
def fuzzy_numbers(draw):
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return FuzzyNumber.from_levels(rand_fuzzy_levels(np.random.default_rng(seed)))


def sampled_hausdorff(a_pts: np.ndarray, b_pts: np.ndarray) -> float:
    """Brute-force sup-inf Hausdorff under the coordinate-sum distance.

    Biased in both directions by grid spacing: the outer sup undershoots,
    the inner inf over a finite subset overshoots.
    """
    d = np.abs(a_pts[:, None, :] - b_pts[None, :, :]).sum(axis=2)
    return max(d.min(axis=1).max(), d.min(axis=0).max())


def sampled_hausdorff_lower(a_pts, b_box, b_pts, a_box) -> float:
    """Guaranteed lower bound: dense outer samples, exact point-to-box inf."""
    def directed(pts, box):
        gaps = np.maximum(0.0, np.maximum(box.lo - pts, pts - box.hi)).sum(axis=1)
        return gaps.max()
    return max(directed(a_pts, b_box), directed(b_pts, a_box))


def box_grid(lo, hi, per_axis=12) -> np.ndarray:
    axes = [np.linspace(l, h, per_axis) for l, h in zip(np.atleast_1d(lo), np.atleast_1d(hi))]
    return np.array(list(itertools.product(*axes)))


# -- crisp distance ---------------------------------------------------------------

def test_dist_rn_zero():
    assert dist_rn([0, 0], [0, 0]) == 0.0


def test_dist_rn_sum_of_gaps():
    assert dist_rn([1, 2], [3, 5]) == 5.0


def test_dist_rn_scalar_case():
    assert dist_rn([1], [4]) == 3.0


def test_dist_rn_dimension_mismatch():
    with pytest.raises(ValueError):
        dist_rn([1, 2], [1, 2, 3])


# -- interval Hausdorff -------------------------------------------------------------

def test_hausdorff_interval_equal():
    assert hausdorff_interval((2, 4), (2, 4)) == 0.0


def test_hausdorff_interval_endpoint_form():
    got = hausdorff_interval((2, 4), (3.5, 6.5))
    assert got == pytest.approx(2.5, abs=1e-12)
    oracle = sampled_hausdorff(np.linspace(2, 4, 2001)[:, None],
                               np.linspace(3.5, 6.5, 2001)[:, None])
    assert got == pytest.approx(oracle, abs=2e-3)


def test_hausdorff_interval_point_set():
    got = hausdorff_interval((0, 1), (5, 5))
    assert got == 5.0
    oracle = sampled_hausdorff(np.linspace(0, 1, 2001)[:, None],
                               np.array([[5.0]]))
    assert got == pytest.approx(oracle, abs=2e-3)


def test_hausdorff_interval_rejects_empty():
    with pytest.raises(ValueError):
        hausdorff_interval((3, 2), (0, 1))


# -- box Hausdorff --------------------------------------------------------------------

def test_hausdorff_box_identity():
    a = Box([0, 0], [1, 1])
    assert hausdorff_box(a, a) == 0.0


def test_hausdorff_box_shifted_square():
    got = hausdorff_box(Box([0, 0], [1, 1]), Box([2, 0], [3, 1]))
    assert got == pytest.approx(2.0, abs=1e-12)


def test_hausdorff_box_point_inside():
    got = hausdorff_box(Box([0, 0], [2, 2]), Box([1, 1], [1, 1]))
    assert got == pytest.approx(2.0, abs=1e-12)


def test_hausdorff_box_dimension_mismatch():
    with pytest.raises(ValueError):
        hausdorff_box(Box([0], [1]), Box([0, 0], [1, 1]))


def test_hausdorff_box_matches_sampled_sup_inf():
    # oracle equivalence on random boxes, including ones where the two
    # directed separations disagree coordinate-by-coordinate
    rng = np.random.default_rng(7)
    for _ in range(40):
        n = int(rng.integers(1, 4))
        alo = rng.uniform(-2, 2, n)
        ahi = alo + rng.uniform(0, 2, n)
        blo = rng.uniform(-2, 2, n)
        bhi = blo + rng.uniform(0, 2, n)
        a, b = Box(alo, ahi), Box(blo, bhi)
        got = hausdorff_box(a, b)
        a_grid, b_grid = box_grid(alo, ahi), box_grid(blo, bhi)
        estimate = sampled_hausdorff(a_grid, b_grid)
        assert got == pytest.approx(estimate, abs=0.25 * n), (alo, ahi, blo, bhi)
        lower = sampled_hausdorff_lower(a_grid, b, b_grid, a)
        assert lower - 1e-12 <= got <= lower + 0.25 * n


def test_hausdorff_box_directed_mismatch_case():
    # coordinate-wise max directions differ; the metric is the max of the
    # two directed sums (1), not the sum of per-coordinate maxima (2)
    a = Box([0, 0], [1, 2])
    b = Box([0, 0], [2, 1])
    got = hausdorff_box(a, b)
    assert got == pytest.approx(1.0, abs=1e-12)
    oracle = sampled_hausdorff(box_grid(a.lo, a.hi, 41), box_grid(b.lo, b.hi, 41))
    assert got == pytest.approx(oracle, abs=0.1)


# -- membership-sup metric ---------------------------------------------------------------

def test_d_membership_disjoint_core_value():
    assert d_membership(Tfn(2, 3, 4), Tfn(3.5, 4.5, 6.5)) == pytest.approx(1.0, abs=1e-12)


def test_d_membership_overlapping_value():
    assert d_membership(Tfn(2, 3, 4), Tfn(0, 3, 8)) == pytest.approx(0.8, abs=1e-12)


def test_d_membership_identity():
    x = Tfn(2, 3, 4)
    assert d_membership(x, x) == 0.0


def test_d_membership_crisp_points():
    assert d_membership(Tfn(0, 0, 0), Tfn(2, 2, 2)) == 1.0


def test_d_membership_grid_search_oracle():
    # dense pointwise scan can only undershoot the breakpoint-exact sup
    rng = np.random.default_rng(3)
    for _ in range(25):
        x = FuzzyNumber.from_levels(rand_fuzzy_levels(rng))
        y = FuzzyNumber.from_levels(rand_fuzzy_levels(rng))
        got = d_membership(x, y)
        ps = np.linspace(min(x.lo[0], y.lo[0]) - 0.5,
                         max(x.hi[0], y.hi[0]) + 0.5, 4001)
        oracle = max(abs(x.membership(p) - y.membership(p)) for p in ps)
        assert got >= oracle - 1e-9
        assert got <= oracle + 0.05


@given(fuzzy_numbers(), fuzzy_numbers())
def test_d_membership_bounded(x, y):
    d = d_membership(x, y)
    assert 0.0 <= d <= 1.0


def test_d_membership_one_when_core_outside_support():
    rng = np.random.default_rng(11)
    for _ in range(20):
        x = FuzzyNumber.from_levels(rand_fuzzy_levels(rng))
        shift = x.hi[0] - x.lo[-1] + rng.uniform(0.1, 2.0)
        y = FuzzyNumber(x.alphas, x.lo + shift, x.hi + shift)
        assert d_membership(x, y) == pytest.approx(1.0, abs=1e-12)


# -- level-wise metric ----------------------------------------------------------------------

def test_d_levelwise_identity():
    x = Tfn(2, 3, 4)
    assert d_levelwise(x, x) == 0.0


def test_d_levelwise_value_and_fine_grid_oracle():
    got = d_levelwise(Tfn(2, 3, 4), Tfn(3.5, 4.5, 6.5))
    assert got == pytest.approx(2.5, abs=1e-12)
    x, y = as_fuzzy(Tfn(2, 3, 4)), as_fuzzy(Tfn(3.5, 4.5, 6.5))
    oracle = 0.0
    for a in np.linspace(0, 1, 2001):
        oracle = max(oracle, hausdorff_interval(x.cut(a), y.cut(a)))
    assert got == pytest.approx(oracle, abs=1e-9)


def test_d_levelwise_crisp_distance():
    assert d_levelwise(Tfn(0, 0, 0), Tfn(3, 3, 3)) == 3.0


@given(fuzzy_numbers(), fuzzy_numbers())
def test_d_levelwise_dominates_support_gap(x, y):
    assert d_levelwise(x, y) >= hausdorff_interval(x.support, y.support) - 1e-12


# -- metric axioms ------------------------------------------------------------------------------

@pytest.mark.parametrize("metric", [d_membership, d_levelwise])
def test_metric_axioms(metric):
    rng = np.random.default_rng(5)
    for _ in range(30):
        x = FuzzyNumber.from_levels(rand_fuzzy_levels(rng))
        y = FuzzyNumber.from_levels(rand_fuzzy_levels(rng))
        z = FuzzyNumber.from_levels(rand_fuzzy_levels(rng))
        assert metric(x, y) >= 0.0
        assert metric(x, x) == 0.0
        assert metric(x, y) == pytest.approx(metric(y, x), abs=1e-12)
        assert metric(x, z) <= metric(x, y) + metric(y, z) + 1e-9


# -- vector metric ------------------------------------------------------------------------------

def test_d_fuzzy_vec_identity():
    v = FuzzyVector([as_fuzzy(Tfn(1, 2, 3)), as_fuzzy(Tfn(0, 1, 2))])
    assert d_fuzzy_vec(v, v, "membership") == 0.0
    assert d_fuzzy_vec(v, v, "levelwise") == 0.0


def test_d_fuzzy_vec_sums_components():
    x = FuzzyVector([as_fuzzy(Tfn(2, 3, 4)), as_fuzzy(Tfn(2, 3, 4))])
    y = FuzzyVector([as_fuzzy(Tfn(3.5, 4.5, 6.5)), as_fuzzy(Tfn(0, 3, 8))])
    assert d_fuzzy_vec(x, y, "membership") == pytest.approx(1.8, abs=1e-12)


def test_d_fuzzy_vec_scalar_reduction():
    x = FuzzyVector([as_fuzzy(Tfn(2, 3, 4))])
    y = FuzzyVector([as_fuzzy(Tfn(0, 3, 8))])
    assert d_fuzzy_vec(x, y, "membership") == d_membership(Tfn(2, 3, 4), Tfn(0, 3, 8))


def test_d_fuzzy_vec_dimension_mismatch():
    x = FuzzyVector([as_fuzzy(Tfn(2, 3, 4))])
    y = FuzzyVector([as_fuzzy(Tfn(2, 3, 4)), as_fuzzy(Tfn(2, 3, 4))])
    with pytest.raises(ValueError):
        d_fuzzy_vec(x, y)


def test_d_fuzzy_vec_unknown_metric():
    x = FuzzyVector([as_fuzzy(Tfn(2, 3, 4))])
    with pytest.raises(ValueError):
        d_fuzzy_vec(x, x, "hausdorff")
