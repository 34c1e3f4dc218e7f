"""Distances on crisp vectors, boxes, and fuzzy numbers.

The ground distance on R^N is the coordinate-wise sum of absolute
differences; box and fuzzy distances build on it.  Two distinct fuzzy
metrics are provided: the membership-sup distance (bounded by 1) and the
level-wise sup of Hausdorff cut distances (unbounded).  They are not the
same functional and are never substituted for one another.
"""

from __future__ import annotations

import numpy as np

from .fuzzy_num import FuzzyNumber, FuzzyVector, as_fuzzy


def dist_rn(z1, z2) -> float:
    """Distance on R^N: sum over coordinates of absolute differences."""
    z1 = np.atleast_1d(np.asarray(z1, dtype=float))
    z2 = np.atleast_1d(np.asarray(z2, dtype=float))
    if z1.shape != z2.shape:
        raise ValueError(f"dimension mismatch: {z1.shape} vs {z2.shape}")
    return float(np.sum(np.abs(z1 - z2)))


def hausdorff_interval(a, b) -> float:
    """Hausdorff distance between closed intervals: max endpoint gap."""
    (alo, ahi), (blo, bhi) = a, b
    if alo > ahi or blo > bhi:
        raise ValueError("intervals must be nonempty (lo <= hi)")
    return max(abs(alo - blo), abs(ahi - bhi))


class Box:
    """Axis-aligned box in R^N given by per-coordinate closed intervals."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        lo = np.atleast_1d(np.asarray(lo, dtype=float))
        hi = np.atleast_1d(np.asarray(hi, dtype=float))
        if lo.shape != hi.shape or lo.ndim != 1:
            raise ValueError("lo and hi must be equally long vectors")
        if np.any(lo > hi):
            raise ValueError("box needs lo <= hi in every coordinate")
        lo.setflags(write=False)
        hi.setflags(write=False)
        self.lo = lo
        self.hi = hi

    @property
    def n(self) -> int:
        return self.lo.size

    def __repr__(self):
        return f"Box(lo={self.lo.tolist()}, hi={self.hi.tolist()})"


def _directed_box_sep(a: Box, b: Box) -> float:
    # sup over points of a of their sum-distance to b; the inner distance
    # separates per coordinate and each 1-D sup sits at an endpoint.
    from_lo = np.maximum(0.0, np.maximum(b.lo - a.lo, a.lo - b.hi))
    from_hi = np.maximum(0.0, np.maximum(b.lo - a.hi, a.hi - b.hi))
    return float(np.sum(np.maximum(from_lo, from_hi)))


def hausdorff_box(a: Box, b: Box) -> float:
    """Hausdorff distance between boxes under the coordinate-sum distance.

    Each directed separation decomposes into a sum of per-coordinate
    one-dimensional separations; the metric is the larger of the two
    directed sums.
    """
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    return max(_directed_box_sep(a, b), _directed_box_sep(b, a))


def d_membership(x1, x2) -> float:
    """Largest pointwise gap between two membership functions, in [0, 1].

    Both memberships are piecewise linear with breakpoints at cut
    endpoints, so the sup of |x1(p) - x2(p)| is attained at a breakpoint
    or approached one-sidedly at a jump; evaluating values and one-sided
    limits at every breakpoint of either number is exact.
    """
    x1, x2 = as_fuzzy(x1), as_fuzzy(x2)
    points = np.unique(np.concatenate([x1.lo, x1.hi, x2.lo, x2.hi]))
    best = 0.0
    for p in points:
        best = max(
            best,
            abs(x1.membership(p) - x2.membership(p)),
            abs(x1.membership_limit(p, -1) - x2.membership_limit(p, -1)),
            abs(x1.membership_limit(p, +1) - x2.membership_limit(p, +1)),
        )
    return best


def d_levelwise(x1, x2) -> float:
    """Sup over alpha levels of the Hausdorff distance between cuts.

    Cut endpoints are piecewise linear in alpha, so the sup over (0, 1]
    is attained on the union of both grids (alpha 0 included as the
    limit from above).
    """
    x1, x2 = as_fuzzy(x1), as_fuzzy(x2)
    grid = np.union1d(x1.alphas, x2.alphas)
    lo1, hi1 = x1.cuts(grid)
    lo2, hi2 = x2.cuts(grid)
    return float(np.max(np.maximum(np.abs(lo1 - lo2), np.abs(hi1 - hi2))))


def d_fuzzy_vec(x: FuzzyVector, y: FuzzyVector, which: str = "membership") -> float:
    """Distance between fuzzy vectors: componentwise scalar metric, summed.

    ``which`` selects the scalar metric: "membership" or "levelwise".
    """
    if which == "membership":
        scalar = d_membership
    elif which == "levelwise":
        scalar = d_levelwise
    else:
        raise ValueError(f'metric must be "membership" or "levelwise", got {which!r}')
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: {x.n} vs {y.n}")
    return float(sum(scalar(a, b) for a, b in zip(x, y)))
