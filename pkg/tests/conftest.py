"""Shared random corpora for unit and acceptance tests.

All generators take an explicit numpy Generator so every test pins its
own seed; nothing here draws from global state.
"""

from __future__ import annotations

import numpy as np

from fdikit import (
    FuzzySystem,
    FuzzyVector,
    IntervalMatrix,
    Tfn,
)


def rand_tfn_nonneg(rng: np.random.Generator, center_scale: float = 1.0) -> Tfn:
    """Triangular number with non-negative support."""
    c = rng.uniform(0.0, center_scale)
    return Tfn(c * rng.uniform(0.0, 1.0), c, c + rng.uniform(0.0, 0.5 * center_scale))


def rand_fuzzy_levels(rng: np.random.Generator, span: float = 4.0):
    """Random nested level stack (alpha, lo, hi) with 2..5 levels."""
    m = int(rng.integers(2, 6))
    interior = np.sort(rng.uniform(0.0, 1.0, size=m - 2))
    alphas = np.concatenate([[0.0], interior, [1.0]])
    alphas = np.unique(alphas)
    lo = rng.uniform(-span, span)
    hi = lo + rng.uniform(0.0, span)
    rows = [(float(alphas[0]), lo, hi)]
    for a in alphas[1:]:
        width = hi - lo
        lo = lo + rng.uniform(0.0, 0.5) * width
        hi = hi - rng.uniform(0.0, 0.5) * (hi - lo)
        rows.append((float(a), lo, hi))
    return rows


def make_nonneg_system(rng: np.random.Generator, n_max: int = 4,
                       row_sum_range: tuple[float, float] = (0.2, 1.4),
                       n_levels: int = 11) -> FuzzySystem:
    """Random non-negative system; support row sums of the upper matrix are
    scaled into ``row_sum_range`` (systems may be stable or unstable)."""
    n = int(rng.integers(1, n_max + 1))
    h = []
    for i in range(n):
        entries = [rand_tfn_nonneg(rng) for _ in range(n)]
        target = rng.uniform(*row_sum_range)
        total = sum(e.r for e in entries)
        scale = target / total if total > 0 else 0.0
        h.append([Tfn(e.l * scale, e.c * scale, e.r * scale) for e in entries])
    x0 = FuzzyVector([
        Tfn(c - rng.uniform(0.0, c), c, c + rng.uniform(0.0, 1.0))
        for c in rng.uniform(0.5, 2.0, size=n)
    ])
    alphas = np.round(np.linspace(0.0, 1.0, n_levels), 12)
    return FuzzySystem(h=h, x0=x0, alphas=alphas)


def make_certified_nonneg_system(rng: np.random.Generator, n_max: int = 4,
                                 row_sum_max: float = 0.9,
                                 n_levels: int = 11) -> FuzzySystem:
    """Non-negative system whose upper support matrix has row sums below
    ``row_sum_max`` < 1, so the non-negative row criterion certifies it."""
    return make_nonneg_system(rng, n_max=n_max,
                              row_sum_range=(0.2, row_sum_max),
                              n_levels=n_levels)


def random_interval_matrix(rng: np.random.Generator, n: int,
                           scale: float = 1.0, width: float = 0.2) -> IntervalMatrix:
    """Unconstrained random interval matrix (any signs)."""
    center = rng.normal(0.0, scale, size=(n, n))
    radius = rng.uniform(0.0, width, size=(n, n))
    return IntervalMatrix(center - radius, center + radius)


def interval_matrix_nonneg_rows(rng: np.random.Generator, n: int,
                                row_sum_max: float = 0.95) -> IntervalMatrix:
    """Non-negative interval matrix whose hi row sums stay below 1."""
    hi = rng.uniform(0.0, 1.0, size=(n, n))
    hi *= (rng.uniform(0.1, row_sum_max, size=(n, 1)) / np.maximum(hi.sum(axis=1, keepdims=True), 1e-12))
    lo = hi * rng.uniform(0.0, 1.0, size=(n, n))
    return IntervalMatrix(lo, hi)


def interval_matrix_nonpos_rows(rng: np.random.Generator, n: int,
                                row_sum_max: float = 0.95) -> IntervalMatrix:
    """Mirror of :func:`interval_matrix_nonneg_rows` with all signs flipped."""
    m = interval_matrix_nonneg_rows(rng, n, row_sum_max)
    return IntervalMatrix(-m.hi, -m.lo)


def interval_matrix_small_norm(rng: np.random.Generator, n: int,
                               target: float = 0.6) -> IntervalMatrix:
    """Mixed-sign interval matrix scaled so the eigenvalue box certifies it."""
    center = rng.normal(0.0, 1.0, size=(n, n))
    center *= target / max(np.linalg.norm(center, 2), 1e-12)
    radius = rng.uniform(0.0, 0.05 / n, size=(n, n))
    return IntervalMatrix(center - radius, center + radius)


def certified_interval_corpus(rng: np.random.Generator, count: int,
                              n_choices=(1, 2, 3)):
    """Interval matrices on which some positive criterion fires.

    Yields (matrix, verdict) pairs drawn from the three generator families
    until ``count`` certified instances have been collected.
    """
    from fdikit import StabilityStatus, analyze

    out = []
    families = (interval_matrix_nonneg_rows, interval_matrix_nonpos_rows,
                interval_matrix_small_norm)
    while len(out) < count:
        fam = families[int(rng.integers(len(families)))]
        n = int(rng.choice(n_choices))
        m = fam(rng, n)
        verdict = analyze(m, n_samples=0)
        if verdict.status is StabilityStatus.ASYMPTOTICALLY_STABLE:
            out.append((m, verdict))
    return out
