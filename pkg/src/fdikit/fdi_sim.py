"""Level-wise simulation of linear stationary fuzzy dynamics.

A fuzzy system x(k+1) = H x(k) is evaluated per alpha level as an
interval difference inclusion.  For non-negative families the exact
solution-set envelope separates: the lower endpoints evolve under the
lower matrix and the upper endpoints under the upper matrix.  Monte
Carlo member trajectories serve as an independent containment oracle and
work for sign-indefinite systems too.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .fuzzy_num import FuzzyNumber, FuzzyVector, as_fuzzy, validate_nested
from .interval_linalg import (
    IntervalMatrix,
    IntervalVector,
    interval_matvec,
    matpow_envelope_nonneg,
)

DEFAULT_ALPHAS = np.round(np.linspace(0.0, 1.0, 11), 12)


class SignPreconditionError(ValueError):
    """A sign assumption required by the exact envelope is violated."""

    def __init__(self, condition: str, message: str):
        super().__init__(message)
        self.condition = condition


def _check_alphas(alphas) -> np.ndarray:
    grid = np.asarray(alphas, dtype=float)
    if grid.ndim != 1 or grid.size < 2:
        raise ValueError("alpha grid must be a vector with at least two levels")
    if np.any(np.diff(grid) <= 0):
        raise ValueError("alpha grid must be strictly increasing")
    if grid[0] != 0.0 or grid[-1] != 1.0:
        raise ValueError("alpha grid must contain 0 and 1")
    return grid


@dataclass
class FuzzySystem:
    """Linear stationary system with fuzzy matrix and fuzzy initial state."""

    h: Sequence[Sequence[FuzzyNumber]]
    x0: FuzzyVector
    alphas: np.ndarray = field(default_factory=lambda: DEFAULT_ALPHAS.copy())

    def __post_init__(self):
        rows = [tuple(as_fuzzy(e) for e in row) for row in self.h]
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("dynamic matrix must be square")
        self.h = tuple(rows)
        if not isinstance(self.x0, FuzzyVector):
            self.x0 = FuzzyVector(self.x0)
        if self.x0.n != n:
            raise ValueError(f"initial state has length {self.x0.n}, expected {n}")
        self.alphas = _check_alphas(self.alphas)

    @property
    def n(self) -> int:
        return len(self.h)


def level_matrix(sys: FuzzySystem, alpha: float) -> IntervalMatrix:
    """Entrywise alpha-cuts of the dynamic matrix as an interval matrix."""
    lo = np.empty((sys.n, sys.n))
    hi = np.empty((sys.n, sys.n))
    for i, row in enumerate(sys.h):
        for j, entry in enumerate(row):
            lo[i, j], hi[i, j] = entry.cut(alpha)
    return IntervalMatrix(lo, hi)


def level_state(sys: FuzzySystem, alpha: float) -> IntervalVector:
    """Alpha-cut box of the initial state."""
    lo, hi = sys.x0.cut(alpha)
    return IntervalVector(lo, hi)


@dataclass
class EnvelopeTrajectory:
    """Per-step attainable-set boxes at one alpha level.

    ``exact`` records whether the run used the separated endpoint
    recursion (tight for non-negative systems) or the interval-product
    over-approximation.
    """

    alpha: float
    steps: list[IntervalVector]
    exact: bool = True

    @property
    def horizon(self) -> int:
        return len(self.steps) - 1

    def lo_array(self) -> np.ndarray:
        return np.vstack([s.lo for s in self.steps])

    def hi_array(self) -> np.ndarray:
        return np.vstack([s.hi for s in self.steps])


def envelope_propagate(sys: FuzzySystem, alpha: float, horizon: int,
                       overapproximate: bool = False) -> EnvelopeTrajectory:
    """Attainable-set boxes for steps 0..horizon at one alpha level.

    The exact mode iterates the endpoint systems lo' = M_lo lo and
    hi' = M_hi hi, which bound the solution set exactly when both the
    lower matrix and the lower state endpoints are non-negative; violating
    either raises SignPreconditionError (Monte Carlo still applies, and
    ``overapproximate=True`` switches to the interval-product outer box).
    """
    if horizon < 0:
        raise ValueError("horizon must be non-negative")
    m = level_matrix(sys, alpha)
    x = level_state(sys, alpha)
    if not overapproximate:
        if np.any(m.lo < 0):
            raise SignPreconditionError(
                "matrix_nonneg",
                f"dynamic-matrix lower bound has a negative entry at alpha={alpha:g}; "
                "use mc_trajectories, or overapproximate=True for an outer box")
        if np.any(x.lo < 0):
            raise SignPreconditionError(
                "state_nonneg",
                f"initial-state lower bound has a negative entry at alpha={alpha:g}; "
                "use mc_trajectories, or overapproximate=True for an outer box")
        steps = [x]
        lo, hi = x.lo, x.hi
        for _ in range(horizon):
            lo = m.lo @ lo
            hi = m.hi @ hi
            steps.append(IntervalVector(lo, hi))
        return EnvelopeTrajectory(alpha=float(alpha), steps=steps, exact=True)
    steps = [x]
    for _ in range(horizon):
        x = interval_matvec(m, x)
        steps.append(x)
    return EnvelopeTrajectory(alpha=float(alpha), steps=steps, exact=False)


@dataclass
class FuzzyAttainable:
    """Fuzzy attainable sets: one stacked fuzzy vector per time step."""

    alphas: np.ndarray
    steps: list[FuzzyVector]

    @property
    def horizon(self) -> int:
        return len(self.steps) - 1


def assemble_fuzzy_attainable(sys: FuzzySystem, horizon: int) -> FuzzyAttainable:
    """Propagate every grid level and stack the boxes into fuzzy vectors.

    Stacking validates nestedness across alpha at every step; a violation
    here would indicate an implementation bug, not bad input.
    """
    trajectories = [envelope_propagate(sys, a, horizon) for a in sys.alphas]
    steps = []
    for k in range(horizon + 1):
        levels = [(a, tr.steps[k].lo, tr.steps[k].hi)
                  for a, tr in zip(sys.alphas, trajectories)]
        steps.append(validate_nested(levels))
    return FuzzyAttainable(alphas=sys.alphas.copy(), steps=steps)


def transition_envelope(sys: FuzzySystem, alpha: float,
                        horizon: int) -> list[IntervalMatrix]:
    """Endpoint powers [lo^k, hi^k] for k = 0..horizon.

    Applying the k-th envelope to the initial-state endpoints reproduces
    :func:`envelope_propagate` (same sign preconditions apply).
    """
    if horizon < 0:
        raise ValueError("horizon must be non-negative")
    m = level_matrix(sys, alpha)
    x = level_state(sys, alpha)
    if np.any(x.lo < 0):
        raise SignPreconditionError(
            "state_nonneg",
            f"initial-state lower bound has a negative entry at alpha={alpha:g}")
    return [matpow_envelope_nonneg(m, k) for k in range(horizon + 1)]


def mc_trajectories(sys: FuzzySystem, alpha: float, horizon: int, n: int,
                    seed: int = 0, mode: str = "constant") -> np.ndarray:
    """Monte Carlo member trajectories, shape (n, horizon+1, dim).

    Each run draws its start uniformly from the initial box; ``constant``
    reuses one uniformly drawn member matrix every step, ``timevarying``
    redraws the matrix each step (the full inclusion semantics).  Fixed
    seeds reproduce exactly.  No sign restrictions.
    """
    if mode not in ("constant", "timevarying"):
        raise ValueError(f'mode must be "constant" or "timevarying", got {mode!r}')
    if n <= 0 or horizon < 0:
        raise ValueError("need n > 0 trajectories and a non-negative horizon")
    m = level_matrix(sys, alpha)
    x0 = level_state(sys, alpha)
    rng = np.random.default_rng(seed)
    dim = sys.n
    x = rng.uniform(x0.lo, x0.hi, size=(n, dim))
    out = np.empty((n, horizon + 1, dim))
    out[:, 0] = x
    if mode == "constant":
        u = rng.uniform(m.lo, m.hi, size=(n, dim, dim))
    for k in range(1, horizon + 1):
        if mode == "timevarying":
            u = rng.uniform(m.lo, m.hi, size=(n, dim, dim))
        x = np.einsum("nij,nj->ni", u, x)
        out[:, k] = x
    return out
