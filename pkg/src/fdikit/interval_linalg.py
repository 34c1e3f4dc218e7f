"""Interval matrices and vectors: exact products, powers of non-negative
families, midpoint/radius splits, Gershgorin row data, vertex and random
member selection."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

#: Default cap on how many vertex matrices may be enumerated.
DEFAULT_VERTEX_BUDGET = 2 ** 16


class VertexBudgetError(ValueError):
    """Vertex enumeration would exceed the configured budget."""


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class IntervalMatrix:
    """Elementwise box of matrices [lo, hi]."""

    lo: np.ndarray
    hi: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "lo", _freeze(self.lo))
        object.__setattr__(self, "hi", _freeze(self.hi))
        if self.lo.ndim != 2 or self.lo.shape != self.hi.shape:
            raise ValueError("lo and hi must be matrices of equal shape")
        if np.any(self.lo > self.hi):
            raise ValueError("interval matrix needs lo <= hi elementwise")

    @classmethod
    def crisp(cls, m) -> "IntervalMatrix":
        m = np.asarray(m, dtype=float)
        return cls(m, m.copy())

    @property
    def n(self) -> int:
        if self.lo.shape[0] != self.lo.shape[1]:
            raise ValueError("matrix is not square")
        return self.lo.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.lo.shape

    def contains(self, m, tol: float = 0.0) -> bool:
        m = np.asarray(m, dtype=float)
        return bool(np.all(m >= self.lo - tol) and np.all(m <= self.hi + tol))

    def widened(self, delta: float) -> "IntervalMatrix":
        return IntervalMatrix(self.lo - delta, self.hi + delta)

    def __repr__(self):
        return f"IntervalMatrix(shape={self.lo.shape}, max_width={np.max(self.hi - self.lo):g})"


@dataclass(frozen=True, eq=False)
class IntervalVector:
    """Elementwise box of vectors [lo, hi]."""

    lo: np.ndarray
    hi: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "lo", _freeze(np.atleast_1d(self.lo)))
        object.__setattr__(self, "hi", _freeze(np.atleast_1d(self.hi)))
        if self.lo.ndim != 1 or self.lo.shape != self.hi.shape:
            raise ValueError("lo and hi must be vectors of equal length")
        if np.any(self.lo > self.hi):
            raise ValueError("interval vector needs lo <= hi elementwise")

    @property
    def n(self) -> int:
        return self.lo.size

    def contains(self, z, tol: float = 0.0) -> bool:
        z = np.asarray(z, dtype=float)
        return bool(np.all(z >= self.lo - tol) and np.all(z <= self.hi + tol))

    @property
    def width(self) -> np.ndarray:
        return self.hi - self.lo

    def __repr__(self):
        return f"IntervalVector(lo={self.lo.tolist()}, hi={self.hi.tolist()})"


@dataclass(frozen=True, eq=False)
class MidRad:
    """Midpoint/radius split of an interval matrix: center +- radius."""

    center: np.ndarray
    radius: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "center", _freeze(self.center))
        object.__setattr__(self, "radius", _freeze(self.radius))
        if np.any(self.radius < 0):
            raise ValueError("radius must be non-negative")


def mid_rad(m: IntervalMatrix) -> MidRad:
    """Center (lo+hi)/2 and radius (hi-lo)/2 of an interval matrix."""
    return MidRad((m.lo + m.hi) / 2.0, (m.hi - m.lo) / 2.0)


def interval_matvec(m: IntervalMatrix, v: IntervalVector) -> IntervalVector:
    """Exact per-coordinate range of {U z : U in m, z in v}.

    Each entry-by-entry product takes the min/max of its four endpoint
    products; row sums of those exact entry ranges give the exact
    coordinate ranges because entries vary independently.
    """
    if m.shape[1] != v.n:
        raise ValueError(f"dimension mismatch: {m.shape} @ {v.n}")
    p1 = m.lo * v.lo
    p2 = m.lo * v.hi
    p3 = m.hi * v.lo
    p4 = m.hi * v.hi
    lo = np.minimum(np.minimum(p1, p2), np.minimum(p3, p4)).sum(axis=1)
    hi = np.maximum(np.maximum(p1, p2), np.maximum(p3, p4)).sum(axis=1)
    return IntervalVector(lo, hi)


def matpow_envelope_nonneg(m: IntervalMatrix, k: int) -> IntervalMatrix:
    """[lo^k, hi^k], bracketing every member power of a non-negative family.

    Requires lo >= 0 elementwise: matrix powers are then monotone in the
    entries, so the endpoint powers bound {U^k : U in [lo, hi]}.
    """
    if k < 0 or int(k) != k:
        raise ValueError(f"power must be a non-negative integer, got {k}")
    if np.any(m.lo < 0):
        raise ValueError(
            "power envelope requires a non-negative lower bound matrix "
            "(monotonicity fails otherwise)"
        )
    m.n  # rejects non-square input
    return IntervalMatrix(
        np.linalg.matrix_power(m.lo, int(k)),
        np.linalg.matrix_power(m.hi, int(k)),
    )


def gershgorin_rows(m) -> list[tuple[float, float]]:
    """Per-row disc data (center, radius) of a crisp square matrix:
    center is the diagonal entry, radius the absolute off-diagonal row sum."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("square matrix required")
    radii = np.sum(np.abs(m), axis=1) - np.abs(np.diag(m))
    return [(float(c), float(r)) for c, r in zip(np.diag(m), radii)]


def vertex_count(m: IntervalMatrix) -> int:
    """Number of distinct endpoint-choice matrices."""
    return int(2 ** np.count_nonzero(m.hi > m.lo))


def vertex_matrices(m: IntervalMatrix,
                    max_vertices: int = DEFAULT_VERTEX_BUDGET) -> Iterator[np.ndarray]:
    """Enumerate all matrices whose entries are each lo or hi.

    Degenerate entries contribute one choice, so a crisp matrix yields a
    single vertex.  Raises VertexBudgetError beyond ``max_vertices``.
    """
    count = vertex_count(m)
    if count > max_vertices:
        raise VertexBudgetError(
            f"{count} vertex matrices exceed the budget of {max_vertices}; "
            "use sample_matrix instead"
        )
    wide = np.argwhere(m.hi > m.lo)
    base = np.array(m.lo)
    if wide.size == 0:
        yield base.copy()
        return
    for picks in itertools.product((0, 1), repeat=len(wide)):
        v = base.copy()
        for (i, j), pick in zip(wide, picks):
            if pick:
                v[i, j] = m.hi[i, j]
        yield v


def _as_rng(rng) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def sample_matrix(m: IntervalMatrix, rng) -> np.ndarray:
    """Entrywise uniform member of the interval matrix.

    ``rng`` is a seed or a numpy Generator; fixed seeds reproduce exactly.
    """
    gen = _as_rng(rng)
    return gen.uniform(m.lo, m.hi)


def sample_vector(v: IntervalVector, rng, size: int | None = None) -> np.ndarray:
    """Uniform point(s) in an interval vector; shape (size, n) when batched."""
    gen = _as_rng(rng)
    if size is None:
        return gen.uniform(v.lo, v.hi)
    return gen.uniform(v.lo, v.hi, size=(size, v.n))
