"""Sufficient stability tests for interval dynamic matrices.

All tests decide stability of the whole family {U : lo <= U <= hi} in the
discrete-time sense.  Positive verdicts come from strict sufficient
conditions (sign-definite Gershgorin rows, an eigenvalue box with corner
moduli below one, or a similarity transform isolating a simple marginal
mode); sampling can only falsify, never certify, so the fallback verdict
is Inconclusive.  Strict inequalities are evaluated with no epsilon slack
for positive verdicts; falsification requires slack FALSIFY_TOL.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .interval_linalg import (
    DEFAULT_VERTEX_BUDGET,
    IntervalMatrix,
    mid_rad,
    sample_matrix,
    vertex_count,
    vertex_matrices,
)

#: Slack required before a sampled member counts as a falsification witness.
FALSIFY_TOL = 1e-9

#: Tolerance on the block-triangular shape produced by a marginal transform.
SHAPE_TOL = 1e-9

#: Condition-number cap above which a transform matrix is rejected.
COND_CAP = 1e12

#: Numerical slack when comparing transformed endpoint matrices.
ORDER_SLACK = 1e-12

#: Matrix size up to which spectral radii use a dense eigensolve.
DENSE_EIG_LIMIT = 512


class StabilityStatus(Enum):
    ASYMPTOTICALLY_STABLE = "AsymptoticallyStable"
    STABLE = "Stable"
    INCONCLUSIVE = "Inconclusive"
    FALSIFIED = "Falsified"


@dataclass
class StabilityVerdict:
    """Outcome of a stability test: status, the rule that fired, witness data."""

    status: StabilityStatus
    criterion: str
    witness: Optional[dict] = field(default=None)

    @property
    def is_stable(self) -> bool:
        return self.status in (StabilityStatus.ASYMPTOTICALLY_STABLE,
                               StabilityStatus.STABLE)

    def to_json_obj(self) -> dict:
        out = {"status": self.status.value, "criterion": self.criterion}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        return out


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, EigenBox):
        return {"r_lo": obj.r_lo, "r_hi": obj.r_hi, "i_lo": obj.i_lo, "i_hi": obj.i_hi}
    return obj


@dataclass(frozen=True)
class EigenBox:
    """Axis-aligned rectangle containing every member eigenvalue."""

    r_lo: float
    r_hi: float
    i_lo: float
    i_hi: float

    def __post_init__(self):
        if self.r_lo > self.r_hi or self.i_lo > self.i_hi:
            raise ValueError("eigenvalue box needs lo <= hi on both axes")

    def corner_moduli(self) -> np.ndarray:
        return np.hypot(
            np.array([self.r_lo, self.r_lo, self.r_hi, self.r_hi]),
            np.array([self.i_lo, self.i_hi, self.i_lo, self.i_hi]),
        )

    def contains(self, lam: complex, tol: float = 0.0) -> bool:
        return (self.r_lo - tol <= lam.real <= self.r_hi + tol
                and self.i_lo - tol <= lam.imag <= self.i_hi + tol)

    def contains_box(self, other: "EigenBox", tol: float = 0.0) -> bool:
        return (self.r_lo - tol <= other.r_lo and other.r_hi <= self.r_hi + tol
                and self.i_lo - tol <= other.i_lo and other.i_hi <= self.i_hi + tol)


def spectral_radius(m, dense_limit: int = DENSE_EIG_LIMIT) -> float:
    """Spectral radius of a crisp matrix.

    Dense eigensolve up to ``dense_limit``; larger matrices fall back to a
    sparse dominant-eigenvalue iteration.
    """
    m = np.asarray(m, dtype=float)
    if m.shape[0] <= dense_limit:
        return float(np.max(np.abs(np.linalg.eigvals(m))))
    from scipy.sparse.linalg import eigs

    vals = eigs(m, k=1, which="LM", return_eigenvectors=False, maxiter=10000)
    return float(np.abs(vals[0]))


def spectral_radii(stack: np.ndarray) -> np.ndarray:
    """Spectral radii of a batch of matrices, shape (..., n, n) -> (...)."""
    return np.max(np.abs(np.linalg.eigvals(stack)), axis=-1)


# -- Gershgorin tests for sign-definite families ------------------------------

def gershgorin_nonneg_test(m: IntervalMatrix) -> StabilityVerdict:
    """Row test for non-negative families: certifies when lo >= 0 and every
    row of hi has off-diagonal sum strictly below 1 minus its diagonal."""
    m.n  # rejects non-square input
    if np.any(m.lo < 0):
        i, j = np.argwhere(m.lo < 0)[0]
        return StabilityVerdict(
            StabilityStatus.INCONCLUSIVE, "gershgorin_nonneg",
            {"reason": "lower bound matrix has a negative entry",
             "entry": [int(i), int(j)], "value": float(m.lo[i, j])})
    off = m.hi.sum(axis=1) - np.diag(m.hi)
    slack = 1.0 - np.diag(m.hi) - off
    if np.all(slack > 0):
        return StabilityVerdict(
            StabilityStatus.ASYMPTOTICALLY_STABLE, "gershgorin_nonneg",
            {"row_margins": slack.tolist()})
    i = int(np.argmin(slack))
    return StabilityVerdict(
        StabilityStatus.INCONCLUSIVE, "gershgorin_nonneg",
        {"reason": "row condition fails (not strict)", "row": i,
         "offdiag_sum": float(off[i]), "diag": float(m.hi[i, i])})


def gershgorin_nonpos_test(m: IntervalMatrix) -> StabilityVerdict:
    """Mirror row test for non-positive families: certifies when hi <= 0 and
    every row of lo has off-diagonal sum strictly above -1 minus its diagonal."""
    m.n  # rejects non-square input
    if np.any(m.hi > 0):
        i, j = np.argwhere(m.hi > 0)[0]
        return StabilityVerdict(
            StabilityStatus.INCONCLUSIVE, "gershgorin_nonpos",
            {"reason": "upper bound matrix has a positive entry",
             "entry": [int(i), int(j)], "value": float(m.hi[i, j])})
    off = m.lo.sum(axis=1) - np.diag(m.lo)
    slack = off - (-1.0 - np.diag(m.lo))
    if np.all(slack > 0):
        return StabilityVerdict(
            StabilityStatus.ASYMPTOTICALLY_STABLE, "gershgorin_nonpos",
            {"row_margins": slack.tolist()})
    i = int(np.argmin(slack))
    return StabilityVerdict(
        StabilityStatus.INCONCLUSIVE, "gershgorin_nonpos",
        {"reason": "row condition fails (not strict)", "row": i,
         "offdiag_sum": float(off[i]), "diag": float(m.lo[i, i])})


# -- eigenvalue box ------------------------------------------------------------

def _sym(a: np.ndarray) -> np.ndarray:
    return (a + a.T) / 2.0


def eigen_box_bounds(m: IntervalMatrix) -> EigenBox:
    """Closed-form rectangle containing all member eigenvalues.

    Split the family into center C and radius D.  Real parts lie between
    the extreme eigenvalues of sym(C) widened by the largest eigenvalue of
    sym(D); imaginary parts are bounded by the largest eigenvalue of the
    symmetric 2Nx2N embedding of the skew part of C, widened the same way.
    The rectangle is symmetric about the real axis (real data).
    """
    n = m.n
    mr = mid_rad(m)
    c, d = mr.center, mr.radius
    sym_c = np.linalg.eigvalsh(_sym(c))
    spread = float(np.linalg.eigvalsh(_sym(d))[-1])
    r_lo = float(sym_c[0]) - spread
    r_hi = float(sym_c[-1]) + spread
    skew = (c - c.T) / 2.0
    emb = np.block([[np.zeros((n, n)), skew], [skew.T, np.zeros((n, n))]])
    i_hi = float(np.linalg.eigvalsh(emb)[-1]) + spread
    return EigenBox(r_lo, r_hi, -i_hi, i_hi)


def _maximize_on_sphere(f, dim: int, n_starts: int, rng: np.random.Generator) -> float:
    """Best value of f over the unit sphere found by multi-start local search.

    Always a lower bound on the true maximum, which is what a cross-check
    needs: found values can only shrink the reported box.
    """
    from scipy.optimize import minimize

    def neg(y):
        nrm = np.linalg.norm(y)
        if nrm < 1e-12:
            return 0.0
        return -f(y / nrm)

    best = -np.inf
    for _ in range(n_starts):
        y0 = rng.standard_normal(dim)
        y0 /= np.linalg.norm(y0)
        res = minimize(neg, y0, method="Nelder-Mead",
                       options={"maxiter": 120 * dim, "xatol": 1e-8, "fatol": 1e-10})
        best = max(best, -float(res.fun))
        best = max(best, f(y0))
    return best


def eigen_box_rayleigh(m: IntervalMatrix, n_starts: int = 8, seed: int = 0) -> EigenBox:
    """Sampled Rayleigh-quotient cross-check of :func:`eigen_box_bounds`.

    Optimizes the quadratic-form bounds over the unit sphere from random
    starts.  Local search only ever undershoots the true extrema, so the
    resulting box always lies inside the closed-form box.
    """
    n = m.n
    mr = mid_rad(m)
    c, d = mr.center, mr.radius
    skew2 = c - c.T
    rng = np.random.default_rng(seed)

    def re_high(x):
        ax = np.abs(x)
        return float(x @ c @ x + ax @ d @ ax)

    def re_low_neg(x):
        ax = np.abs(x)
        return float(-(x @ c @ x - ax @ d @ ax))

    def im_high(z):
        x1, x2 = z[:n], z[n:]
        cross = np.abs(np.outer(x1, x2) - np.outer(x2, x1))
        return float(x1 @ skew2 @ x2 + np.sum(d * cross))

    r_hi = _maximize_on_sphere(re_high, n, n_starts, rng)
    r_lo = -_maximize_on_sphere(re_low_neg, n, n_starts, rng)
    i_hi = _maximize_on_sphere(im_high, 2 * n, n_starts, rng)
    return EigenBox(min(r_lo, r_hi), r_hi, -i_hi, i_hi)


def condeig_check(box: EigenBox) -> StabilityVerdict:
    """Certify when the box's four corner moduli all sit strictly inside the
    unit circle; the max modulus over a rectangle is attained at a corner."""
    moduli = box.corner_moduli()
    witness = {"eigen_box": box, "corner_moduli": moduli.tolist()}
    if float(np.max(moduli)) < 1.0:
        return StabilityVerdict(StabilityStatus.ASYMPTOTICALLY_STABLE,
                                "eigen_box", witness)
    return StabilityVerdict(StabilityStatus.INCONCLUSIVE, "eigen_box", witness)


# -- marginal stability via a supplied transform -------------------------------

def _transformed_block(a: np.ndarray, t_inv: np.ndarray, t: np.ndarray,
                       tol: float) -> tuple[Optional[np.ndarray], str]:
    """Reduced block of T^-1 A T when it is block-triangular with a unit
    corner; otherwise (None, reason)."""
    a2 = t_inv @ a @ t
    if abs(a2[-1, -1] - 1.0) > tol:
        return None, f"corner entry is {float(a2[-1, -1]):g}, not 1"
    row_zero = np.all(np.abs(a2[-1, :-1]) <= tol)
    col_zero = np.all(np.abs(a2[:-1, -1]) <= tol)
    if not (row_zero or col_zero):
        return None, "transformed matrix is not block-triangular"
    return a2[:-1, :-1], ""


def _strict_gershgorin_abs(b: np.ndarray) -> tuple[bool, str]:
    """Strict unit-circle row condition |b_ii| + sum_j |b_ij| < 1.

    Similarity transforms can flip entry signs, so the reduced block is
    checked with absolute values (which reduces to the sign-definite row
    conditions when the block keeps one sign).
    """
    if b.size == 0:
        return True, ""
    bounds = np.sum(np.abs(b), axis=1)  # |diag| + off-diagonal radius
    if np.all(bounds < 1.0):
        return True, ""
    i = int(np.argmax(bounds))
    return False, f"reduced row {i} has Gershgorin bound {float(bounds[i]):g} >= 1"


def marginal_test(m: IntervalMatrix, t, shape_tol: float = SHAPE_TOL,
                  cond_cap: float = COND_CAP) -> StabilityVerdict:
    """Marginal-stability test through a caller-supplied similarity transform.

    T must expose a block-triangular shape with a 1 in the corner; the
    remaining block then carries the strictly-contracting part, checked by
    a strict Gershgorin row test (sign-definite families) or by the
    eigenvalue box (general families).  Success means Stable (marginal,
    not asymptotic).  The transform is never searched for.
    """
    t = np.asarray(t, dtype=float)
    n = m.n
    if t.shape != (n, n):
        raise ValueError(f"transform must be {n}x{n}, got {t.shape}")
    cond = np.linalg.cond(t)
    if not np.isfinite(cond) or cond > cond_cap:
        raise ValueError(f"transform is singular or ill-conditioned (cond={cond:g})")
    t_inv = np.linalg.inv(t)

    reasons = []
    if np.all(m.lo >= 0):
        block, why = _transformed_block(m.hi, t_inv, t, shape_tol)
        if block is None:
            reasons.append(f"non-negative case: {why}")
        else:
            ok, why = _strict_gershgorin_abs(block)
            if ok:
                return StabilityVerdict(
                    StabilityStatus.STABLE, "marginal_transform",
                    {"case": "nonneg", "reduced": block.tolist()})
            reasons.append(f"non-negative case: {why}")
    if np.all(m.hi <= 0):
        block, why = _transformed_block(m.lo, t_inv, t, shape_tol)
        if block is None:
            reasons.append(f"non-positive case: {why}")
        else:
            ok, why = _strict_gershgorin_abs(block)
            if ok:
                return StabilityVerdict(
                    StabilityStatus.STABLE, "marginal_transform",
                    {"case": "nonpos", "reduced": block.tolist()})
            reasons.append(f"non-positive case: {why}")

    block_lo, why_lo = _transformed_block(m.lo, t_inv, t, shape_tol)
    block_hi, why_hi = _transformed_block(m.hi, t_inv, t, shape_tol)
    if block_lo is None or block_hi is None:
        for side, why in (("lower", why_lo), ("upper", why_hi)):
            if why:
                reasons.append(f"general case, {side} bound: {why}")
    elif np.any(block_lo > block_hi + ORDER_SLACK):
        reasons.append("general case: transformed bounds are not elementwise ordered")
    elif block_lo.size == 0:
        return StabilityVerdict(StabilityStatus.STABLE, "marginal_transform",
                                {"case": "general", "reduced": []})
    else:
        reduced = IntervalMatrix(np.minimum(block_lo, block_hi),
                                 np.maximum(block_lo, block_hi))
        sub = condeig_check(eigen_box_bounds(reduced))
        if sub.status is StabilityStatus.ASYMPTOTICALLY_STABLE:
            return StabilityVerdict(
                StabilityStatus.STABLE, "marginal_transform",
                {"case": "general", "reduced_box": sub.witness["eigen_box"]})
        reasons.append("general case: reduced eigenvalue box reaches the unit circle")

    return StabilityVerdict(StabilityStatus.INCONCLUSIVE, "marginal_transform",
                            {"reasons": reasons})


# -- sampling -------------------------------------------------------------------

def sampled_falsifier(m: IntervalMatrix, n_samples: int = 1000, seed: int = 0,
                      max_vertices: int = DEFAULT_VERTEX_BUDGET) -> StabilityVerdict:
    """Search vertices and random members for one with spectral radius > 1.

    Can disprove the all-members-stable hypothesis but never prove it, so
    the non-finding verdict is Inconclusive.  A Falsified verdict carries
    the witness matrix and its spectral radius, recomputable on its own.
    """
    mats = []
    if vertex_count(m) <= max_vertices:
        mats.extend(vertex_matrices(m, max_vertices))
    if n_samples > 0:
        rng = np.random.default_rng(seed)
        mats.extend(sample_matrix(m, rng) for _ in range(n_samples))
    stack = np.stack(mats)
    radii = spectral_radii(stack)
    worst = int(np.argmax(radii))
    if radii[worst] > 1.0 + FALSIFY_TOL:
        return StabilityVerdict(
            StabilityStatus.FALSIFIED, "sampled_falsifier",
            {"matrix": stack[worst].tolist(),
             "spectral_radius": float(radii[worst])})
    return StabilityVerdict(
        StabilityStatus.INCONCLUSIVE, "sampled_falsifier",
        {"max_sampled_radius": float(radii[worst]), "n_checked": len(mats)})


def analyze(m: IntervalMatrix, t=None, n_samples: int = 1000,
            seed: int = 0) -> StabilityVerdict:
    """Run the criteria in order and return the first decisive verdict.

    Order: non-negative rows, non-positive rows, eigenvalue box with
    corner check, marginal transform (only when ``t`` is supplied),
    sampled falsifier.  When nothing fires, the verdict is Inconclusive
    with every sub-report attached.
    """
    reports = []
    for test in (gershgorin_nonneg_test, gershgorin_nonpos_test):
        v = test(m)
        if v.status is StabilityStatus.ASYMPTOTICALLY_STABLE:
            return v
        reports.append(v)
    v = condeig_check(eigen_box_bounds(m))
    if v.status is StabilityStatus.ASYMPTOTICALLY_STABLE:
        return v
    reports.append(v)
    if t is not None:
        v = marginal_test(m, t)
        if v.status is StabilityStatus.STABLE:
            return v
        reports.append(v)
    v = sampled_falsifier(m, n_samples=n_samples, seed=seed)
    if v.status is StabilityStatus.FALSIFIED:
        return v
    reports.append(v)
    return StabilityVerdict(
        StabilityStatus.INCONCLUSIVE, "none",
        {"sub_reports": [r.to_json_obj() for r in reports]})
