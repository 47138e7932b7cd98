"""Principal component analysis over coupling metric matrices.

Eigenpairs come from a cyclic Jacobi rotation solver; numpy is used for
array storage and arithmetic only.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .errors import EmptyMatrix, KTooLarge, NoConvergence, NonSymmetricInput, ZeroTrace
from .metrics import MetricsMatrix

log = logging.getLogger(__name__)

NEGATIVE_RULE = "negative-in-all-components"
FALLBACK_RULE = "fallback:low-coupling"


@dataclass
class CovarianceMatrix:
    values: np.ndarray
    labels: list[str]


@dataclass
class PcaResult:
    eigenvalues: list[float]
    eigenvectors: list[np.ndarray]
    labels: list[str]
    variance_retained: list[float] = field(default_factory=list)

    @classmethod
    def from_eigenpairs(cls, eigenvalues: Sequence[float], eigenvectors: Sequence[Sequence[float]],
                        labels: Sequence[str] | None = None) -> "PcaResult":
        """Sort descending (stable), sign-normalize, and attach the retained-variance table."""
        if len(eigenvalues) != len(eigenvectors):
            raise ValueError("eigenvalue / eigenvector count mismatch")
        order = sorted(range(len(eigenvalues)), key=lambda i: -eigenvalues[i])
        vals = [float(eigenvalues[i]) for i in order]
        vecs = [sign_normalize(np.asarray(eigenvectors[i], dtype=float)) for i in order]
        if labels is None:
            labels = [str(k + 1) for k in range(len(vecs[0]) if vecs else 0)]
        return cls(vals, vecs, list(labels), variance_retained(vals))

    @property
    def dimension(self) -> int:
        return len(self.labels)


@dataclass
class Recommendation:
    rule: str
    classes: list[str]
    k: int
    coupling: dict[str, float] = field(default_factory=dict)


def mean_center(X: MetricsMatrix | np.ndarray) -> np.ndarray:
    values = X.values if isinstance(X, MetricsMatrix) else np.asarray(X, dtype=float)
    if values.ndim != 2 or values.shape[0] == 0:
        raise EmptyMatrix("matrix has no rows")
    return values - values.mean(axis=0)


def covariance(centered: np.ndarray, labels: Sequence[str] | None = None) -> CovarianceMatrix:
    """(1/n) X*^T X*, built from the upper triangle and mirrored so it is exactly symmetric."""
    Xc = np.asarray(centered, dtype=float)
    if Xc.ndim != 2 or Xc.shape[0] == 0:
        raise EmptyMatrix("matrix has no rows")
    n, m = Xc.shape
    R = np.zeros((m, m))
    for j in range(m):
        for k in range(j, m):
            R[j, k] = R[k, j] = float(Xc[:, j] @ Xc[:, k]) / n
    if labels is None:
        labels = [str(k + 1) for k in range(m)]
    return CovarianceMatrix(R, list(labels))


def eigen_symmetric(R: CovarianceMatrix | np.ndarray, max_sweeps: int = 100, rel_tol: float = 1e-12):
    """Eigen-decompose a real symmetric matrix with cyclic Jacobi sweeps.

    Returns ``(eigenvalues, eigenvectors)`` in diagonal order, with the
    eigenvectors as the columns of the second array.
    """
    A = np.array(R.values if isinstance(R, CovarianceMatrix) else R, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NonSymmetricInput(f"matrix is not square: {A.shape}")
    m = A.shape[0]
    if m == 0:
        raise EmptyMatrix("empty matrix")
    asym = np.max(np.abs(A - A.T))
    if asym > 1e-9 * max(1.0, np.max(np.abs(A))):
        raise NonSymmetricInput(f"asymmetry {asym:.3g} exceeds tolerance")
    A = (A + A.T) / 2
    V = np.eye(m)

    tol = rel_tol * np.linalg.norm(A)
    off_mask = ~np.eye(m, dtype=bool)
    for _ in range(max_sweeps + 1):
        off = float(np.linalg.norm(A[off_mask]))
        if off <= tol:
            return np.diag(A).copy(), V
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                diff = A[q, q] - A[p, p]
                if abs(apq) < 1e-150 * abs(diff):
                    # rotation angle below double precision
                    A[p, q] = A[q, p] = 0.0
                    continue
                theta = diff / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap, aq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * ap - s * aq
                A[:, q] = s * ap + c * aq
                ap, aq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * ap - s * aq
                A[q, :] = s * ap + c * aq
                A[p, q] = A[q, p] = 0.0
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    raise NoConvergence(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def sign_normalize(v: np.ndarray) -> np.ndarray:
    """Flip ``v`` so its largest-magnitude entry (first one on ties) is positive."""
    v = np.asarray(v, dtype=float)
    if v.size == 0:
        return v.copy()
    i = int(np.argmax(np.abs(v)))
    return -v if v[i] < 0 else v.copy()


def variance_retained(eigenvalues: Sequence[float]) -> list[float]:
    """Cumulative share of eigenvalue mass held by the top d components, d = 1..m.

    Values below 1e-9 of the trace in magnitude are treated as zero. Returns
    an empty list when the total is zero.
    """
    vals = sorted((float(x) for x in eigenvalues), reverse=True)
    trace = sum(vals)
    if not vals or trace <= 0:
        return []
    clamped = [0.0 if abs(x) < 1e-9 * trace else x for x in vals]
    total = sum(clamped)
    if total <= 0:
        return []
    out, acc = [], 0.0
    for x in clamped:
        acc += x
        out.append(acc / total)
    return out


def principal_components(R: CovarianceMatrix) -> PcaResult:
    vals, vecs = eigen_symmetric(R)
    return PcaResult.from_eigenpairs(list(vals), [vecs[:, i] for i in range(vecs.shape[1])], R.labels)


def run_pca(X: MetricsMatrix) -> PcaResult:
    """Center, form the covariance of the columns and decompose it."""
    return principal_components(covariance(mean_center(X), X.col_labels))


def select_significant_measure(pca: PcaResult) -> str:
    """Label carrying the largest absolute weight in the first principal component."""
    if not pca.eigenvectors or not pca.variance_retained:
        raise ZeroTrace("covariance matrix has zero trace; no component is significant")
    w = np.abs(pca.eigenvectors[0])
    best = int(np.argmax(w))
    ties = np.flatnonzero(w == w[best])
    if len(ties) > 1:
        log.warning("measures %s tie for the largest weight; picking %s",
                    [pca.labels[i] for i in ties], pca.labels[best])
    return pca.labels[best]


def recommend_integration_class(pca: PcaResult, k: int = 3,
                                coupling: Mapping[str, float] | None = None) -> Recommendation:
    """Classes whose weight is negative in every one of the top-``k`` components.

    When no class qualifies, fall back to the class(es) with the lowest
    ClassCoupling according to ``coupling``.
    """
    if k < 1 or k > len(pca.eigenvectors):
        raise KTooLarge(f"k={k} but only {len(pca.eigenvectors)} components are available")
    top = np.vstack(pca.eigenvectors[:k])
    negative = np.all(top < 0, axis=0)
    hits = [i for i in range(top.shape[1]) if negative[i]]
    coupling = dict(coupling or {})
    if hits:
        # most negative total weight first
        hits.sort(key=lambda i: (float(top[:, i].sum()), i))
        return Recommendation(NEGATIVE_RULE, [pca.labels[i] for i in hits], k, coupling)
    if not coupling:
        return Recommendation(FALLBACK_RULE, [], k, coupling)
    low = min(coupling.values())
    return Recommendation(FALLBACK_RULE, sorted(c for c, v in coupling.items() if v == low), k, coupling)
