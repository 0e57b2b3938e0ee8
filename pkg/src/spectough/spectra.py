"""Laplacian matrices and their full spectra via cyclic Jacobi sweeps.

The eigensolver is a plain dense cyclic Jacobi iteration: at these orders
(n <= 62) it is fast enough, bit-for-bit portable, and easy to audit.
Sweeps stop when the off-diagonal Frobenius norm drops below 1e-12 times
the Frobenius norm of the input matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EigenConvergenceError
from .graphs import Graph, iter_bits

MAX_SWEEPS = 100
OFFDIAG_REL_TOL = 1e-12


def laplacian_matrix(g: Graph) -> np.ndarray:
    """Degree matrix minus adjacency matrix; every row sums to zero."""
    m = np.zeros((g.n, g.n))
    for v, row in enumerate(g.adj):
        m[v, v] = row.bit_count()
        for u in iter_bits(row):
            m[v, u] = -1.0
    return m


def jacobi_eigenvalues(matrix: np.ndarray) -> list[float]:
    """Eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi rotations.

    Raises EigenConvergenceError if MAX_SWEEPS sweeps do not reach the
    off-diagonal threshold (never silently returns a bad spectrum).
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or not np.allclose(a, a.T):
        raise ValueError("matrix must be square and symmetric")
    if n == 1:
        return [float(a[0, 0])]
    fro = float(np.linalg.norm(a))
    if fro == 0.0:
        return [0.0] * n
    thresh = OFFDIAG_REL_TOL * fro
    skip = 1e-300  # rotations on exact zeros are pointless
    for _ in range(MAX_SWEEPS):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= thresh:
            return sorted(float(x) for x in np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (
                    abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = 0.0
                a[q, p] = 0.0
    raise EigenConvergenceError(
        f"Jacobi did not converge within {MAX_SWEEPS} sweeps (n={n})")


@dataclass(frozen=True)
class Spectrum:
    """Ascending Laplacian eigenvalues plus the tolerance for comparing them."""

    values: tuple[float, ...]
    tol: float

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def mu2(self) -> float:
        return self.values[1]

    @property
    def mun(self) -> float:
        return self.values[-1]

    @property
    def ratio(self) -> float:
        return self.mu2 / self.mun


def spectrum(g: Graph) -> Spectrum:
    values = jacobi_eigenvalues(laplacian_matrix(g))
    return Spectrum(values=tuple(values), tol=1e-9 * g.n)


@dataclass(frozen=True)
class EigenSummary:
    mu2: float
    mun: float
    delta: int
    dmax: int
    ratio: float


def eigen_summary(g: Graph, spec: Spectrum | None = None) -> EigenSummary:
    """mu2, mun, min/max degree, and the eigenratio mu2/mun."""
    if g.edge_count == 0:
        raise ValueError("eigen_summary needs at least one edge (mun would be 0)")
    if spec is None:
        spec = spectrum(g)
    return EigenSummary(mu2=spec.mu2, mun=spec.mun, delta=g.min_degree(),
                        dmax=g.max_degree(), ratio=spec.mu2 / spec.mun)
