"""Cyclic Jacobi eigensolver for dense symmetric matrices.

Rotations sweep the upper triangle row by row until the off-diagonal
Frobenius norm drops below 1e-12 times the Frobenius norm of the input
(at most 60 sweeps). The first few sweeps skip entries below a
decreasing threshold, the classic warm-up that speeds convergence.

The kernel is plain nested loops so numba can compile it; without numba
the same function runs under CPython, slower but bit-for-bit the same
algorithm.
"""

from __future__ import annotations

import numpy as np

MAX_SWEEPS = 60
REL_OFF_TOL = 1e-12


class ConvergenceError(RuntimeError):
    """Raised when the sweep budget runs out; carries the achieved norm."""

    def __init__(self, off_norm: float, target: float, sweeps: int):
        super().__init__(
            f"no convergence after {sweeps} sweeps: "
            f"off-diagonal norm {off_norm:.3e} > target {target:.3e}"
        )
        self.off_norm = off_norm
        self.target = target
        self.sweeps = sweeps


def _jacobi_sweeps(a, v, max_sweeps, rel_tol):  # pragma: no cover - timed via wrapper
    n = a.shape[0]
    fro = 0.0
    for i in range(n):
        for j in range(n):
            fro += a[i, j] * a[i, j]
    fro = np.sqrt(fro)
    if fro == 0.0:
        return 0.0, 0
    tol = rel_tol * fro
    for sweep in range(1, max_sweeps + 1):
        off2 = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off2 += a[i, j] * a[i, j]
        off = np.sqrt(2.0 * off2)
        if off <= tol:
            return off, sweep - 1
        thresh = off / n if sweep <= 3 else 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0 or abs(apq) <= thresh:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + np.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
    off2 = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            off2 += a[i, j] * a[i, j]
    return np.sqrt(2.0 * off2), -1


try:  # compiled kernel when numba is present, plain Python otherwise
    from numba import njit

    _kernel = njit(cache=True, nogil=True)(_jacobi_sweeps)
except ImportError:  # pragma: no cover - exercised only without numba
    _kernel = _jacobi_sweeps


def jacobi_eigh(
    matrix: np.ndarray,
    max_sweeps: int = MAX_SWEEPS,
    rel_tol: float = REL_OFF_TOL,
) -> tuple[np.ndarray, np.ndarray, float, int]:
    """Eigenvalues (ascending) and orthonormal eigenvectors.

    Returns (values, vectors, off_norm, sweeps); vectors[:, i] pairs with
    values[i]. Raises ConvergenceError if the sweep budget is exhausted.
    """
    a = np.array(matrix, dtype=np.float64, order="C")
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    v = np.eye(n)
    off, sweeps = _kernel(a, v, max_sweeps, rel_tol)
    if sweeps < 0:
        fro = float(np.sqrt((np.asarray(matrix) ** 2).sum()))
        raise ConvergenceError(off, rel_tol * fro, max_sweeps)
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order], float(off), int(sweeps)
