"""Normalized Laplacian spectra and the machinery built on them.

For a graph with adjacency A and degree matrix D the normalized
Laplacian is D^{-1/2} (D - A) D^{-1/2}: ones on the diagonal and
-1/sqrt(d(u) d(v)) at adjacent pairs. Its spectrum sits in [0, 2], the
smallest eigenvalue is 0 with eigenvector D^{1/2} 1, and the second
smallest (lambda_2) is positive exactly when the graph is connected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLERANCES
from .graphs import Graph
from .jacobi import jacobi_eigh

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT5 = math.sqrt(5.0)
SQRT6 = math.sqrt(6.0)
SQRT10 = math.sqrt(10.0)


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues plus the residual bound achieved by the solver."""

    values: tuple[float, ...]
    residual: float = 0.0

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> float:
        return self.values[i]

    def close_to(self, other, tol: float) -> bool:
        other_vals = other.values if isinstance(other, Spectrum) else tuple(other)
        return multiset_close(self.values, other_vals, tol)


def multiset_close(a, b, tol: float) -> bool:
    """Sorted elementwise comparison of two real multisets."""
    a = sorted(a)
    b = sorted(b)
    if len(a) != len(b):
        return False
    return all(abs(x - y) <= tol for x, y in zip(a, b))


def as_sym_matrix(entries) -> np.ndarray:
    """Validate and return a dense symmetric float matrix."""
    m = np.array(entries, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError("matrix entries must be finite")
    if not (m == m.T).all():
        raise ValueError("matrix must be exactly symmetric")
    return m


def normalized_laplacian(g: Graph) -> np.ndarray:
    """D^{-1/2} (D - A) D^{-1/2}; every vertex must have degree >= 1."""
    degs = g.degrees()
    isolated = [v for v, d in enumerate(degs) if d == 0]
    if isolated:
        raise ValueError(f"isolated vertices {isolated} have no normalized Laplacian")
    m = np.eye(g.n)
    for u, v in g.edges:
        w = -1.0 / math.sqrt(degs[u] * degs[v])
        m[u, v] = w
        m[v, u] = w
    return m


def eigensystem_sym(matrix: np.ndarray) -> tuple[Spectrum, np.ndarray]:
    """All eigenpairs via cyclic Jacobi, with the residual actually checked.

    The residual max_i ||M v_i - w_i v_i||_2 must come out below
    1e-10 * max(1, ||M||_F); Jacobi on these sizes lands orders of
    magnitude under that.
    """
    m = as_sym_matrix(matrix)
    w, v, _, _ = jacobi_eigh(m)
    resid = float(np.max(np.linalg.norm(m @ v - v * w[None, :], axis=0))) if len(w) else 0.0
    norm = max(1.0, float(np.linalg.norm(m)))
    if resid > DEFAULT_TOLERANCES.eig_residual * norm:
        raise ArithmeticError(
            f"eigenpair residual {resid:.3e} exceeds {DEFAULT_TOLERANCES.eig_residual * norm:.3e}"
        )
    return Spectrum(tuple(float(x) for x in w), resid), v


def eigenvalues_sym(matrix: np.ndarray) -> Spectrum:
    return eigensystem_sym(matrix)[0]


def graph_spectrum(g: Graph) -> Spectrum:
    return eigenvalues_sym(normalized_laplacian(g))


def lambda_k(g: Graph, k: int) -> float:
    """k-th smallest normalized Laplacian eigenvalue, k starting at 1."""
    if not (1 <= k <= g.n):
        raise ValueError(f"k must lie in 1..{g.n}, got {k}")
    return graph_spectrum(g).values[k - 1]


def lambda2(g: Graph) -> float:
    return lambda_k(g, 2)


def rayleigh_quotient(g: Graph, f) -> float:
    """sum over edges of (f(u)-f(v))^2 over sum of d(v) f(v)^2."""
    f = np.asarray(f, dtype=np.float64)
    if f.shape != (g.n,):
        raise ValueError(f"vertex function must have length {g.n}")
    degs = np.array(g.degrees(), dtype=np.float64)
    denom = float(degs @ (f * f))
    if denom <= 0.0:
        raise ValueError("vertex function has zero degree-weighted norm")
    num = 0.0
    for u, v in g.edges:
        num += (f[u] - f[v]) ** 2
    return num / denom


def harmonic_eigenfunction(g: Graph) -> np.ndarray:
    """The vertex function f = D^{-1/2} g_2 attaining lambda_2 in the
    Rayleigh quotient, normalized to unit degree-weighted norm.

    Satisfies sum_v d(v) f(v) = 0 (orthogonality to D 1).
    """
    if g.n < 2:
        raise ValueError("need at least two vertices")
    degs = np.array(g.degrees(), dtype=np.float64)
    spec, vecs = eigensystem_sym(normalized_laplacian(g))
    f = vecs[:, 1] / np.sqrt(degs)
    f /= math.sqrt(float(degs @ (f * f)))
    return f


def principal_submatrix(matrix: np.ndarray, v: int) -> np.ndarray:
    """Delete row and column v."""
    m = as_sym_matrix(matrix)
    if not (0 <= v < m.shape[0]):
        raise ValueError(f"index {v} out of range for dimension {m.shape[0]}")
    return np.delete(np.delete(m, v, axis=0), v, axis=1)


def check_interlacing(outer: Spectrum, inner: Spectrum, tol: float | None = None) -> bool:
    """x1 <= y1 <= x2 <= ... <= y_{n-1} <= x_n for |inner| = |outer| - 1."""
    if len(inner) != len(outer) - 1:
        raise ValueError(
            f"inner spectrum must have one fewer value ({len(outer) - 1}), got {len(inner)}"
        )
    tol = DEFAULT_TOLERANCES.identity if tol is None else tol
    x, y = outer.values, inner.values
    return all(x[i] - tol <= y[i] <= x[i + 1] + tol for i in range(len(y)))


def cycle_lambda2_closed_form(n: int) -> float:
    """lambda_2 of the n-cycle: 1 - cos(2 pi / n)."""
    if n < 3:
        raise ValueError(f"cycle length must be >= 3, got {n}")
    return 1.0 - math.cos(2.0 * math.pi / n)


def spectrum_csv(spec: Spectrum) -> str:
    """One eigenvalue per line, 17 significant digits, ascending."""
    return "\n".join(f"{x:.17g}" for x in spec.values) + "\n"


# ---------------------------------------------------------------------------
# Closed-form spectra of the broom families with the root row/column deleted.
#
# Removing the broom root from one of the catalogued families splits the
# graph into the broom branches (each an isolated block of the principal
# submatrix) and one fixed remnant: the opened cycle with its flanker
# trees. Each branch type contributes a fixed block spectrum:
#
#   bare leaf            -> {1}
#   one-leaf branch      -> {1 -+ sqrt(2)/2}
#   two-leaf branch      -> {1 - sqrt(6)/3, 1, 1 + sqrt(6)/3}
#
# and the remnant's spectrum below is exact per family. The two quartic
# remnants come from weighted 4-paths: eigenvalues 1 +- mu with
# mu^2 = (S +- sqrt(S^2 - 4P)) / 2 for S the sum of squared couplings
# and P the product of the two end couplings squared.
# ---------------------------------------------------------------------------

def _quartic_remnant(s: float, p: float) -> list[float]:
    inner = math.sqrt(s * s - 4.0 * p)
    mu_hi = math.sqrt((s + inner) / 2.0)
    mu_lo = math.sqrt((s - inner) / 2.0)
    return [1.0 - mu_hi, 1.0 - mu_lo, 1.0 + mu_lo, 1.0 + mu_hi]


_ROOT_DELETED_REMNANTS: dict[str, list[float]] = {
    # opened 5-cycle: plain 4-path with couplings 1/2
    "H42": [
        0.75 - SQRT5 / 4.0,
        1.25 - SQRT5 / 4.0,
        0.75 + SQRT5 / 4.0,
        1.25 + SQRT5 / 4.0,
    ],
    # opened 4-cycle, pendant on each neighbor: symmetric weighted 5-path
    "H94": [
        1.0 - SQRT6 / 3.0,
        1.0 - SQRT3 / 3.0,
        1.0,
        1.0 + SQRT3 / 3.0,
        1.0 + SQRT6 / 3.0,
    ],
    # opened 4-cycle, pendant on the opposite vertex: weighted claw
    "A8": [1.0 - SQRT6 / 3.0, 1.0, 1.0, 1.0 + SQRT6 / 3.0],
    # opened 4-cycle, pendant on one neighbor: 4-path, couplings 1/3, 1/6, 1/4
    "A11": _quartic_remnant(1.0 / 3.0 + 1.0 / 6.0 + 1.0 / 4.0, (1.0 / 3.0) * (1.0 / 4.0)),
    # opened 4-cycle alone: 3-path with couplings 1/2
    "A35": [1.0 - SQRT2 / 2.0, 1.0, 1.0 + SQRT2 / 2.0],
    # opened 3-cycle, pendants on both neighbors: 4-path, couplings 1/3, 1/9, 1/3
    "B4": _quartic_remnant(1.0 / 3.0 + 1.0 / 9.0 + 1.0 / 3.0, (1.0 / 3.0) * (1.0 / 3.0)),
    # opened 3-cycle, pendant + two-leaf star on the neighbors
    "B7": [1.0 - SQRT6 / 3.0, 0.5, 1.0, 1.5, 1.0 + SQRT6 / 3.0],
    # opened 3-cycle, pendant on one neighbor: 3-path, couplings 1/3, 1/6
    "B42": [1.0 - SQRT2 / 2.0, 1.0, 1.0 + SQRT2 / 2.0],
    # opened 3-cycle, two-leaf star on one neighbor: weighted claw
    "B44": [1.0 - SQRT10 / 4.0, 1.0, 1.0, 1.0 + SQRT10 / 4.0],
    # opened 3-cycle alone: a single edge between degree-2 vertices
    "B66": [0.5, 1.5],
}


def broom_root_deleted_spectrum(family: str, counts) -> Spectrum:
    """Exact spectrum of the normalized Laplacian with the broom root
    deleted, for the catalogued broom families.

    counts are the broom's (l0, l1, l2); the multiset is the family's
    fixed remnant plus l0 copies of {1}, l1 copies of {1 -+ sqrt2/2} and
    l2 copies of {1 -+ sqrt6/3, 1}.
    """
    if family not in _ROOT_DELETED_REMNANTS:
        raise ValueError(
            f"unknown family {family!r}; expected one of {sorted(_ROOT_DELETED_REMNANTS)}"
        )
    counts = tuple(counts)
    if len(counts) > 3 or any(c < 0 for c in counts):
        raise ValueError(f"counts must be (l0, l1, l2) with l_i >= 0, got {counts}")
    l0 = counts[0] if len(counts) > 0 else 0
    l1 = counts[1] if len(counts) > 1 else 0
    l2 = counts[2] if len(counts) > 2 else 0
    values = list(_ROOT_DELETED_REMNANTS[family])
    values.extend([1.0] * l0)
    values.extend([1.0 - SQRT2 / 2.0, 1.0 + SQRT2 / 2.0] * l1)
    values.extend([1.0 - SQRT6 / 3.0, 1.0, 1.0 + SQRT6 / 3.0] * l2)
    return Spectrum(tuple(sorted(values)), 0.0)
