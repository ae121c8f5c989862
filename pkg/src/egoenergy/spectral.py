"""Adjacency, Randić and Laplacian matrices, their spectra, and the three energies.

Matrices are dense ``float64`` numpy arrays, built symmetric entry by entry.
Two symmetric eigensolvers are available: LAPACK's ``syevd`` through
``numpy.linalg.eigvalsh`` (the default, used by sweeps) and a cyclic Jacobi
solver written here. Both are checked against characteristic-polynomial roots
in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .graph import Graph, ego_members

JACOBI_MAX_SWEEPS = 100
JACOBI_OFF_TOL = 1e-12  # times matrix order


class ConvergenceFailure(RuntimeError):
    pass


# -- matrices --------------------------------------------------------------
# The *_from_adjacency builders take a dense 0/1 matrix so that egonet
# matrices can be cut straight out of the parent adjacency.

def randic_from_adjacency(a: np.ndarray) -> np.ndarray:
    d = a.sum(axis=1)
    dd = np.outer(d, d)
    out = np.zeros_like(a, dtype=float)
    edge = a != 0
    out[edge] = 1.0 / np.sqrt(dd[edge])
    return out


def laplacian_from_adjacency(a: np.ndarray) -> np.ndarray:
    out = -np.asarray(a, dtype=float)
    out[np.diag_indices_from(out)] = a.sum(axis=1)
    return out + 0.0  # normalise -0.0 entries


def adjacency_matrix(g: Graph) -> np.ndarray:
    return np.array(g.dense_adjacency)


def randic_matrix(g: Graph) -> np.ndarray:
    """Entries ``1/sqrt(d_i d_j)`` on edges; rows of isolated vertices stay zero."""
    return randic_from_adjacency(g.dense_adjacency)


def laplacian_matrix(g: Graph) -> np.ndarray:
    return laplacian_from_adjacency(g.dense_adjacency)


# -- eigenvalues -----------------------------------------------------------

@dataclass(frozen=True)
class Spectrum:
    values: np.ndarray  # ascending

    @property
    def order(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)


def _off_norm(a: np.ndarray) -> float:
    # summed directly: total minus diagonal cancels badly when one eigenvalue dominates
    return float(np.sqrt((a[~np.eye(len(a), dtype=bool)] ** 2).sum()))


def jacobi_eigenvalues(m: np.ndarray, max_sweeps: int = JACOBI_MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps over all (p, q) pairs in row order until the off-diagonal Frobenius
    norm drops below ``1e-12 * order``. Raises :class:`ConvergenceFailure`
    after ``max_sweeps`` sweeps.
    """
    a = np.array(m, dtype=float)
    n = a.shape[0]
    tol = JACOBI_OFF_TOL * max(n, 1)
    for _ in range(max_sweeps):
        off = _off_norm(a)
        if off < tol:
            return np.sort(np.diag(a).copy())
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app, aqq = a[p, p], a[q, q]
                diff = aqq - app
                if abs(apq) < 1e-150 * abs(diff):
                    t = apq / diff  # theta would overflow; t ~ 1/(2 theta)
                else:
                    theta = diff / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
    off = _off_norm(a)
    if off < tol:
        return np.sort(np.diag(a).copy())
    raise ConvergenceFailure(f"Jacobi: off-diagonal norm {off:.3e} after {max_sweeps} sweeps")


def _lapack_eigenvalues(m: np.ndarray) -> np.ndarray:
    if m.shape[0] == 0:
        return np.zeros(0)
    try:
        return np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc


_SOLVERS = {"lapack": _lapack_eigenvalues, "jacobi": jacobi_eigenvalues}


def eigenvalues(m: np.ndarray, solver: str = "lapack") -> Spectrum:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    try:
        fn = _SOLVERS[solver]
    except KeyError:
        raise ValueError(f"unknown solver {solver!r}") from None
    return Spectrum(np.sort(fn(m)))


# -- energies --------------------------------------------------------------

class EnergyTriple(NamedTuple):
    graph_energy: float
    randic_energy: float
    laplacian_energy: float


def _energies_of_adjacency(a: np.ndarray, solver: str = "lapack") -> EnergyTriple:
    n = a.shape[0]
    if n <= 1:
        return EnergyTriple(0.0, 0.0, 0.0)
    mean_deg = float(a.sum()) / n  # 2m/n
    e_g = np.abs(eigenvalues(a, solver).values).sum()
    e_r = np.abs(eigenvalues(randic_from_adjacency(a), solver).values).sum()
    e_l = np.abs(eigenvalues(laplacian_from_adjacency(a), solver).values - mean_deg).sum()
    return EnergyTriple(float(e_g), float(e_r), float(e_l))


def graph_energy(g: Graph, solver: str = "lapack") -> float:
    return float(np.abs(eigenvalues(adjacency_matrix(g), solver).values).sum())


def randic_energy(g: Graph, solver: str = "lapack") -> float:
    return float(np.abs(eigenvalues(randic_matrix(g), solver).values).sum())


def laplacian_energy(g: Graph, solver: str = "lapack") -> float:
    """Sum of |lambda_i - 2m/n| over the Laplacian spectrum (0 for n = 0)."""
    if g.n == 0:
        return 0.0
    shift = 2.0 * g.m / g.n
    return float(np.abs(eigenvalues(laplacian_matrix(g), solver).values - shift).sum())


def energies(g: Graph, solver: str = "lapack") -> EnergyTriple:
    return _energies_of_adjacency(g.dense_adjacency, solver)


def ego_energies(g: Graph, v: int, solver: str = "lapack") -> EnergyTriple:
    """Energies of the radius-1 egonet of ``v``, with degrees taken inside the egonet."""
    idx = np.asarray(ego_members(g, v))
    return _energies_of_adjacency(g.dense_adjacency[np.ix_(idx, idx)], solver)


def ego_energies_all(g: Graph, solver: str = "lapack") -> np.ndarray:
    """``(n, 3)`` array of egonet energies, columns in :class:`EnergyTriple` order."""
    out = np.zeros((g.n, 3))
    for v in range(g.n):
        out[v] = ego_energies(g, v, solver)
    return out
