"""Per-vertex centrality measures and the assembled feature table."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse.csgraph import shortest_path

from .graph import Graph, connected_components
from .spectral import ConvergenceFailure, EnergyTriple, ego_energies_all

FEATURES = (
    "degree",
    "betweenness",
    "closeness_paper",
    "clustering",
    "eigencentrality",
    "graph_energy",
    "randic_energy",
    "laplacian_energy",
)

CLUSTERING_VARIANTS = ("standard", "paper")

EIG_MAX_ITER = 10_000
EIG_TOL = 1e-10


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def distance_matrix(g: Graph) -> np.ndarray:
    """Hop distances; ``inf`` between components."""
    if g.n == 0:
        return np.zeros((0, 0))
    return shortest_path(g.dense_adjacency, method="D", directed=False, unweighted=True)


def betweenness_all(g: Graph, dist: np.ndarray | None = None) -> np.ndarray:
    """Unnormalised betweenness over unordered pairs, endpoints excluded.

    Brandes' dependency accumulation, run for all sources at once: path counts
    are propagated outward one BFS level at a time as matrix products, then
    dependencies are pushed back level by level.
    """
    n = g.n
    if n < 3 or g.m == 0:
        return np.zeros(n)
    a = g.dense_adjacency
    d = distance_matrix(g) if dist is None else dist
    finite = np.isfinite(d)
    depth = int(d[finite].max())
    level = [d == k for k in range(depth + 1)]

    sigma = np.eye(n)
    for k in range(1, depth + 1):
        sigma += ((sigma * level[k - 1]) @ a) * level[k]

    delta = np.zeros((n, n))
    safe_sigma = np.where(finite, sigma, 1.0)
    for k in range(depth, 0, -1):
        coef = np.where(level[k], (1.0 + delta) / safe_sigma, 0.0)
        delta += (coef @ a) * sigma * level[k - 1]
    np.fill_diagonal(delta, 0.0)
    return delta.sum(axis=0) / 2.0


def closeness_all(g: Graph, dist: np.ndarray | None = None) -> np.ndarray:
    """Mean distance to every vertex (smaller is more central).

    Unreachable vertices are left out of the sum while the ``1/n`` factor
    stays, so isolated vertices score 0.
    """
    if g.n == 0:
        return np.zeros(0)
    d = distance_matrix(g) if dist is None else dist
    return np.where(np.isfinite(d), d, 0.0).sum(axis=1) / g.n


def _triangles_x2(g: Graph) -> np.ndarray:
    a = g.dense_adjacency
    return ((a @ a) * a).sum(axis=1)  # 2 * edges among neighbours


def clustering_all(g: Graph, variant: str = "standard") -> np.ndarray:
    """Local clustering; 0 for vertices with fewer than two neighbours.

    ``standard`` is neighbour edges over k(k-1)/2. ``paper`` counts every edge
    of the egonet (spokes included) over ``|V_i|(|V_i| - 1)``.
    """
    if variant not in CLUSTERING_VARIANTS:
        raise ValueError(f"unknown clustering variant {variant!r}")
    if g.n == 0:
        return np.zeros(0)
    k = g.degrees().astype(float)
    t2 = _triangles_x2(g)
    out = np.zeros(g.n)
    if variant == "standard":
        ok = k >= 2
        out[ok] = t2[ok] / (k[ok] * (k[ok] - 1))
    else:
        ok = k >= 1
        out[ok] = (k[ok] + t2[ok] / 2) / ((k[ok] + 1) * k[ok])
    return out


def clustering(g: Graph, v: int, variant: str = "standard") -> float:
    return float(clustering_all(g, variant)[v])


def _leading_vector(a: np.ndarray, max_iter: int, tol: float) -> np.ndarray:
    shift = 1.0 + a.sum(axis=1).max()
    x = np.ones(a.shape[0])
    for _ in range(max_iter):
        y = a @ x + shift * x
        y /= y.max()
        if np.abs(y - x).max() < tol:
            return y
        x = y
    raise ConvergenceFailure(f"power iteration did not settle within {max_iter} iterations")


def eigencentrality_all(g: Graph, max_iter: int = EIG_MAX_ITER, tol: float = EIG_TOL) -> np.ndarray:
    """Leading adjacency eigenvector per component, scaled to max 1 in each.

    Power iteration on ``A + (1 + max_degree) I``; the shift keeps bipartite
    components from oscillating. Single-vertex components get 0.
    """
    out = np.zeros(g.n)
    a = g.dense_adjacency
    for comp in connected_components(g):
        if len(comp) < 2:
            continue
        idx = np.array(sorted(comp))
        out[idx] = _leading_vector(a[np.ix_(idx, idx)], max_iter, tol)
    return out


@dataclass(frozen=True)
class VertexFeatures:
    vertex: int
    degree: int
    betweenness: float
    closeness_paper: float
    clustering: float
    eigencentrality: float
    energies: EnergyTriple

    def row(self) -> tuple:
        return (self.degree, self.betweenness, self.closeness_paper, self.clustering,
                self.eigencentrality, *self.energies)


def feature_matrix(g: Graph, clustering_variant: str = "standard") -> np.ndarray:
    """``(n, 8)`` array with columns in ``FEATURES`` order."""
    dist = distance_matrix(g)
    cols = [
        g.degrees().astype(float),
        betweenness_all(g, dist),
        closeness_all(g, dist),
        clustering_all(g, clustering_variant),
        eigencentrality_all(g),
    ]
    return np.column_stack([*cols, ego_energies_all(g)]) if g.n else np.zeros((0, len(FEATURES)))


def features_all(g: Graph, clustering_variant: str = "standard") -> list[VertexFeatures]:
    table = feature_matrix(g, clustering_variant)
    return [
        VertexFeatures(v, int(r[0]), float(r[1]), float(r[2]), float(r[3]), float(r[4]),
                       EnergyTriple(float(r[5]), float(r[6]), float(r[7])))
        for v, r in enumerate(table)
    ]
