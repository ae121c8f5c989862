"""Pearson correlation matrices and Shannon entropy of energy dispersion."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .centrality import FEATURES, VertexFeatures

DEFAULT_BINS = 32

# Egonets that are isomorphic but listed in a different local order can give
# energies differing in the last few ulps; a column whose spread is below this
# (relative to its magnitude) counts as constant.
CONSTANT_RTOL = 1e-9


class LengthMismatch(ValueError):
    pass


class TooFewSamples(ValueError):
    pass


class EmptyInput(ValueError):
    pass


def is_constant(x: np.ndarray) -> bool:
    lo, hi = float(np.min(x)), float(np.max(x))
    return hi - lo <= CONSTANT_RTOL * max(1.0, abs(lo), abs(hi))


def pearson(x: Sequence[float], y: Sequence[float]) -> float | None:
    """Sample Pearson r, or ``None`` when either column is constant."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise LengthMismatch(f"{x.shape} vs {y.shape}")
    if x.size < 2:
        raise TooFewSamples(f"need at least 2 samples, got {x.size}")
    if is_constant(x) or is_constant(y):
        return None
    dx = x - x.mean()
    dy = y - y.mean()
    r = float(dx @ dy) / math.sqrt(float(dx @ dx) * float(dy @ dy))
    return max(-1.0, min(1.0, r))


@dataclass(frozen=True)
class CorrelationMatrix:
    labels: tuple[str, ...]
    values: np.ndarray  # NaN marks an undefined coefficient

    def get(self, a: str, b: str) -> float | None:
        r = self.values[self.labels.index(a), self.labels.index(b)]
        return None if np.isnan(r) else float(r)

    def pairs(self) -> list[tuple[str, str]]:
        k = len(self.labels)
        return [(self.labels[i], self.labels[j]) for i in range(k) for j in range(i + 1, k)]

    def upper(self) -> list[float | None]:
        return [self.get(a, b) for a, b in self.pairs()]


def correlation_table(table: np.ndarray, labels: Sequence[str] = FEATURES) -> CorrelationMatrix:
    """Pairwise :func:`pearson` over the columns of ``table``."""
    k = table.shape[1]
    vals = np.full((k, k), np.nan)
    for i in range(k):
        for j in range(i, k):
            r = pearson(table[:, i], table[:, j])
            if r is not None:
                vals[i, j] = vals[j, i] = 1.0 if i == j else r
    return CorrelationMatrix(tuple(labels), vals)


def correlation_matrix(features: Sequence[VertexFeatures]) -> CorrelationMatrix:
    return correlation_table(np.array([f.row() for f in features], dtype=float))


class EntropyTriple(NamedTuple):
    h_graph: float
    h_randic: float
    h_laplacian: float


def shannon_entropy(values: Sequence[float], bins: int = DEFAULT_BINS) -> float:
    """Entropy in nats of an equal-width histogram over ``[min, max]``.

    Constant input (see ``CONSTANT_RTOL``) has entropy 0.
    """
    x = np.asarray(values, dtype=float)
    if x.size == 0:
        raise EmptyInput("entropy of an empty column")
    if bins < 1:
        raise ValueError(f"bins must be >= 1, got {bins}")
    if is_constant(x):
        return 0.0
    counts, _ = np.histogram(x, bins=bins, range=(float(x.min()), float(x.max())))
    p = counts[counts > 0] / x.size
    return float(-(p * np.log(p)).sum()) + 0.0


def energy_entropies(energy_table: np.ndarray, bins: int = DEFAULT_BINS) -> EntropyTriple:
    """Entropies of the three energy columns of an ``(n, 3)`` table."""
    return EntropyTriple(*(shannon_entropy(energy_table[:, c], bins) for c in range(3)))
