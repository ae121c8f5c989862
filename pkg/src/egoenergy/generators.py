"""Seeded generators for the four network models.

Every generator draws from ``numpy.random.Generator(PCG64(SeedSequence(seed)))``
and consumes random numbers in a fixed order (pairs in row-major upper-triangle
order, lattice edges by offset then vertex), so a ``GenSpec`` fully determines
the resulting edge list.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from .graph import Graph, build_graph

MODELS = ("ER", "WS", "HK", "WAXMAN")

# parameter names per model, in manifest order
MODEL_PARAMS = {
    "ER": ("p",),
    "WS": ("k", "p"),
    "HK": ("m", "p_triangle"),
    "WAXMAN": ("alpha", "beta"),
}

WS_REDRAW_CAP = 100


class InvalidParam(ValueError):
    pass


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed))))


def _check_prob(name: str, p: float) -> None:
    if not (0.0 <= p <= 1.0):
        raise InvalidParam(f"{name}={p} not in [0, 1]")


def _check_n(n: int) -> None:
    if n < 0 or int(n) != n:
        raise InvalidParam(f"n={n} must be a non-negative integer")


def gen_erdos_renyi(n: int, p: float, seed: int) -> Graph:
    _check_n(n)
    _check_prob("p", p)
    rng = make_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return build_graph(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def gen_watts_strogatz(n: int, k: int, p: float, seed: int) -> Graph:
    """Ring lattice with k/2 neighbours per side, each edge rewired with probability p.

    A rewired edge keeps its first endpoint; the new target is redrawn
    uniformly until it is neither a self-loop nor a duplicate, giving up after
    ``WS_REDRAW_CAP`` draws and leaving the edge in place. The edge count is
    always ``n*k/2``.
    """
    _check_n(n)
    _check_prob("p", p)
    if k % 2 or not 0 < k < n:
        raise InvalidParam(f"k={k} must be even with 0 < k < n={n}")
    rng = make_rng(seed)
    adj = [set() for _ in range(n)]
    for i in range(n):
        for off in range(1, k // 2 + 1):
            j = (i + off) % n
            adj[i].add(j)
            adj[j].add(i)
    for off in range(1, k // 2 + 1):
        for i in range(n):
            j = (i + off) % n
            if rng.random() >= p:
                continue
            for _ in range(WS_REDRAW_CAP):
                t = int(rng.integers(n))
                if t != i and t not in adj[i]:
                    adj[i].discard(j)
                    adj[j].discard(i)
                    adj[i].add(t)
                    adj[t].add(i)
                    break
    return build_graph(n, ((i, j) for i in range(n) for j in adj[i] if i < j))


def _preferential_pick(rng, deg: np.ndarray, size: int, exclude: set[int]) -> int:
    w = deg[:size].astype(float)
    for u in exclude:
        if u < size:
            w[u] = 0.0
    total = w.sum()
    if total <= 0:
        # no eligible positive-degree vertex; fall back to uniform over the rest
        w = np.ones(size)
        for u in exclude:
            if u < size:
                w[u] = 0.0
        total = w.sum()
    return int(np.searchsorted(np.cumsum(w), rng.random() * total, side="right"))


def gen_holme_kim(n: int, m: int, p_triangle: float, seed: int) -> Graph:
    """Preferential attachment with triangle formation, grown from K_{m+1}.

    Each arriving vertex makes ``m`` edges. The first is a preferential step;
    every later one is, with probability ``p_triangle``, a link to a random
    neighbour of the previous preferential target (when one is still free),
    otherwise another preferential step.
    """
    _check_n(n)
    _check_prob("p_triangle", p_triangle)
    if not 1 <= m < n:
        raise InvalidParam(f"m={m} must satisfy 1 <= m < n={n}")
    rng = make_rng(seed)
    adj = [set() for _ in range(n)]
    deg = np.zeros(n, dtype=np.int64)
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            adj[i].add(j)
            adj[j].add(i)
    deg[: m + 1] = m

    def link(u, v):
        adj[u].add(v)
        adj[v].add(u)
        deg[u] += 1
        deg[v] += 1

    for v in range(m + 1, n):
        target = _preferential_pick(rng, deg, v, set())
        link(v, target)
        for _ in range(m - 1):
            if rng.random() < p_triangle:
                free = sorted(adj[target] - adj[v] - {v})
                if free:
                    link(v, free[int(rng.integers(len(free)))])
                    continue
            target = _preferential_pick(rng, deg, v, adj[v])
            link(v, target)
    return build_graph(n, ((i, j) for i in range(n) for j in adj[i] if i < j))


@dataclass(frozen=True)
class WaxmanLayout:
    positions: np.ndarray = field(repr=False)
    d_max: float

    def distances(self) -> np.ndarray:
        diff = self.positions[:, None, :] - self.positions[None, :, :]
        return np.sqrt((diff**2).sum(axis=-1))


def waxman_probabilities(layout: WaxmanLayout, alpha: float, beta: float) -> np.ndarray:
    """Pair connection probabilities in upper-triangle order."""
    n = len(layout.positions)
    d = layout.distances()[np.triu_indices(n, k=1)]
    if layout.d_max == 0:
        return np.full(d.shape, alpha)
    return alpha * np.exp(-d / (beta * layout.d_max))


def gen_waxman(n: int, alpha: float, beta: float, seed: int) -> tuple[Graph, WaxmanLayout]:
    _check_n(n)
    if not 0 < alpha <= 1:
        raise InvalidParam(f"alpha={alpha} not in (0, 1]")
    if not beta > 0:
        raise InvalidParam(f"beta={beta} must be positive")
    rng = make_rng(seed)
    pos = rng.random((n, 2))
    probe = WaxmanLayout(pos, 0.0)
    d_max = float(probe.distances().max()) if n >= 2 else 0.0
    layout = WaxmanLayout(pos, d_max)
    probs = waxman_probabilities(layout, alpha, beta)
    keep = rng.random(probs.size) < probs
    iu, ju = np.triu_indices(n, k=1)
    return build_graph(n, zip(iu[keep].tolist(), ju[keep].tolist())), layout


# -- generation specs ------------------------------------------------------

@dataclass(frozen=True)
class GenSpec:
    model: str
    n: int
    params: dict[str, Any]
    seed: int

    def __post_init__(self):
        if self.model not in MODELS:
            raise InvalidParam(f"unknown model {self.model!r}")
        expected = set(MODEL_PARAMS[self.model])
        if set(self.params) != expected:
            raise InvalidParam(f"{self.model} needs params {sorted(expected)}, got {sorted(self.params)}")
        if not 0 <= int(self.seed) < 2**64:
            raise InvalidParam(f"seed {self.seed} is not a 64-bit unsigned value")

    def to_dict(self) -> dict[str, Any]:
        params = {k: self.params[k] for k in MODEL_PARAMS[self.model]}
        return {"model": self.model, "n": self.n, "params": params, "seed": self.seed}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "GenSpec":
        return cls(d["model"], int(d["n"]), dict(d["params"]), int(d["seed"]))

    @classmethod
    def from_json(cls, text: str) -> "GenSpec":
        return cls.from_dict(json.loads(text))


def validate(spec: GenSpec) -> None:
    """Raise :class:`InvalidParam` if ``spec`` could not be generated."""
    _check_n(spec.n)
    p = spec.params
    if spec.model == "ER":
        _check_prob("p", p["p"])
    elif spec.model == "WS":
        _check_prob("p", p["p"])
        k = p["k"]
        if int(k) != k or k % 2 or not 0 < k < spec.n:
            raise InvalidParam(f"k={k} must be even with 0 < k < n={spec.n}")
    elif spec.model == "HK":
        _check_prob("p_triangle", p["p_triangle"])
        m = p["m"]
        if int(m) != m or not 1 <= m < spec.n:
            raise InvalidParam(f"m={m} must satisfy 1 <= m < n={spec.n}")
    else:
        if not 0 < p["alpha"] <= 1:
            raise InvalidParam(f"alpha={p['alpha']} not in (0, 1]")
        if not p["beta"] > 0:
            raise InvalidParam(f"beta={p['beta']} must be positive")


def generate(spec: GenSpec) -> Graph:
    p = spec.params
    if spec.model == "ER":
        return gen_erdos_renyi(spec.n, p["p"], spec.seed)
    if spec.model == "WS":
        return gen_watts_strogatz(spec.n, int(p["k"]), p["p"], spec.seed)
    if spec.model == "HK":
        return gen_holme_kim(spec.n, int(p["m"]), p["p_triangle"], spec.seed)
    return gen_waxman(spec.n, p["alpha"], p["beta"], spec.seed)[0]


def write_manifest(spec: GenSpec, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(spec.to_json() + "\n")

