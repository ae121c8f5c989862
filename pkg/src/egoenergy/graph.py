"""Immutable undirected simple graphs, egocentric networks and edge-list I/O."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable

import numpy as np


class GraphError(ValueError):
    """Base class for invalid graph input."""


class SelfLoop(GraphError):
    def __init__(self, vertex: int):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class VertexOutOfRange(GraphError):
    def __init__(self, vertex: int, n: int):
        super().__init__(f"vertex {vertex} outside [0, {n})")
        self.vertex = vertex
        self.n = n


class EdgeListFormatError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``edges`` holds each edge once as ``(i, j)`` with ``i < j``, sorted.
    Build instances with :func:`build_graph`; the constructor does not validate.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> np.ndarray:
        return np.fromiter((len(a) for a in self.adjacency), dtype=np.int64, count=self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    @cached_property
    def dense_adjacency(self) -> np.ndarray:
        """0/1 float matrix; shared and read-only."""
        a = np.zeros((self.n, self.n))
        if self.edges:
            e = np.asarray(self.edges)
            a[e[:, 0], e[:, 1]] = 1.0
            a[e[:, 1], e[:, 0]] = 1.0
        a.setflags(write=False)
        return a


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate ``edge_list`` and return a :class:`Graph`; duplicate edges collapse."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    pairs = set()
    for i, j in edge_list:
        i, j = int(i), int(j)
        for v in (i, j):
            if not 0 <= v < n:
                raise VertexOutOfRange(v, n)
        if i == j:
            raise SelfLoop(i)
        pairs.add((i, j) if i < j else (j, i))
    edges = tuple(sorted(pairs))
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    return Graph(n, edges, tuple(tuple(sorted(a)) for a in adj))


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(v, g.n)


@dataclass(frozen=True)
class EgoNetwork:
    """Radius-1 egocentric network; local index 0 is the ego."""

    ego: int
    members: tuple[int, ...]
    subgraph: Graph
    index_map: dict[int, int] = field(compare=False)


def ego_members(g: Graph, v: int) -> tuple[int, ...]:
    _check_vertex(g, v)
    return (v, *g.adjacency[v])


def ego_network(g: Graph, v: int) -> EgoNetwork:
    members = ego_members(g, v)
    index = {u: k for k, u in enumerate(members)}
    local = []
    for u in members:
        for w in g.adjacency[u]:
            if u < w and w in index:
                local.append((index[u], index[w]))
    return EgoNetwork(v, members, build_graph(len(members), local), index)


def connected_components(g: Graph) -> list[set[int]]:
    """Components ordered by their smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def is_regular(g: Graph) -> bool:
    return g.n == 0 or len({len(a) for a in g.adjacency}) == 1


# -- edge-list files -------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    """Parse the whitespace edge-list format.

    ``#`` lines are comments, except a ``# n=<count>`` header which fixes the
    vertex count. Without it, n is the largest id plus one.
    """
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip().replace(" ", "")
            if body.startswith("n="):
                try:
                    n = int(body[2:])
                except ValueError:
                    raise EdgeListFormatError(f"line {lineno}: bad header {raw!r}") from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListFormatError(f"line {lineno}: expected two ids, got {raw!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListFormatError(f"line {lineno}: non-integer id in {raw!r}") from None
        if i < 0 or j < 0:
            raise EdgeListFormatError(f"line {lineno}: negative id in {raw!r}")
        pairs.append((i, j))
    if n is None:
        n = 1 + max((max(p) for p in pairs), default=-1)
    return build_graph(n, pairs)


def read_edgelist(path: str | Path) -> Graph:
    return parse_edgelist(Path(path).read_text(encoding="utf-8"))


def format_edgelist(g: Graph) -> str:
    # header only when the largest id would not recover n
    top = max((j for _, j in g.edges), default=-1)
    lines = [] if top + 1 == g.n else [f"# n={g.n}"]
    lines.extend(f"{i} {j}" for i, j in g.edges)
    return "".join(line + "\n" for line in lines)


def write_edgelist(g: Graph, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edgelist(g))
