"""Named graphs and hypothesis strategies shared by the tests."""

import itertools

import hypothesis.strategies as st

from egoenergy.graph import build_graph


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return build_graph(n, itertools.combinations(range(n), 2))


def star(leaves):
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def hypercube(dim):
    n = 1 << dim
    return build_graph(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(dim) if v < v ^ (1 << b)])


@st.composite
def graphs(draw, min_n=0, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def graphs_with_permutation(draw, min_n=1, max_n=10):
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(range(g.n)))
    return g, perm


def relabel(g, perm):
    return build_graph(g.n, [(perm[i], perm[j]) for i, j in g.edges])
