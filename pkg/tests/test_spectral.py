import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from egoenergy.graph import build_graph, ego_network, is_regular
from egoenergy.spectral import (
    ConvergenceFailure,
    EnergyTriple,
    adjacency_matrix,
    ego_energies,
    ego_energies_all,
    eigenvalues,
    energies,
    graph_energy,
    jacobi_eigenvalues,
    laplacian_energy,
    laplacian_matrix,
    randic_energy,
    randic_matrix,
)
from helpers import complete, cycle, graphs, graphs_with_permutation, hypercube, path, relabel, star
import oracles

SOLVERS = ["lapack", "jacobi"]
R2 = 1 / math.sqrt(2)


def test_adjacency_examples():
    assert adjacency_matrix(complete(2)).tolist() == [[0, 1], [1, 0]]
    assert adjacency_matrix(build_graph(3, [])).tolist() == [[0] * 3] * 3
    assert adjacency_matrix(path(3)).tolist() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]


def test_randic_examples():
    assert randic_matrix(complete(2)).tolist() == [[0, 1], [1, 0]]
    np.testing.assert_allclose(randic_matrix(path(3)), [[0, R2, 0], [R2, 0, R2], [0, R2, 0]], rtol=1e-15)
    r = randic_matrix(star(3))
    np.testing.assert_allclose(r[0, 1:], [1 / math.sqrt(3)] * 3, rtol=1e-15)
    assert np.all(r[1:, 1:] == 0)


def test_randic_isolated_vertex_row_is_zero():
    r = randic_matrix(build_graph(3, [(0, 1)]))
    assert np.all(r[2] == 0) and np.all(r[:, 2] == 0)


def test_laplacian_examples():
    assert laplacian_matrix(complete(2)).tolist() == [[1, -1], [-1, 1]]
    assert laplacian_matrix(path(3)).tolist() == [[1, -1, 0], [-1, 2, -1], [0, -1, 1]]
    assert laplacian_matrix(build_graph(3, [(0, 1)]))[2].tolist() == [0, 0, 0]


@given(graphs(max_n=12))
def test_matrices_exactly_symmetric(g):
    for build in (adjacency_matrix, randic_matrix, laplacian_matrix):
        m = build(g)
        assert np.array_equal(m, m.T)
        assert np.all(np.isfinite(m))
    assert np.all(laplacian_matrix(g).sum(axis=1) == 0)


@pytest.mark.parametrize("solver", SOLVERS)
def test_eigenvalue_examples(solver):
    np.testing.assert_allclose(eigenvalues([[0, 1], [1, 0]], solver).values, [-1, 1], atol=1e-12)
    np.testing.assert_allclose(eigenvalues(adjacency_matrix(path(3)), solver).values,
                               [-math.sqrt(2), 0, math.sqrt(2)], atol=1e-12)
    # circulant: 2 - 2 cos(2 pi k / 4)
    np.testing.assert_allclose(eigenvalues(laplacian_matrix(cycle(4)), solver).values, [0, 2, 2, 4], atol=1e-12)


def test_empty_matrix_spectrum():
    assert eigenvalues(np.zeros((0, 0))).order == 0
    assert len(jacobi_eigenvalues(np.zeros((0, 0)))) == 0


def test_jacobi_convergence_failure():
    with pytest.raises(ConvergenceFailure):
        jacobi_eigenvalues(adjacency_matrix(cycle(5)), max_sweeps=0)


@st.composite
def bounded_symmetric(draw, max_order=64):
    n = draw(st.integers(1, max_order))
    m = draw(arrays(np.float64, (n, n), elements=st.floats(-n, n, allow_nan=False, allow_subnormal=False)))
    return np.triu(m) + np.triu(m, 1).T


@settings(max_examples=25)
@given(bounded_symmetric())
def test_jacobi_agrees_with_lapack(m):
    ja = jacobi_eigenvalues(m)
    la = np.linalg.eigvalsh(m)
    np.testing.assert_allclose(ja, la, atol=1e-8, rtol=0)
    assert abs(ja.sum() - np.trace(m)) <= 1e-8 * len(m)


@pytest.mark.parametrize("n", range(0, 5))
def test_spectra_match_characteristic_polynomial(n):
    """Every labelled graph on up to 4 vertices, all three matrices, both solvers."""
    for edges in oracles.all_edge_sets(n):
        g = build_graph(n, edges)
        for build, sym in ((adjacency_matrix, oracles.sym_adjacency),
                           (randic_matrix, oracles.sym_randic),
                           (laplacian_matrix, oracles.sym_laplacian)):
            expected = oracles.charpoly_roots(sym(n, edges))
            for solver in SOLVERS:
                got = eigenvalues(build(g), solver).values
                np.testing.assert_allclose(got, expected, atol=1e-8, rtol=0)


@given(graphs(max_n=12))
def test_trace_identities(g):
    tol = 1e-8 * max(g.n, 1)
    assert abs(eigenvalues(adjacency_matrix(g)).values.sum()) <= tol
    assert abs(eigenvalues(randic_matrix(g)).values.sum()) <= tol
    assert abs(eigenvalues(laplacian_matrix(g)).values.sum() - 2 * g.m) <= tol


def test_energy_examples():
    assert graph_energy(complete(2)) == pytest.approx(2.0, abs=1e-12)
    assert graph_energy(path(3)) == pytest.approx(2 * math.sqrt(2), abs=1e-12)
    assert graph_energy(cycle(4)) == pytest.approx(4.0, abs=1e-12)
    assert randic_energy(complete(2)) == pytest.approx(2.0, abs=1e-12)
    assert randic_energy(build_graph(1, [])) == 0.0
    assert laplacian_energy(cycle(4)) == pytest.approx(4.0, abs=1e-12)
    assert laplacian_energy(complete(2)) == pytest.approx(2.0, abs=1e-12)
    assert laplacian_energy(build_graph(4, [])) == 0.0


@pytest.mark.parametrize("n", range(2, 9))
def test_randic_energy_of_complete_graph(n):
    assert randic_energy(complete(n)) == pytest.approx(2.0, abs=1e-12)


def test_ego_energies_of_star():
    g = star(3)
    center = ego_energies(g, 0)
    # star spectra: adjacency {+-sqrt3, 0, 0}, Randic {+-1, 0, 0}, Laplacian {0, 1, 1, 4} around 2m/n = 1.5
    lap = oracles.charpoly_roots(oracles.sym_laplacian(4, g.edges))
    assert center.graph_energy == pytest.approx(2 * math.sqrt(3), abs=1e-12)
    assert center.randic_energy == pytest.approx(2.0, abs=1e-12)
    assert center.laplacian_energy == pytest.approx(sum(abs(x - 1.5) for x in lap), abs=1e-12)
    assert center.laplacian_energy == pytest.approx(5.0, abs=1e-12)
    np.testing.assert_allclose(ego_energies(g, 2), (2, 2, 2), atol=1e-12)


def test_ego_energies_isolated_vertex():
    assert ego_energies(build_graph(3, [(0, 1)]), 2) == EnergyTriple(0.0, 0.0, 0.0)


@given(graphs(min_n=1, max_n=12))
def test_ego_energies_equal_energies_of_the_egonet(g):
    table = ego_energies_all(g)
    for v in range(g.n):
        sub = ego_network(g, v).subgraph
        np.testing.assert_array_equal(table[v], energies(sub))
        assert energies(sub).graph_energy == pytest.approx(graph_energy(sub), abs=1e-12)
        assert energies(sub).randic_energy == pytest.approx(randic_energy(sub), abs=1e-12)
        assert energies(sub).laplacian_energy == pytest.approx(laplacian_energy(sub), abs=1e-12)


@given(graphs(max_n=12))
def test_energies_nonnegative(g):
    assert all(e >= 0 and math.isfinite(e) for e in energies(g))


@given(graphs_with_permutation(max_n=10))
def test_energies_invariant_under_relabelling(gp):
    g, perm = gp
    h = relabel(g, perm)
    np.testing.assert_allclose(energies(g), energies(h), atol=1e-9)
    table_g = ego_energies_all(g)
    table_h = ego_energies_all(h)
    np.testing.assert_allclose(table_g, table_h[list(perm)], atol=1e-9)


@pytest.mark.parametrize("g", [cycle(n) for n in range(3, 13)] + [complete(n) for n in range(2, 9)] + [hypercube(3)],
                         ids=lambda g: f"n{g.n}m{g.m}")
def test_regular_graphs_have_equal_laplacian_and_graph_energy(g):
    assert is_regular(g)
    assert abs(laplacian_energy(g) - graph_energy(g)) < 1e-7


def laplacian_bounds(g):
    n, m = g.n, g.m
    avg = 2 * m / n
    big_m = m + 0.5 * sum((g.degree(v) - avg) ** 2 for v in range(n))
    return {
        "sqrt(2Mn)": math.sqrt(2 * big_m * n),
        "2m/n + sqrt(...)": avg + math.sqrt((n - 1) * max(2 * big_m - avg**2, 0.0)),
        "2sqrt(M)": 2 * math.sqrt(big_m),
        "2M": 2 * big_m,
    }


@given(graphs(min_n=2, max_n=12))
def test_laplacian_energy_bounds(g):
    if g.m == 0:
        return
    e = laplacian_energy(g)
    b = laplacian_bounds(g)
    assert e <= b["sqrt(2Mn)"] + 1e-9
    assert e <= b["2m/n + sqrt(...)"] + 1e-9
    assert b["2sqrt(M)"] - 1e-9 <= e <= b["2M"] + 1e-9
