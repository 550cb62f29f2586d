import itertools

import numpy as np
import pytest

from conftest import TEST_MATRIX, get_instance, instance_id
from dualpolar.errors import InvalidParameterError, InvariantViolation
from dualpolar.forms import b_eval
from dualpolar.formulas import ParamTriple, eval_srg
from dualpolar.graphs import (Graph, SrgParams, bfs_distances, check_distance_law,
                              eigen_multiplicity, measure_srg)


def floyd_warshall(A):
    n = len(A)
    D = np.where(np.asarray(A) == 1, 1, n + 1).astype(np.int64)
    np.fill_diagonal(D, 0)
    for k in range(n):
        D = np.minimum(D, D[:, k:k + 1] + D[k:k + 1, :])
    return D


def k33():
    return Graph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])


def test_k33_is_strongly_regular():
    assert measure_srg(k33()) == SrgParams(6, 3, 0, 3)


def test_cycle_is_not_strongly_regular():
    C6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    with pytest.raises(InvariantViolation):
        measure_srg(C6)


def test_irregular_graph_rejected():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(InvariantViolation, match="not regular"):
        measure_srg(path)


def test_graph_validation():
    with pytest.raises(InvalidParameterError):
        Graph(np.zeros((2, 3)))
    with pytest.raises(InvariantViolation):
        Graph([[0, 1], [0, 0]])
    with pytest.raises(InvariantViolation):
        Graph.from_edges(2, [(1, 1)])


def test_disconnected_distances():
    G = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(InvariantViolation, match="disconnected"):
        G.distances
    with pytest.raises(InvariantViolation):
        bfs_distances(G, 0)


def test_infeasible_srg_params():
    with pytest.raises(InvariantViolation):
        SrgParams(6, 3, 1, 3)
    with pytest.raises(InvariantViolation):
        SrgParams(15, 6, 1, 3, m1=9, m2=4)


@pytest.mark.parametrize("sel", TEST_MATRIX, ids=instance_id)
def test_dual_graph_distances_match_floyd_warshall(sel):
    G = get_instance(*sel).dual_graph
    fw = floyd_warshall(G.adjacency)
    assert np.array_equal(G.distances, fw)
    assert G.distances[0].tolist() == bfs_distances(G, 0)


@pytest.mark.parametrize("sel", TEST_MATRIX, ids=instance_id)
def test_distance_law(sel):
    inst = get_instance(*sel)
    assert check_distance_law(inst.P, inst.dual_graph, inst.generators)
    assert int(inst.dual_graph.distances.max()) == inst.P.d


@pytest.mark.parametrize("sel", TEST_MATRIX, ids=instance_id)
def test_dual_graph_is_regular_with_known_degree(sel):
    inst = get_instance(*sel)
    t = ParamTriple.for_family(*sel)
    q, d = t.q, t.d
    expected = t.qp(t.e2) * (q ** d - 1) / (q - 1)
    assert set(inst.dual_graph.degrees().tolist()) == {int(expected)}


def test_distance_law_detects_tampering():
    inst = get_instance("Cd", 2, 2)
    i, j = inst.dual_graph.edges()[0]
    edges = [e for e in inst.dual_graph.edges() if e != (i, j)]
    bad = Graph.from_edges(inst.dual_graph.n, edges)
    check = check_distance_law(inst.P, bad, inst.generators)
    assert not check and check.witness is not None
    short = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert not check_distance_law(inst.P, short, inst.generators)


@pytest.mark.parametrize("sel", TEST_MATRIX, ids=instance_id)
def test_collinearity_adjacency_oracle(sel):
    inst = get_instance(*sel)
    P = inst.P
    vecs = [p.rows[0] for p in inst.points]
    A = inst.collinearity.adjacency
    for i, j in itertools.islice(itertools.combinations(range(len(vecs)), 2), 3000):
        assert A[i, j] == (b_eval(P, vecs[i], vecs[j]) == 0)


def common_neighbour_oracle(A):
    n = len(A)
    nb = [set(np.flatnonzero(r).tolist()) for r in A]
    a = {len(nb[i] & nb[j]) for i in range(n) for j in range(i + 1, n) if A[i][j]}
    c = {len(nb[i] & nb[j]) for i in range(n) for j in range(i + 1, n) if not A[i][j]}
    return a, c


@pytest.mark.parametrize("sel", [s for s in TEST_MATRIX if s != ("2A_even", 4, 2)],
                         ids=instance_id)
def test_srg_parameters(sel):
    inst = get_instance(*sel)
    srg = eval_srg(ParamTriple.for_family(*sel))
    measured = measure_srg(inst.collinearity)
    assert (measured.n, measured.k, measured.a, measured.c) == srg[:4]
    a, c = common_neighbour_oracle(inst.collinearity.adjacency)
    assert a == {srg.a} and c == {srg.c}


@pytest.mark.parametrize("sel", TEST_MATRIX, ids=instance_id)
def test_spectrum_against_floating_point(sel):
    inst = get_instance(*sel)
    srg = eval_srg(ParamTriple.for_family(*sel))
    ev = np.linalg.eigvalsh(inst.collinearity.adjacency.astype(float))
    rounded = np.rint(ev).astype(int)
    assert np.allclose(ev, rounded, atol=1e-6)
    values, counts = np.unique(rounded, return_counts=True)
    spectrum = dict(zip(values.tolist(), counts.tolist()))
    assert spectrum == {srg.k: 1, srg.theta1: srg.m1, srg.theta2: srg.m2}


@pytest.mark.parametrize("sel", [("Cd", 2, 2), ("Dd", 2, 3), ("2D", 2, 2), ("2A_odd", 4, 2)],
                         ids=instance_id)
def test_exact_multiplicities(sel):
    inst = get_instance(*sel)
    srg = eval_srg(ParamTriple.for_family(*sel))
    A = inst.collinearity
    assert eigen_multiplicity(A, srg.theta1) == srg.m1
    assert eigen_multiplicity(A, srg.theta2) == srg.m2
    assert eigen_multiplicity(A, srg.k) == 1


def test_plus_one_is_not_an_eigenvalue():
    # q^(d-1) + 1 is not in the spectrum; q^(d-1) - 1 is
    inst = get_instance("Cd", 2, 2)
    assert eigen_multiplicity(inst.collinearity, 3) == 0
    assert eigen_multiplicity(inst.collinearity, 1) == 9
    assert eigen_multiplicity(inst.collinearity, -3) == 5
