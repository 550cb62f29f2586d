from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import TEST_MATRIX, get_instance, instance_id
from dualpolar.errors import InvariantViolation
from dualpolar.exactla import (gram_product_check, incidence_matrix, independent_row_basis,
                               nullity_equals_m2, rank_exact)

RANKS = {
    ("Cd", 2, 2): 10, ("Cd", 2, 3): 36, ("Cd", 3, 2): 25, ("Bd", 2, 2): 10, ("Bd", 3, 2): 25,
    ("Dd", 2, 2): 5, ("Dd", 2, 3): 15, ("Dd", 3, 2): 7, ("2D", 2, 2): 21,
    ("2A_odd", 4, 2): 21, ("2A_even", 4, 2): 121,
}


def fraction_rank(rows):
    """Gauss-Jordan over Q with Fractions, independent of the kernels."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                factor = m[r][c] / m[rank][c]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


matrices = st.integers(1, 7).flatmap(lambda r: st.integers(1, 7).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                       min_size=r, max_size=r)))


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_rank_matches_fraction_elimination(rows):
    assert rank_exact(rows) == fraction_rank(rows)
    assert rank_exact(rows) == rank_exact([list(c) for c in zip(*rows)])


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_row_basis_is_greedy_prefix_basis(rows):
    basis = independent_row_basis(rows)
    assert len(basis) == fraction_rank(rows)
    kept = []
    for i, r in enumerate(rows):
        if fraction_rank(kept + [r]) > len(kept):
            kept.append(r)
            assert i in basis
        else:
            assert i not in basis


def test_row_basis_skips_duplicates():
    rows = [[1, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 2], [0, 0, 1]]
    assert independent_row_basis(rows) == [0, 2, 4]
    assert rank_exact([[0, 0], [0, 0]]) == 0
    assert rank_exact([]) == 0 and independent_row_basis([]) == []


def test_large_entries():
    big = 10 ** 30
    assert rank_exact([[big, big + 1], [big + 1, big + 2]]) == 2


@pytest.mark.parametrize("sel", TEST_MATRIX, ids=instance_id)
def test_incidence_rank(sel):
    inst = get_instance(*sel)
    M = inst.incidence.matrix
    assert inst.rank == RANKS[sel]
    assert np.linalg.matrix_rank(M.astype(float)) == RANKS[sel]


@pytest.mark.parametrize("sel", [("Cd", 2, 2), ("Dd", 2, 3), ("2D", 2, 2), ("Dd", 3, 2)],
                         ids=instance_id)
def test_rank_of_transpose_and_gram(sel):
    inst = get_instance(*sel)
    M = inst.incidence.matrix
    r = RANKS[sel]
    assert rank_exact(M.T) == r
    assert rank_exact(inst.incidence.gram()) == r


@pytest.mark.parametrize("sel", TEST_MATRIX, ids=instance_id)
def test_gram_matrix_by_hand(sel):
    inst = get_instance(*sel)
    M = inst.incidence.matrix
    B = inst.incidence.gram()
    n = M.shape[1]
    for i in range(0, n, max(1, n // 12)):
        for j in range(n):
            assert B[i, j] == sum(int(M[g, i]) * int(M[g, j]) for g in range(M.shape[0]))


@pytest.mark.parametrize("sel", TEST_MATRIX, ids=instance_id)
def test_gram_identity_and_nullity(sel):
    inst = get_instance(*sel)
    assert gram_product_check(inst.P, inst.incidence, inst.collinearity)
    assert nullity_equals_m2(inst.P, inst.incidence, inst.rank)


def test_gram_identity_detects_wrong_graph():
    inst = get_instance("Cd", 2, 2)
    A = np.array(inst.collinearity.adjacency)
    A[0, 1] = A[1, 0] = 1 - A[0, 1]
    check = gram_product_check(inst.P, inst.incidence, A)
    assert not check and check.witness in {(0, 1), (1, 0)}


def test_incidence_sums_checked():
    inst = get_instance("Cd", 2, 2)
    with pytest.raises(InvariantViolation, match="generator"):
        incidence_matrix(inst.P, inst.points, inst.generators[:-1] + [inst.points[0]])


def test_incidence_matrix_small():
    inst = get_instance("Dd", 2, 2)
    M = inst.incidence.matrix
    assert M.shape == (6, 9)
    assert set(M.sum(axis=1).tolist()) == {3}
    assert set(M.sum(axis=0).tolist()) == {2}
