import itertools
import random

import pytest

from conftest import TEST_MATRIX, get_instance, instance_id
from dualpolar.errors import InvalidParameterError, ResourceError
from dualpolar.forms import b_eval, f_eval, make_polar_space
from dualpolar.isotropic import (count_generators_through, enumerate_isotropic,
                                 enumerate_levels, extensions, normalised_vectors)
from dualpolar.subspace import Subspace, intersection_dim

KNOWN = {
    ("Cd", 2, 2): (15, 15), ("Cd", 2, 3): (63, 135), ("Cd", 3, 2): (40, 40),
    ("Bd", 2, 2): (15, 15), ("Bd", 3, 2): (40, 40),
    ("Dd", 2, 2): (9, 6), ("Dd", 2, 3): (35, 30), ("Dd", 3, 2): (16, 8),
    ("2D", 2, 2): (27, 45), ("2A_odd", 4, 2): (45, 27), ("2A_even", 4, 2): (165, 297),
}


def brute_totally_isotropic(P, S):
    """Every vector singular (orthogonal) and every pair orthogonal."""
    vs = list(S.vectors())
    if P.quad is not None and any(f_eval(P, v) for v in vs):
        return False
    return all(b_eval(P, u, v) == 0 for u in vs for v in vs)


@pytest.mark.parametrize("sel", TEST_MATRIX, ids=instance_id)
def test_counts(sel):
    inst = get_instance(*sel)
    assert (len(inst.points), len(inst.generators)) == KNOWN[sel]


@pytest.mark.parametrize("sel", [("Cd", 2, 2), ("Dd", 2, 3), ("2D", 2, 2), ("Bd", 2, 2),
                                 ("Cd", 3, 2), ("2A_odd", 4, 2)], ids=instance_id)
def test_lines_match_brute_force(sel):
    P = make_polar_space(*sel)
    vs = normalised_vectors(P.n_amb, P.q)
    found = set()
    for u, v in itertools.combinations(vs, 2):
        S = Subspace.span([u, v], P.q, P.n_amb)
        if S not in found and brute_totally_isotropic(P, S):
            found.add(S)
    assert sorted(found) == enumerate_isotropic(P, 2)


@pytest.mark.parametrize("sel", TEST_MATRIX, ids=instance_id)
def test_levels_sorted_and_isotropic(sel):
    inst = get_instance(*sel)
    for t, level in enumerate(inst.levels, start=1):
        assert level == sorted(set(level))
        assert all(S.dim == t for S in level)
        for S in level[:25]:
            assert brute_totally_isotropic(inst.P, S)


@pytest.mark.parametrize("sel", TEST_MATRIX, ids=instance_id)
def test_no_isotropic_space_above_generators(sel):
    inst = get_instance(*sel)
    assert all(extensions(inst.P, g, inst.points) == [] for g in inst.generators)


@pytest.mark.parametrize("sel", TEST_MATRIX, ids=instance_id)
def test_generators_through_each_space_constant(sel):
    inst = get_instance(*sel)
    for level in inst.levels:
        counts = {count_generators_through(inst.P, S, inst.generators) for S in level}
        assert len(counts) == 1


def test_generators_through_values():
    inst = get_instance("Cd", 2, 2)
    assert count_generators_through(inst.P, inst.points[0], inst.generators) == 3
    inst = get_instance("Dd", 2, 3)
    P = inst.P
    assert count_generators_through(P, inst.levels[1][0], inst.generators) == 2
    with pytest.raises(InvalidParameterError):
        count_generators_through(P, Subspace.span([(1, 1, 0, 0, 0, 0)], 2), inst.generators)


@pytest.mark.parametrize("sel", TEST_MATRIX, ids=instance_id)
def test_downward_closure(sel):
    inst = get_instance(*sel)
    point_set = set(inst.points)
    level2 = set(inst.levels[1]) if inst.P.d >= 2 else set()
    for g in inst.generators[:30]:
        pts = [Subspace((v,), g.n, g.q) for v in g.points()]
        assert all(p in point_set for p in pts)
        if inst.P.d >= 3:
            for a, b in itertools.combinations(pts[:6], 2):
                assert a.join(b) in level2


@pytest.mark.parametrize("sel", [("Cd", 2, 3), ("Dd", 3, 2), ("2A_odd", 4, 2), ("2D", 2, 2)],
                         ids=instance_id)
def test_intersection_dim_counts_common_points(sel):
    inst = get_instance(*sel)
    q = inst.P.q
    rng = random.Random(7)
    gens = inst.generators
    for _ in range(60):
        u, w = rng.choice(gens), rng.choice(gens)
        common = len(set(u.points()) & set(w.points()))
        k = intersection_dim(u, w)
        assert common == (q ** k - 1) // (q - 1)


def test_invalid_level():
    P = make_polar_space("Cd", 2, 2)
    for t in (0, 3, -1, 1.5):
        with pytest.raises(InvalidParameterError):
            enumerate_isotropic(P, t)


def test_enumeration_budget():
    P = make_polar_space("Cd", 2, 3)
    with pytest.raises(ResourceError, match="135"):
        enumerate_levels(P, budget=100)


def test_deterministic():
    P = make_polar_space("2D", 2, 2)
    assert enumerate_levels(P) == enumerate_levels(P)
