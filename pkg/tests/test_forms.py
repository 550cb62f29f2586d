import dataclasses
import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from dualpolar.errors import InvalidParameterError, ResourceError, UnsupportedOperationError
from dualpolar.forms import (b_eval, elliptic_lambda, f_eval, greedy_witt_index,
                             is_totally_isotropic, make_polar_space, perp, radical,
                             PolarSpaceDescriptor)
from dualpolar.gf import make_field
from dualpolar.subspace import Subspace

ALL_FAMILIES = ["Cd", "Bd", "Dd", "2D", "2A_odd", "2A_even"]


def vectors(n, q):
    return list(itertools.product(range(q), repeat=n))


def test_table_shapes():
    expect = {"Cd": (2, 4), "Bd": (2, 5), "Dd": (0, 4), "2D": (4, 6),
              "2A_even": (3, 5), "2A_odd": (1, 4)}
    for fam, (e2, n) in expect.items():
        P = make_polar_space(fam, 4, 2)
        assert (P.e2, P.n_amb) == (e2, n)


def test_examples():
    P = make_polar_space("Cd", 2, 2)
    assert (P.n_amb, P.e2) == (4, 2)
    P = make_polar_space("2Aodd", 4, 2)
    assert (P.family, P.n_amb, P.e2) == ("2A_odd", 4, 1)
    with pytest.raises(InvalidParameterError, match="perfect square"):
        make_polar_space("2A_odd", 3, 2)


def test_budget_error_names_predicted_count():
    with pytest.raises(ResourceError, match="12304656"):
        make_polar_space("Cd", 5, 4)


@pytest.mark.parametrize("bad", [("Xd", 2, 2), ("Cd", 6, 2), ("Cd", 2, 0), ("Cd", 32, 2)])
def test_invalid_selectors(bad):
    with pytest.raises(InvalidParameterError):
        make_polar_space(*bad)


def test_b_zero_vector():
    for fam in ALL_FAMILIES:
        P = make_polar_space(fam, 4, 2)
        zero = (0,) * P.n_amb
        for v in vectors(P.n_amb, 4)[:50]:
            assert b_eval(P, zero, v) == 0 == b_eval(P, v, zero)


def test_symplectic_is_alternating():
    for q in (2, 3):
        P = make_polar_space("Cd", q, 2)
        assert all(b_eval(P, x, x) == 0 for x in vectors(4, q))


def test_hermitian_symmetry_exhaustive():
    P = make_polar_space("2A_odd", 4, 2)
    f = make_field(4)
    vs = vectors(4, 4)
    for u in vs:
        for v in vs:
            assert b_eval(P, u, v) == f.conj_map[b_eval(P, v, u)]


def test_b_length_mismatch():
    P = make_polar_space("Cd", 2, 2)
    with pytest.raises(InvalidParameterError):
        b_eval(P, (1, 0, 0), (1, 0, 0, 0))


def test_f_examples():
    P = make_polar_space("Dd", 2, 2)
    assert f_eval(P, (0, 0, 0, 0)) == 0
    assert f_eval(P, (1, 0, 0, 0)) == 0
    with pytest.raises(UnsupportedOperationError):
        f_eval(make_polar_space("Cd", 2, 2), (1, 0, 0, 0))


def test_elliptic_point_count_by_direct_evaluation():
    # independent evaluation of x0x1 + x2x3 + x4^2 + x4x5 + x5^2 over GF(2)
    P = make_polar_space("2D", 2, 2)
    assert P.lam == 1
    zeros = 0
    for v in vectors(6, 2):
        if not any(v):
            continue
        direct = (v[0] * v[1] + v[2] * v[3] + v[4] ** 2 + v[4] * v[5] + v[5] ** 2) % 2
        assert f_eval(P, v) == direct
        zeros += direct == 0
    assert zeros // (2 - 1) == 27


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_elliptic_lambda_gives_irreducible_quadratic(q):
    f = make_field(q)
    lam = elliptic_lambda(f)
    assert all(f.add[f.add[f.mul[t][t]][t]][lam] != 0 for t in range(q))
    assert all(any(f.add[f.add[f.mul[t][t]][t]][x] == 0 for t in range(q)) for x in range(lam))


@pytest.mark.parametrize("fam,q", [("Dd", 2), ("Bd", 2), ("2D", 2), ("Dd", 3), ("Bd", 3), ("2D", 3)])
def test_polarisation_exhaustive(fam, q):
    P = make_polar_space(fam, q, 2 if q == 2 or fam != "2D" else 1)
    f = P.field
    vs = vectors(P.n_amb, q)
    if len(vs) ** 2 > 70_000:
        vs = vs[::7]
    for u in vs:
        fu = f_eval(P, u)
        for v in vs:
            s = tuple(f.add[a][b] for a, b in zip(u, v))
            lhs = f.sub(f.sub(f_eval(P, s), fu), f_eval(P, v))
            assert lhs == b_eval(P, u, v)


def test_isotropy_examples_with_antidiagonal_gram():
    P = make_polar_space("Cd", 2, 2)
    anti = tuple(tuple(int(i + j == 3) for j in range(4)) for i in range(4))
    Q = dataclasses.replace(P, gram=anti)
    e = [tuple(int(i == j) for j in range(4)) for i in range(4)]
    assert is_totally_isotropic(Q, Subspace.zero(4, 2))
    assert is_totally_isotropic(Q, Subspace.span([e[0], e[1]], 2))
    assert b_eval(Q, e[0], e[3]) == 1
    assert not is_totally_isotropic(Q, Subspace.span([e[0], e[3]], 2))


def test_isotropy_with_standard_pairing():
    P = make_polar_space("Cd", 2, 2)
    e = [tuple(int(i == j) for j in range(4)) for i in range(4)]
    assert is_totally_isotropic(P, Subspace.span([e[0], e[2]], 2))
    assert not is_totally_isotropic(P, Subspace.span([e[0], e[1]], 2))


def test_orthogonal_isotropy_needs_f():
    # in characteristic 2, b(x, x) = 0 always but f need not vanish
    P = make_polar_space("Dd", 2, 2)
    v = (1, 1, 0, 0)
    assert b_eval(P, v, v) == 0 and f_eval(P, v) == 1
    assert not is_totally_isotropic(P, Subspace.span([v], 2))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([("Cd", 3, 2), ("Dd", 2, 3), ("2A_odd", 4, 2), ("Bd", 3, 2)]),
       st.data())
def test_subspaces_of_isotropic_are_isotropic(sel, data):
    from dualpolar.isotropic import enumerate_isotropic
    P = make_polar_space(*sel)
    gens = enumerate_isotropic(P, P.d)
    G = data.draw(st.sampled_from(gens))
    k = data.draw(st.integers(1, P.d))
    coeffs = data.draw(st.lists(st.lists(st.integers(0, P.q - 1), min_size=P.d, max_size=P.d),
                                min_size=k, max_size=k))
    f = P.field
    vecs = []
    for c in coeffs:
        v = [0] * P.n_amb
        for ci, row in zip(c, G.rows):
            v = [f.add[a][f.mul[ci][b]] for a, b in zip(v, row)]
        vecs.append(v)
    T = Subspace.span(vecs, P.q, P.n_amb)
    assert G.contains(T)
    assert is_totally_isotropic(P, T)


def test_perp_examples():
    P = make_polar_space("Cd", 2, 2)
    assert perp(P, Subspace.zero(4, 2)) == Subspace.whole(4, 2)
    e1 = Subspace.span([(1, 0, 0, 0)], 2)
    pe = perp(P, e1)
    assert pe.dim == 3 and pe.contains(e1)
    # every vector of the perp really is orthogonal to e1
    assert all(b_eval(P, v, (1, 0, 0, 0)) == 0 for v in pe.vectors())
    D = make_polar_space("Dd", 2, 2)
    from dualpolar.isotropic import enumerate_isotropic
    for g in enumerate_isotropic(D, 2):
        assert perp(D, g) == g


@pytest.mark.parametrize("fam,q,d", [("Cd", 3, 2), ("Dd", 2, 3), ("2D", 2, 2), ("2A_even", 4, 2),
                                     ("Bd", 3, 2), ("Bd", 2, 2), ("Bd", 4, 2)])
def test_perp_dimension(fam, q, d):
    from dualpolar.isotropic import enumerate_levels
    P = make_polar_space(fam, q, d)
    rad = radical(P).dim
    for level in enumerate_levels(P):
        for S in level[:40]:
            pd = perp(P, S).dim
            if rad == 0:
                assert pd == P.n_amb - S.dim
            else:
                assert pd == P.n_amb - S.dim  # isotropic S never meets the radical
    if rad:
        R = radical(P)
        assert perp(P, R).dim == P.n_amb


def test_radicals():
    for fam in ALL_FAMILIES:
        for q in (2, 3, 4, 9):
            if fam.startswith("2A") and q in (2, 3):
                continue
            P = make_polar_space(fam, q, 2, budget=10 ** 6)
            expected = 1 if fam == "Bd" and q in (2, 4) else 0
            assert radical(P).dim == expected


@pytest.mark.parametrize("fam", ALL_FAMILIES)
@pytest.mark.parametrize("d", [1, 2, 3])
def test_witt_index(fam, d):
    q = 4 if fam.startswith("2A") else 2
    P = make_polar_space(fam, q, d)
    assert greedy_witt_index(P) == d


def test_descriptor_json_roundtrip():
    P = make_polar_space("2D", 3, 2)
    obj = json.loads(json.dumps(P.to_json()))
    assert obj == {"family": "2D", "q": 3, "d": 2, "e2": 4, "n_amb": 6, "lambda": 2}
    Q = PolarSpaceDescriptor.from_json(obj)
    assert Q == P
