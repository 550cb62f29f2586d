"""Enumeration of totally isotropic subspaces.

Points are found by scanning every normalised vector.  Higher levels are
built by extending each member of the previous level by a point of its
perp, with RREF canonical forms removing duplicates.
"""

from itertools import product

import numpy as np

from .errors import InvalidParameterError, ResourceError
from .forms import (DEFAULT_BUDGET, is_isotropic_vector, is_totally_isotropic,
                    perp_functionals, predicted_generators)
from .subspace import Subspace, intersection_dim  # noqa: F401  (re-exported)


def normalised_vectors(n, q):
    """Nonzero vectors of GF(q)^n whose first nonzero coordinate is 1, sorted."""
    out = []
    for lead in range(n):
        for tail in product(range(q), repeat=n - lead - 1):
            out.append((0,) * lead + (1,) + tail)
    out.sort()
    return out


def enumerate_points(P):
    """All isotropic points of P, as 1-dimensional Subspaces in sorted order."""
    return [Subspace((v,), P.n_amb, P.q)
            for v in normalised_vectors(P.n_amb, P.q) if is_isotropic_vector(P, v)]


def form_matrix(P, vectors):
    """Matrix of b(x_i, x_j) over a list of vectors, computed table-wise."""
    f = P.field
    mul = f.arrays["mul"]
    add = f.arrays["add"]
    X = np.array(vectors, dtype=np.int64)
    W = np.array(perp_functionals(P, vectors), dtype=np.int64)
    prod = mul[X[:, None, :], W[None, :, :]]
    acc = np.zeros(prod.shape[:2], dtype=np.int64)
    for k in range(prod.shape[2]):
        acc = add[acc, prod[:, :, k]]
    return acc


class _Extender:
    """Bitset bookkeeping for extending subspaces by perpendicular points."""

    def __init__(self, P, points):
        self.P = P
        self.vectors = [p.rows[0] for p in points]
        self.index = {v: i for i, v in enumerate(self.vectors)}
        bmat = form_matrix(P, self.vectors) if self.vectors else np.zeros((0, 0))
        self.perpmask = []
        for row in bmat:
            mask = 0
            for j in np.flatnonzero(row == 0).tolist():
                mask |= 1 << j
            self.perpmask.append(mask)
        self.full = (1 << len(self.vectors)) - 1

    def point_mask(self, U):
        mask = 0
        for v in U.points():
            mask |= 1 << self.index[v]
        return mask

    def extensions(self, U):
        """Distinct totally isotropic (dim U + 1)-spaces containing U."""
        cand = self.full
        for r in U.rows:
            cand &= self.perpmask[self.index[r]]
        cand &= ~self.point_mask(U)
        out = []
        while cand:
            j = (cand & -cand).bit_length() - 1
            W = Subspace.span(list(U.rows) + [self.vectors[j]], U.q, U.n)
            out.append(W)
            cand &= ~self.point_mask(W)
        return out


def _check_budget(P, budget):
    budget = DEFAULT_BUDGET if budget is None else budget
    predicted = predicted_generators(P.family, P.q, P.d)
    if predicted > budget:
        raise ResourceError(
            f"{P} has {predicted} generators, over the enumeration budget of {budget}")


def enumerate_levels(P, top=None, *, points=None, budget=None):
    """[Omega_1, ..., Omega_top] (top defaults to d), each sorted."""
    _check_budget(P, budget)
    top = P.d if top is None else top
    points = enumerate_points(P) if points is None else points
    ext = _Extender(P, points)
    levels = [list(points)]
    while len(levels) < top:
        nxt = set()
        for U in levels[-1]:
            nxt.update(ext.extensions(U))
        levels.append(sorted(nxt))
    return levels


def enumerate_isotropic(P, t, *, points=None, budget=None):
    """Omega_t: all totally isotropic t-dimensional subspaces, sorted."""
    if not isinstance(t, int) or not 1 <= t <= P.d:
        raise InvalidParameterError(f"t must lie in 1..{P.d}, got {t!r}")
    return enumerate_levels(P, t, points=points, budget=budget)[t - 1]


def extensions(P, U, points=None):
    """Totally isotropic spaces of dimension dim U + 1 through U."""
    points = enumerate_points(P) if points is None else points
    return _Extender(P, points).extensions(U)


def count_generators_through(P, U, generators=None):
    """Number of generators containing the totally isotropic space U."""
    if not is_totally_isotropic(P, U):
        raise InvalidParameterError(f"{U} is not totally isotropic in {P}")
    if generators is None:
        generators = enumerate_isotropic(P, P.d)
    return sum(1 for g in generators if g.contains(U))
