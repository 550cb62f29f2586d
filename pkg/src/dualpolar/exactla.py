"""Exact rank over Q and the incidence-matrix identities.

Integer matrices are plain 2-D arrays (numpy int64 or nested lists);
elimination always runs on unbounded Python ints.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InvariantViolation
from .formulas import ParamTriple, eval_srg, generators_through
from .graphs import Check


@dataclass(frozen=True)
class IncidenceMatrix:
    """0/1 matrix with rows = generators and columns = points."""

    matrix: np.ndarray
    row_labels: tuple
    col_labels: tuple

    @property
    def shape(self):
        return self.matrix.shape

    def gram(self):
        """B = M^T M."""
        M = self.matrix.astype(object)
        return (M.T @ M).astype(np.int64)


def _as_rows(M):
    if isinstance(M, IncidenceMatrix):
        M = M.matrix
    return [[int(x) for x in row] for row in np.asarray(M, dtype=object).tolist()]


def incidence_matrix(P, points, generators):
    """M[g][p] = 1 iff point p lies in generator g."""
    index = {p.rows[0]: i for i, p in enumerate(points)}
    M = np.zeros((len(generators), len(points)), dtype=np.int64)
    for g, gen in enumerate(generators):
        for v in gen.points():
            M[g, index[v]] = 1
    per_row = (P.q ** P.d - 1) // (P.q - 1)
    per_col = generators_through(ParamTriple.for_family(P.family, P.q, P.d), 1)
    rows, cols = M.sum(axis=1), M.sum(axis=0)
    if len(rows) and (rows != per_row).any():
        g = int(np.flatnonzero(rows != per_row)[0])
        raise InvariantViolation(f"generator {g} holds {rows[g]} points, expected {per_row}")
    if len(cols) and (cols != per_col).any():
        p = int(np.flatnonzero(cols != per_col)[0])
        raise InvariantViolation(f"point {p} lies on {cols[p]} generators, expected {per_col}")
    M.setflags(write=False)
    return IncidenceMatrix(M, tuple(range(len(generators))), tuple(range(len(points))))


def rank_exact(M):
    """Rank over Q by fraction-free elimination."""
    rows = _as_rows(M)
    if not rows or not rows[0]:
        return 0
    return len(kernels.bareiss_pivots(rows))


def independent_row_basis(M):
    """Indices of the first linearly independent rows, scanning in order.

    A row is kept iff it is not in the span of the rows before it; these are
    exactly the pivot columns of the transpose's echelon form.
    """
    rows = _as_rows(M)
    if not rows or not rows[0]:
        return []
    cols = [list(c) for c in zip(*rows)]
    return kernels.bareiss_pivots(cols)


def gram_product_check(P, M, A):
    """Check M^T M = N1 I + N2 A entrywise and N1 + theta2 N2 = 0."""
    t = ParamTriple.for_family(P.family, P.q, P.d)
    n1, n2 = generators_through(t, 1), generators_through(t, 2) if P.d >= 2 else 0
    theta2 = eval_srg(t).theta2 if P.d >= 2 else None
    A = np.asarray(getattr(A, "adjacency", A), dtype=np.int64)
    B = M.gram() if isinstance(M, IncidenceMatrix) else np.asarray(M).T @ np.asarray(M)
    expected = n1 * np.eye(B.shape[0], dtype=np.int64) + n2 * A
    bad = np.argwhere(B != expected)
    if len(bad):
        i, j = map(int, bad[0])
        return Check(False, (i, j), f"B[{i},{j}] = {B[i, j]}, expected {expected[i, j]}")
    if theta2 is not None and n1 + theta2 * n2 != 0:
        return Check(False, (n1, theta2, n2), f"N1 + theta2 N2 = {n1 + theta2 * n2}")
    return Check(True, message=f"B = {n1} I + {n2} A")


def nullity_equals_m2(P, M, rank=None):
    """|points| - rank(M) equals the multiplicity of the negative eigenvalue."""
    m2 = eval_srg(ParamTriple.for_family(P.family, P.q, P.d)).m2
    rank = rank_exact(M) if rank is None else rank
    ncols = (M.matrix if isinstance(M, IncidenceMatrix) else np.asarray(M)).shape[1]
    nullity = ncols - rank
    return Check(nullity == m2, None if nullity == m2 else (nullity, m2),
                 f"nullity {nullity}, m2 {m2}")
