"""Subspaces of GF(q)^n held in canonical reduced row echelon form."""

from dataclasses import dataclass
from itertools import product

from . import kernels
from .errors import InvalidParameterError
from .gf import make_field


@dataclass(frozen=True, order=True)
class Subspace:
    """A subspace of GF(q)^n given by its RREF basis.

    Equal subspaces have identical ``rows``, so instances hash and compare
    by value.  Ordering is lexicographic on the basis rows.
    """

    rows: tuple
    n: int
    q: int

    @classmethod
    def span(cls, vectors, q, n=None):
        vectors = [tuple(int(x) for x in v) for v in vectors]
        if n is None:
            if not vectors:
                raise InvalidParameterError("ambient dimension needed for an empty span")
            n = len(vectors[0])
        if any(len(v) != n for v in vectors):
            raise InvalidParameterError("vectors of unequal length")
        if not vectors:
            return cls((), n, q)
        red = kernels.rref_gf(vectors, make_field(q))
        return cls(tuple(tuple(int(x) for x in r) for r in red), n, q)

    @classmethod
    def zero(cls, n, q):
        return cls((), n, q)

    @classmethod
    def whole(cls, n, q):
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n, q)

    @property
    def field(self):
        return make_field(self.q)

    @property
    def dim(self):
        return len(self.rows)

    @property
    def pivots(self):
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.rows)

    def _check(self, other):
        if (other.n, other.q) != (self.n, self.q):
            raise InvalidParameterError(
                f"ambient mismatch: V({self.n},{self.q}) vs V({other.n},{other.q})")

    def contains_vector(self, v):
        if not any(v):
            return True
        return kernels.rank_gf(list(self.rows) + [tuple(v)], self.field) == self.dim

    def contains(self, other):
        self._check(other)
        if other.dim == 0:
            return True
        return kernels.rank_gf(list(self.rows) + list(other.rows), self.field) == self.dim

    def join(self, other):
        self._check(other)
        return Subspace.span(list(self.rows) + list(other.rows), self.q, self.n)

    def vectors(self):
        """Every vector of the subspace (q**dim of them)."""
        f = self.field
        add, mul = f.add, f.mul
        for coeffs in product(range(f.q), repeat=self.dim):
            v = [0] * self.n
            for c, r in zip(coeffs, self.rows):
                if c:
                    v = [add[a][mul[c][b]] for a, b in zip(v, r)]
            yield tuple(v)

    def points(self):
        """Normalised nonzero vectors, one per 1-dimensional subspace."""
        return [v for v in self.vectors() if any(v) and next(x for x in v if x) == 1]

    def __str__(self):
        return ";".join(",".join(map(str, r)) for r in self.rows)


def nullspace(rows, q, n):
    """{x : r . x = 0 for every r in rows} as a Subspace."""
    if not rows:
        return Subspace.whole(n, q)
    f = make_field(q)
    red = kernels.rref_gf(rows, f).tolist()
    pivots = [next(j for j, x in enumerate(r) if x) for r in red]
    basis = []
    for fcol in (j for j in range(n) if j not in pivots):
        v = [0] * n
        v[fcol] = 1
        for r, pc in zip(red, pivots):
            v[pc] = f.neg[r[fcol]]
        basis.append(v)
    return Subspace.span(basis, q, n)


def intersection_dim(u, w):
    """dim(U & W) = dim U + dim W - rank of the stacked bases."""
    u._check(w)
    if u.dim == 0 or w.dim == 0:
        return 0
    return u.dim + w.dim - kernels.rank_gf(list(u.rows) + list(w.rows), u.field)
