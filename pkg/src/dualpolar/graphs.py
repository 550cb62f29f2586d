"""Dual polar graphs, collinearity graphs and their structural checks."""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from . import kernels
from .errors import InvalidParameterError, InvariantViolation
from .forms import is_totally_isotropic


@dataclass(frozen=True)
class Check:
    """Outcome of a verification; falsy on failure, with a witness."""

    ok: bool
    witness: object = None
    message: str = ""

    def __bool__(self):
        return self.ok


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Holds both a dense 0/1 adjacency matrix and neighbour lists.
    ``intersection_dims`` is set for dual polar graphs built from subspaces.
    """

    def __init__(self, adjacency, labels=None, intersection_dims=None, d=None):
        A = np.array(adjacency, dtype=np.int64)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise InvalidParameterError("adjacency must be a square matrix")
        if not np.array_equal(A, A.T) or np.any(np.diag(A)) or np.any((A != 0) & (A != 1)):
            raise InvariantViolation("adjacency must be symmetric 0/1 with zero diagonal")
        A.setflags(write=False)
        self.adjacency = A
        self.n = A.shape[0]
        self.labels = list(range(self.n)) if labels is None else list(labels)
        self.neighbors = tuple(tuple(np.flatnonzero(row).tolist()) for row in A)
        self.intersection_dims = intersection_dims
        self.d = d

    @classmethod
    def from_edges(cls, n, edges, **kw):
        A = np.zeros((n, n), dtype=np.int64)
        for i, j in edges:
            if i == j:
                raise InvariantViolation(f"loop at vertex {i}")
            A[i, j] = A[j, i] = 1
        return cls(A, **kw)

    def edges(self):
        return [(i, j) for i in range(self.n) for j in self.neighbors[i] if i < j]

    @property
    def num_edges(self):
        return int(self.adjacency.sum()) // 2

    def degrees(self):
        return self.adjacency.sum(axis=1)

    def csr(self):
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(nb) for nb in self.neighbors])
        indices = np.array([v for nb in self.neighbors for v in nb], dtype=np.int64)
        return indptr, indices

    @cached_property
    def distances(self):
        """All-pairs BFS distances; raises if the graph is disconnected."""
        D = kernels.bfs_all(*self.csr())
        if self.n and D.min() < 0:
            u, v = map(int, np.argwhere(D < 0)[0])
            raise InvariantViolation(f"graph is disconnected: {u} cannot reach {v}",
                                     witness=(u, v))
        D.setflags(write=False)
        return D

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.num_edges})"


def subspace_bases(subspaces):
    return np.array([s.rows for s in subspaces], dtype=np.int64)


def intersection_dims(P, subspaces):
    """Matrix of dim(U_i & U_j) over equal-dimension subspaces."""
    if not subspaces:
        return np.zeros((0, 0), dtype=np.int64)
    return kernels.pairwise_intersection_dims(subspace_bases(subspaces), P.field)


def dual_polar_graph(P, generators):
    """Generators adjacent when they meet in dimension d - 1."""
    dims = intersection_dims(P, generators)
    A = (dims == P.d - 1).astype(np.int64)
    np.fill_diagonal(A, 0)
    dims.setflags(write=False)
    return Graph(A, intersection_dims=dims, d=P.d)


def collinearity_graph(P, points):
    """Points adjacent when their span is totally isotropic."""
    n = len(points)
    A = np.zeros((n, n), dtype=np.int64)
    vecs = [p.rows[0] for p in points]
    for i in range(n):
        for j in range(i + 1, n):
            if is_totally_isotropic(P, (vecs[i], vecs[j])):
                A[i, j] = A[j, i] = 1
    return Graph(A)


def bfs_distances(G, source):
    dist = [-1] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in G.neighbors[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    if -1 in dist:
        raise InvariantViolation(f"graph is disconnected: {source} cannot reach {dist.index(-1)}",
                                 witness=(source, dist.index(-1)))
    return dist


def check_distance_law(P, G, generators):
    """BFS distance equals d - dim(U & W) for every pair of generators.

    Intersection dimensions are recomputed from the subspaces, not read off
    the graph, so an inconsistent graph is caught.
    """
    if G.n != len(generators):
        return Check(False, None, f"graph has {G.n} vertices, expected {len(generators)}")
    try:
        D = G.distances
    except InvariantViolation as exc:
        return Check(False, exc.witness, str(exc))
    expected = P.d - intersection_dims(P, generators)
    bad = np.argwhere(D != expected)
    if len(bad):
        i, j = map(int, bad[0])
        return Check(False, (i, j),
                     f"d({i},{j}) = {D[i, j]} but d - dim(U&W) = {expected[i, j]}")
    return Check(True, message=f"{G.n * G.n} pairs")


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    a: int
    c: int
    theta1: Optional[int] = None
    theta2: Optional[int] = None
    m1: Optional[int] = None
    m2: Optional[int] = None

    def __post_init__(self):
        if self.k * (self.k - self.a - 1) != (self.n - self.k - 1) * self.c:
            raise InvariantViolation(f"infeasible parameters {self.n, self.k, self.a, self.c}")
        if self.m1 is not None and self.m2 is not None and 1 + self.m1 + self.m2 != self.n:
            raise InvariantViolation(f"multiplicities 1 + {self.m1} + {self.m2} != {self.n}")


def measure_srg(G):
    """Measure (n, k, a, c) exhaustively; raise if G is not strongly regular."""
    A = G.adjacency
    deg = A.sum(axis=1)
    if len(set(deg.tolist())) > 1:
        v = int(np.flatnonzero(deg != deg[0])[0])
        raise InvariantViolation(f"not regular: deg(0) = {deg[0]}, deg({v}) = {deg[v]}",
                                 witness=(0, v))
    common = A @ A
    adj = A.astype(bool)
    off = ~np.eye(G.n, dtype=bool)
    values = {}
    for name, mask in (("a", adj), ("c", off & ~adj)):
        vals = common[mask]
        if len(vals) and vals.min() != vals.max():
            i, j = map(int, np.argwhere(mask & (common != vals[0]))[0])
            raise InvariantViolation(
                f"{name} not constant: pair ({i},{j}) has {common[i, j]} common neighbours",
                witness=(i, j))
        values[name] = int(vals[0]) if len(vals) else 0
    return SrgParams(G.n, int(deg[0]) if G.n else 0, values["a"], values["c"])


def eigen_multiplicity(G, theta):
    """n - rank(A - theta I) over the rationals."""
    M = G.adjacency.astype(object) - int(theta) * np.eye(G.n, dtype=np.int64).astype(object)
    return G.n - len(kernels.bareiss_pivots(M.tolist()))
