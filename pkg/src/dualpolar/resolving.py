"""Resolving sets of dual polar graphs: construction, checking, minimisation."""

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

import numpy as np

from . import kernels
from .errors import CriticalInvariantError, InvariantViolation, ResourceError
from .exactla import incidence_matrix, independent_row_basis
from .formulas import ParamTriple, eval_rank_bound
from .graphs import Check

DEFAULT_SUBSET_BUDGET = 10 ** 7


@dataclass(frozen=True)
class ResolvingSet:
    vertices: tuple
    method: str  # "row-basis", "greedy" or "exhaustive"

    @property
    def size(self):
        return len(self.vertices)

    def to_dict(self, P=None):
        out = {}
        if P is not None:
            out.update(family=P.family, q=P.q, d=P.d)
        out.update(method=self.method, size=self.size, vertices=list(self.vertices),
                   verified=True)
        return out

    def to_json(self, P=None):
        return json.dumps(self.to_dict(P), sort_keys=False)


def distance_matrix(G, mode="auto"):
    """Distances used for resolving checks.

    ``dims`` reads them off intersection dimensions (dual polar graphs only),
    ``bfs`` runs breadth-first search, ``both`` computes both and insists
    they agree; ``auto`` prefers ``dims`` when available.
    """
    if mode == "auto":
        mode = "dims" if G.intersection_dims is not None else "bfs"
    if mode == "bfs":
        return G.distances
    if G.intersection_dims is None:
        raise InvariantViolation("graph carries no intersection dimensions")
    from_dims = G.d - G.intersection_dims
    if mode == "both" and not np.array_equal(from_dims, G.distances):
        i, j = map(int, np.argwhere(from_dims != G.distances)[0])
        raise InvariantViolation(f"distance ({i},{j}) differs between dims and BFS",
                                 witness=(i, j))
    return from_dims


def verify_resolving(G, S, mode="auto"):
    """True iff v -> (dist(v, s))_{s in S} is injective; witness pair otherwise."""
    S = list(S)
    if any(not 0 <= s < G.n for s in S) or len(set(S)) != len(S):
        raise InvariantViolation(f"resolving candidate must be distinct vertices of 0..{G.n - 1}")
    u, w = kernels.resolving_witness(distance_matrix(G, mode), S)
    if u < 0:
        return Check(True, message=f"{len(S)} vertices resolve {G.n}")
    return Check(False, (int(u), int(w)), f"vertices {u} and {w} share a distance vector")


def rowbasis_resolving_set(P, points, generators, G, M=None):
    """Generators whose incidence rows form the first row basis of M."""
    M = incidence_matrix(P, points, generators) if M is None else M
    rows = independent_row_basis(M)
    result = ResolvingSet(tuple(rows), "row-basis")
    check = verify_resolving(G, rows)
    if not check:
        raise CriticalInvariantError(
            f"row basis of size {len(rows)} does not resolve {P}: {check.message}",
            witness=check.witness)
    return result


def incidence_images_injective(M, rows):
    """Check that u -> M1 u is injective on generator incidence vectors."""
    mat = M.matrix if hasattr(M, "matrix") else np.asarray(M)
    images = mat[list(rows)] @ mat.T  # column g is M1 applied to generator g
    seen = {}
    for g, col in enumerate(map(tuple, images.T.tolist())):
        if col in seen:
            return Check(False, (seen[col], g), f"generators {seen[col]} and {g} collide")
        seen[col] = g
    return Check(True)


def greedy_minimize(G, S, mode="auto"):
    """Drop elements lowest index first while the set stays resolving.

    Resolving is monotone under supersets, so one ascending pass gives an
    inclusion-minimal subset.
    """
    D = distance_matrix(G, mode)
    current = sorted(getattr(S, "vertices", S))
    if kernels.resolving_witness(D, current)[0] >= 0:
        raise InvariantViolation("greedy_minimize needs a resolving starting set")
    for v in list(current):
        trial = [x for x in current if x != v]
        if kernels.resolving_witness(D, trial)[0] < 0:
            current = trial
    return ResolvingSet(tuple(current), "greedy")


def _search_task(args):
    D, k, top, budget = args
    return kernels.first_resolving_subset(D, k, top, budget)


def _is_complete(G):
    return G.num_edges == G.n * (G.n - 1) // 2


def exact_minimum_resolving_set(G, limit=None, budget=DEFAULT_SUBSET_BUDGET, jobs=1,
                                mode="auto"):
    """First resolving set of minimum size in colex order, or None past ``limit``.

    Raises ResourceError when the next size level holds more subsets than
    the remaining budget.
    """
    n = G.n
    limit = n if limit is None else min(limit, n)
    if n <= 1:
        return ResolvingSet((), "exhaustive")
    if _is_complete(G):
        return ResolvingSet(tuple(range(n - 1)), "exhaustive") if n - 1 <= limit else None
    D = np.ascontiguousarray(distance_matrix(G, mode))
    diam = int(D.max())
    k = 1
    while (diam + 1) ** k < n:
        k += 1
    used = 0
    for k in range(k, limit + 1):
        size = comb(n, k)
        if used + size > budget:
            raise ResourceError(
                f"searching {k}-subsets of {n} vertices needs {size} candidates; "
                f"{budget - used} of the budget left")
        tasks = [(D, k, top, size) for top in range(k - 1, n)]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = pool.map(_search_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs)))
                found = _first_hit(results)
        else:
            found = _first_hit(map(_search_task, tasks))
        used += found[1]
        if found[0] is not None:
            return ResolvingSet(tuple(found[0]), "exhaustive")
    return None


def _first_hit(results):
    steps = 0
    for subset, n_steps, _ in results:
        steps += n_steps
        if subset is not None:
            return subset, steps
    return None, steps


def exact_metric_dimension(G, limit=None, budget=DEFAULT_SUBSET_BUDGET, jobs=1):
    """Metric dimension by subset search; None if it exceeds ``limit``."""
    found = exact_minimum_resolving_set(G, limit, budget, jobs)
    return None if found is None else found.size


@dataclass(frozen=True)
class ConjectureReport:
    family: str
    q: int
    d: int
    bound: int
    rowbasis_size: int
    greedy_size: int
    exact: Optional[int]
    exact_status: str  # "computed", "exceeds limit" or "over budget"

    @property
    def ratio(self):
        """exact / bound when the exact value is known, else greedy / bound."""
        return Fraction(self.exact if self.exact is not None else self.greedy_size, self.bound)

    def to_dict(self):
        return {
            "family": self.family, "q": self.q, "d": self.d, "bound": self.bound,
            "rowbasis_size": self.rowbasis_size, "greedy_size": self.greedy_size,
            "exact": self.exact, "exact_status": self.exact_status,
            "ratio": str(self.ratio),
        }


def conjecture_report(P, points, generators, G, *, exact=True, budget=DEFAULT_SUBSET_BUDGET,
                      jobs=1, rowbasis=None, greedy=None):
    """Compare the rank bound with greedy and (budget permitting) exact sizes."""
    bound = eval_rank_bound(ParamTriple.for_family(P.family, P.q, P.d))
    rowbasis = rowbasis or rowbasis_resolving_set(P, points, generators, G)
    greedy = greedy or greedy_minimize(G, rowbasis)
    value, status = None, "skipped"
    if exact:
        try:
            found = exact_minimum_resolving_set(G, greedy.size, budget, jobs)
        except ResourceError:
            status = "over budget"
        else:
            if found is None:
                status = "exceeds limit"
            else:
                value, status = found.size, "computed"
    return ConjectureReport(P.family, P.q, P.d, bound, rowbasis.size, greedy.size, value, status)
