"""Pure-Python kernels.  Reference behaviour for ``_kernels_c``.

Every function here has a compiled twin with an identical signature and
identical results; ``dualpolar.kernels`` picks one at import time.
Matrices cross this boundary as int64 numpy arrays, except the exact
integer routines which take lists of Python ints.
"""

import numpy as np

BACKEND = "python"


def _rref_rows(rows, add, mul, neg, inv):
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        scale = inv[pr[c]]
        if scale != 1:
            pr[:] = [mul[scale][x] for x in pr]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = neg[rows[i][c]]
                ri = rows[i]
                for j in range(c, ncols):
                    if pr[j]:
                        ri[j] = add[ri[j]][mul[f][pr[j]]]
        r += 1
    return rows[:r]


def _tables(add, mul, neg, inv):
    return add.tolist(), mul.tolist(), neg.tolist(), inv.tolist()


def rref_gf(rows, add, mul, neg, inv):
    """Reduced row echelon form over GF(q); zero rows dropped."""
    out = _rref_rows(np.asarray(rows).tolist(), *_tables(add, mul, neg, inv))
    ncols = np.asarray(rows).shape[1]
    return np.array(out, dtype=np.int64).reshape(len(out), ncols)


def rank_gf(rows, add, mul, neg, inv):
    return len(_rref_rows(np.asarray(rows).tolist(), *_tables(add, mul, neg, inv)))


def pairwise_intersection_dims(bases, add, mul, neg, inv):
    """dim(U_i & U_j) for every pair of equal-dimension subspaces.

    ``bases`` has shape (m, t, n): m subspaces, each with t independent rows.
    """
    bases = np.asarray(bases)
    m, t = bases.shape[0], bases.shape[1]
    tabs = _tables(add, mul, neg, inv)
    blist = bases.tolist()
    out = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        out[i, i] = t
        for j in range(i + 1, m):
            r = len(_rref_rows(blist[i] + blist[j], *tabs))
            out[i, j] = out[j, i] = 2 * t - r
    return out


def bfs_all(indptr, indices):
    """All-pairs BFS on a CSR adjacency; -1 marks unreachable pairs."""
    indptr = np.asarray(indptr).tolist()
    indices = np.asarray(indices).tolist()
    n = len(indptr) - 1
    out = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        frontier = [s]
        level = 0
        while frontier:
            level += 1
            nxt = []
            for u in frontier:
                for v in indices[indptr[u]:indptr[u + 1]]:
                    if dist[v] < 0:
                        dist[v] = level
                        nxt.append(v)
            frontier = nxt
        out[s] = dist
    return out


def _witness(cols, n):
    """Refine vertex classes by each distance column; None if all split."""
    labels = [0] * n
    nclasses = 1
    for col in cols:
        seen = {}
        for v in range(n):
            key = (labels[v], col[v])
            lab = seen.get(key)
            if lab is None:
                lab = seen[key] = len(seen)
            labels[v] = lab
        nclasses = len(seen)
        if nclasses == n:
            return None
    if n <= 1:
        return None
    first = {}
    for v in range(n):
        u = first.setdefault(labels[v], v)
        if u != v:
            return (u, v)
    return None


def resolving_witness(dist, subset):
    """First pair of vertices not separated by ``subset``; (-1, -1) if none."""
    dist = np.asarray(dist)
    n = dist.shape[0]
    cols = [dist[:, s].tolist() for s in np.asarray(subset).tolist()]
    w = _witness(cols, n)
    return (-1, -1) if w is None else w


def first_resolving_subset(dist, k, top, budget):
    """Search k-subsets with largest element ``top`` in colex order.

    Returns ``(subset, steps, complete)``.  ``subset`` is None when no
    candidate resolves; ``complete`` is False when the budget of examined
    candidates ran out first.
    """
    dist = np.asarray(dist)
    n = dist.shape[0]
    cols = dist.T.tolist()
    if k == 0:
        return (None if n > 1 else [], 0, True)
    if k - 1 > top:
        return None, 0, True
    c = list(range(k - 1)) + [top]
    witnesses = []
    steps = 0
    while True:
        if steps >= budget:
            return None, steps, False
        steps += 1
        pruned = False
        for u, w in witnesses:
            if all(cols[s][u] == cols[s][w] for s in c):
                pruned = True
                break
        if not pruned:
            wit = _witness([cols[s] for s in c], n)
            if wit is None:
                return list(c), steps, True
            witnesses.insert(0, wit)
            del witnesses[32:]
        # colex successor of c[:k-1] within range(top)
        j = 0
        while j < k - 1:
            limit = c[j + 1] if j + 1 < k - 1 else top
            if c[j] + 1 < limit:
                break
            j += 1
        if j == k - 1:
            return None, steps, True
        c[j] += 1
        for i in range(j):
            c[i] = i


def bareiss_pivots(rows):
    """Pivot columns of fraction-free Bareiss elimination over Python ints.

    Their count is the rank over Q.  Columns are scanned left to right, so
    the pivots are the lexicographically first independent columns.
    """
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        pr = a[r]
        for i in range(r + 1, m):
            ai = a[i]
            f = ai[c]
            if f:
                for j in range(c + 1, n):
                    ai[j] = (p * ai[j] - f * pr[j]) // prev
            elif p != prev:
                for j in range(c + 1, n):
                    if ai[j]:
                        ai[j] = p * ai[j] // prev
            ai[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return pivots
