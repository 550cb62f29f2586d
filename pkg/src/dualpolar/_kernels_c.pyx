# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; behaviour matches ``_kernels_py`` exactly."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()

BACKEND = "cython"


cdef Py_ssize_t _rref_inplace(int64_t[:, ::1] a, const int64_t[:, ::1] add,
                              const int64_t[:, ::1] mul, const int64_t[::1] neg,
                              const int64_t[::1] inv) noexcept nogil:
    cdef Py_ssize_t nrows = a.shape[0], ncols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t tmp, scale, f
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        scale = inv[a[r, c]]
        if scale != 1:
            for j in range(c, ncols):
                a[r, j] = mul[scale, a[r, j]]
        for i in range(nrows):
            if i != r and a[i, c] != 0:
                f = neg[a[i, c]]
                for j in range(c, ncols):
                    if a[r, j] != 0:
                        a[i, j] = add[a[i, j], mul[f, a[r, j]]]
        r += 1
    return r


def rref_gf(rows, add, mul, neg, inv):
    """Reduced row echelon form over GF(q); zero rows dropped."""
    cdef int64_t[:, ::1] a = np.array(rows, dtype=np.int64, order="C", ndmin=2)
    cdef Py_ssize_t r = _rref_inplace(a, add, mul, neg, inv)
    return np.asarray(a)[:r].copy()


def rank_gf(rows, add, mul, neg, inv):
    cdef int64_t[:, ::1] a = np.array(rows, dtype=np.int64, order="C", ndmin=2)
    return int(_rref_inplace(a, add, mul, neg, inv))


def pairwise_intersection_dims(bases, add, mul, neg, inv):
    """dim(U_i & U_j) for every pair of equal-dimension subspaces.

    ``bases`` has shape (m, t, n): m subspaces, each with t independent rows.
    """
    cdef int64_t[:, :, ::1] b = np.ascontiguousarray(bases, dtype=np.int64)
    cdef const int64_t[:, ::1] add_v = add
    cdef const int64_t[:, ::1] mul_v = mul
    cdef const int64_t[::1] neg_v = neg
    cdef const int64_t[::1] inv_v = inv
    cdef Py_ssize_t m = b.shape[0], t = b.shape[1], n = b.shape[2]
    out_arr = np.zeros((m, m), dtype=np.int64)
    cdef int64_t[:, ::1] out = out_arr
    cdef int64_t[:, ::1] work = np.zeros((2 * t, n), dtype=np.int64)
    cdef Py_ssize_t i, j, x, y, r
    with nogil:
        for i in range(m):
            out[i, i] = t
            for j in range(i + 1, m):
                for x in range(t):
                    for y in range(n):
                        work[x, y] = b[i, x, y]
                        work[t + x, y] = b[j, x, y]
                r = _rref_inplace(work, add_v, mul_v, neg_v, inv_v)
                out[i, j] = 2 * t - r
                out[j, i] = 2 * t - r
    return out_arr


def bfs_all(indptr, indices):
    """All-pairs BFS on a CSR adjacency; -1 marks unreachable pairs."""
    cdef const int64_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const int64_t[::1] ix = np.ascontiguousarray(indices, dtype=np.int64)
    cdef Py_ssize_t n = ip.shape[0] - 1
    out_arr = np.full((n, n), -1, dtype=np.int64)
    cdef int64_t[:, ::1] out = out_arr
    cdef int64_t[::1] queue = np.zeros(max(n, 1), dtype=np.int64)
    cdef Py_ssize_t s, head, tail, u, v, e
    with nogil:
        for s in range(n):
            out[s, s] = 0
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                for e in range(ip[u], ip[u + 1]):
                    v = ix[e]
                    if out[s, v] < 0:
                        out[s, v] = out[s, u] + 1
                        queue[tail] = v
                        tail += 1
    return out_arr


cdef int _refine(const int64_t[:, ::1] dist, int64_t* subset, Py_ssize_t k,
                 int64_t[::1] labels, int64_t[::1] table, int64_t[::1] stamp,
                 int64_t* witness) noexcept nogil:
    # Returns 1 when the columns in subset separate every vertex.
    cdef Py_ssize_t n = dist.shape[0]
    cdef Py_ssize_t v, idx, sidx
    cdef int64_t nclasses, key, s, width, u
    for v in range(n):
        labels[v] = 0
    nclasses = 1
    width = table.shape[0] // max(n, 1)
    for sidx in range(k):
        s = subset[sidx]
        stamp[0] += 1
        nclasses = 0
        for v in range(n):
            key = labels[v] * width + dist[v, s]
            if stamp[1 + key] != stamp[0]:
                stamp[1 + key] = stamp[0]
                table[key] = nclasses
                nclasses += 1
            labels[v] = table[key]
        if nclasses == n:
            return 1
    if n <= 1:
        return 1
    # first vertex whose class repeats, paired with the class's first member
    stamp[0] += 1
    for v in range(n):
        idx = labels[v]
        if stamp[1 + idx] == stamp[0]:
            witness[0] = table[idx]
            witness[1] = v
            return 0
        stamp[1 + idx] = stamp[0]
        table[idx] = v
    return 1


cdef class _Scratch:
    cdef int64_t[::1] labels, table, stamp

    def __cinit__(self, Py_ssize_t n, int64_t maxdist):
        width = maxdist + 1 if maxdist >= 0 else 1
        size = max(n, 1) * max(width, 1)
        self.labels = np.zeros(max(n, 1), dtype=np.int64)
        self.table = np.zeros(size, dtype=np.int64)
        self.stamp = np.zeros(size + 1, dtype=np.int64)


def resolving_witness(dist, subset):
    """First pair of vertices not separated by ``subset``; (-1, -1) if none."""
    cdef const int64_t[:, ::1] d = np.ascontiguousarray(dist, dtype=np.int64)
    cdef int64_t[::1] s = np.ascontiguousarray(subset, dtype=np.int64)
    cdef Py_ssize_t n = d.shape[0]
    cdef int64_t maxd = int(np.max(dist)) if n else 0
    cdef _Scratch sc = _Scratch(n, maxd)
    cdef int64_t witness[2]
    cdef int ok
    cdef int64_t dummy = 0
    cdef int64_t* sp = &dummy
    if s.shape[0]:
        sp = &s[0]
    with nogil:
        ok = _refine(d, sp, s.shape[0], sc.labels, sc.table, sc.stamp, witness)
    if ok:
        return (-1, -1)
    return (int(witness[0]), int(witness[1]))


def first_resolving_subset(dist, Py_ssize_t k, Py_ssize_t top, int64_t budget):
    """Search k-subsets with largest element ``top`` in colex order.

    Returns ``(subset, steps, complete)``.  ``subset`` is None when no
    candidate resolves; ``complete`` is False when the budget of examined
    candidates ran out first.
    """
    cdef const int64_t[:, ::1] d = np.ascontiguousarray(dist, dtype=np.int64)
    cdef Py_ssize_t n = d.shape[0]
    if k == 0:
        return (None if n > 1 else [], 0, True)
    if k - 1 > top:
        return None, 0, True
    cdef int64_t maxd = int(np.max(dist)) if n else 0
    cdef _Scratch sc = _Scratch(n, maxd)
    cdef int64_t[::1] c = np.zeros(k, dtype=np.int64)
    cdef int64_t[:, ::1] wits = np.zeros((32, 2), dtype=np.int64)
    cdef Py_ssize_t nwits = 0, head = 0, i, j, w, x
    cdef int64_t steps = 0, limit, u, v
    cdef int64_t witness[2]
    cdef int pruned, same, found = 0, complete = 1
    for i in range(k - 1):
        c[i] = i
    c[k - 1] = top
    with nogil:
        while True:
            if steps >= budget:
                complete = 0
                break
            steps += 1
            pruned = 0
            # most recent witness first, matching the Python list order
            for w in range(nwits):
                x = (head - 1 - w + 32) % 32
                u = wits[x, 0]
                v = wits[x, 1]
                same = 1
                for i in range(k):
                    if d[u, c[i]] != d[v, c[i]]:
                        same = 0
                        break
                if same:
                    pruned = 1
                    break
            if not pruned:
                if _refine(d, &c[0], k, sc.labels, sc.table, sc.stamp, witness):
                    found = 1
                    break
                wits[head, 0] = witness[0]
                wits[head, 1] = witness[1]
                head = (head + 1) % 32
                if nwits < 32:
                    nwits += 1
            j = 0
            while j < k - 1:
                limit = c[j + 1] if j + 1 < k - 1 else top
                if c[j] + 1 < limit:
                    break
                j += 1
            if j == k - 1:
                break
            c[j] += 1
            for i in range(j):
                c[i] = i
    if found:
        return [int(c[i]) for i in range(k)], int(steps), True
    return None, int(steps), bool(complete)


def bareiss_pivots(rows):
    """Pivot columns of fraction-free Bareiss elimination over Python ints.

    Their count is the rank over Q.  Columns are scanned left to right, so
    the pivots are the lexicographically first independent columns.
    """
    cdef list a = [list(row) for row in rows]
    cdef Py_ssize_t m = len(a)
    cdef Py_ssize_t n = len(a[0]) if m else 0
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef list pr, ai
    cdef object p, f, prev = 1
    cdef list pivots = []
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        p = pr[c]
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
