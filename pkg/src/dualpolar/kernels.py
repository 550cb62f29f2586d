"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise, or when
``DUALPOLAR_PURE_PYTHON=1`` is set, the pure-Python module is used.  Both
expose the same functions with identical results.
"""

import os

import numpy as np

from . import _kernels_py

if os.environ.get("DUALPOLAR_PURE_PYTHON", "") not in ("", "0"):
    _backend = _kernels_py
else:
    try:
        from . import _kernels_c as _backend
    except ImportError:  # extension not built
        _backend = _kernels_py

BACKEND = _backend.BACKEND


def backend_module(name=None):
    """Return a kernel module by name ("python" or "cython"), or the active one."""
    if name is None:
        return _backend
    if name == "python":
        return _kernels_py
    if name == "cython":
        from . import _kernels_c
        return _kernels_c
    raise ValueError(f"unknown kernel backend {name!r}")


def _field_args(f):
    a = f.arrays
    return a["add"], a["mul"], a["neg"], a["inv"]


def rref_gf(rows, f):
    rows = np.asarray(rows, dtype=np.int64)
    if rows.size == 0:
        return rows.reshape(0, rows.shape[-1] if rows.ndim == 2 else 0)
    return _backend.rref_gf(rows, *_field_args(f))


def rank_gf(rows, f):
    rows = np.asarray(rows, dtype=np.int64)
    if rows.size == 0:
        return 0
    return _backend.rank_gf(rows, *_field_args(f))


def pairwise_intersection_dims(bases, f):
    bases = np.asarray(bases, dtype=np.int64)
    if bases.shape[0] == 0:
        return np.zeros((0, 0), dtype=np.int64)
    return _backend.pairwise_intersection_dims(bases, *_field_args(f))


def bfs_all(indptr, indices):
    return _backend.bfs_all(np.asarray(indptr, dtype=np.int64),
                            np.asarray(indices, dtype=np.int64))


def resolving_witness(dist, subset):
    return _backend.resolving_witness(np.ascontiguousarray(dist, dtype=np.int64),
                                      np.asarray(subset, dtype=np.int64))


def first_resolving_subset(dist, k, top, budget):
    return _backend.first_resolving_subset(np.ascontiguousarray(dist, dtype=np.int64),
                                           k, top, budget)


def bareiss_pivots(rows):
    rows = [[int(x) for x in r] for r in rows]
    return list(_backend.bareiss_pivots(rows))
