"""Time the pure-Python and compiled kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from dualpolar.exactla import _as_rows
from dualpolar.graphs import subspace_bases
from dualpolar.kernels import backend_module
from dualpolar.pipeline import Instance


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def cases():
    herm = Instance("2A_even", 4, 2)
    symp = Instance("Cd", 2, 3)
    orth = Instance("Dd", 2, 3)
    f = herm.P.field.arrays
    field = (f["add"], f["mul"], f["neg"], f["inv"])
    bases = subspace_bases(herm.generators)
    indptr, indices = herm.dual_graph.csr()
    D = np.ascontiguousarray(orth.dual_graph.distances, dtype=np.int64)
    Dh = np.ascontiguousarray(herm.dual_graph.distances, dtype=np.int64)
    subset = np.array(herm.rowbasis.vertices, dtype=np.int64)
    rows = _as_rows(symp.incidence)
    return [
        ("pairwise_intersection_dims 2A_even(4,2)", lambda m: m.pairwise_intersection_dims(bases, *field)),
        ("bfs_all 2A_even(4,2)", lambda m: m.bfs_all(indptr, indices)),
        ("resolving_witness 2A_even(4,2)", lambda m: m.resolving_witness(Dh, subset)),
        ("first_resolving_subset Dd(2,3) k=7", lambda m: [m.first_resolving_subset(D, 7, top, 10 ** 8)
                                                          for top in range(6, D.shape[0])]),
        ("bareiss_pivots Cd(2,3) 135x63", lambda m: m.bareiss_pivots(rows)),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    py = backend_module("python")
    try:
        cy = backend_module("cython")
    except ImportError:
        raise SystemExit("compiled kernels are not built; run `pip install -e .` first")
    print(f"{'kernel':44s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn in cases():
        tp = best_of(lambda: fn(py), args.repeat)
        tc = best_of(lambda: fn(cy), args.repeat)
        print(f"{name:44s} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
