"""Text and JSON formats for subspaces, graphs and incidence matrices.

Field elements are written as their decimal index.
"""

import json

import numpy as np

from .errors import InvalidParameterError
from .graphs import Graph
from .subspace import Subspace


def format_subspaces(P, t, subspaces):
    """One subspace per line: rows joined by ';', coordinates by ','."""
    lines = [f"# family,q,d,t,count: {P.family},{P.q},{P.d},{t},{len(subspaces)}"]
    lines.extend(str(s) for s in subspaces)
    return "\n".join(lines) + "\n"


def parse_subspaces(text):
    """Inverse of format_subspaces; returns (header dict, list of Subspace)."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# family,q,d,t,count:"):
        raise InvalidParameterError("missing subspace-list header")
    family, q, d, t, count = lines[0].split(":", 1)[1].strip().split(",")
    header = {"family": family, "q": int(q), "d": int(d), "t": int(t), "count": int(count)}
    subspaces = []
    for line in lines[1:]:
        if not line.strip():
            continue
        rows = tuple(tuple(int(x) for x in r.split(",")) for r in line.split(";"))
        subspaces.append(Subspace(rows, len(rows[0]), header["q"]))
    if len(subspaces) != header["count"]:
        raise InvalidParameterError(
            f"header announces {header['count']} subspaces, found {len(subspaces)}")
    return header, subspaces


def format_edges(P, G):
    lines = [f"# family,q,d: {P.family},{P.q},{P.d}"]
    lines.extend(f"{i} {j}" for i, j in G.edges())
    return "\n".join(lines) + "\n"


def parse_edges(text, n):
    edges = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        i, j = (int(x) for x in line.split())
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidParameterError(f"edge {i} {j} outside 0..{n - 1}")
        edges.append((min(i, j), max(i, j)))
    return Graph.from_edges(n, edges)


def format_incidence_dense(M):
    mat = M.matrix
    lines = ["# points: " + " ".join(map(str, M.col_labels))]
    lines.extend("".join("1" if x else "0" for x in row) for row in mat.tolist())
    return "\n".join(lines) + "\n"


def format_incidence_pairs(M):
    lines = ["# generator point"]
    lines.extend(f"{g} {p}" for g, p in np.argwhere(M.matrix == 1).tolist())
    return "\n".join(lines) + "\n"


def parse_incidence_dense(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("# points:"):
        raise InvalidParameterError("missing incidence header")
    rows = [[int(ch) for ch in ln.strip()] for ln in lines[1:]]
    return np.array(rows, dtype=np.int64)


def dump_json(obj):
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
