"""The six classical families with a fixed standard form each.

Coordinates are 0-based.  The forms are

* ``Cd``: symplectic, b(x, y) = sum x[2i] y[2i+1] - x[2i+1] y[2i]
* ``Dd``: hyperbolic quadric, f = x0 x1 + ... + x[2d-2] x[2d-1]
* ``Bd``: parabolic quadric, f = x0^2 + x1 x2 + ... + x[2d-1] x[2d]
* ``2D``: elliptic quadric, hyperbolic part on x0..x[2d-1] plus
  u^2 + u v + lam v^2 on (u, v) = (x[2d], x[2d+1])
* ``2A_odd`` / ``2A_even``: Hermitian, b(x, y) = sum x_i conj(y_i)

For the orthogonal families b is the polarisation of f, so in
characteristic 2 the parabolic form has a one-dimensional bilinear radical
on which f does not vanish.
"""

from dataclasses import dataclass, field as dc_field
from itertools import product

from .errors import InvalidParameterError, InvariantViolation, UnsupportedOperationError
from .gf import integer_sqrt, make_field, prime_power
from .subspace import Subspace, nullspace

# name -> (2e, ambient dimension as a function of d, kind)
FAMILIES = {
    "Cd": (2, lambda d: 2 * d, "symplectic"),
    "Bd": (2, lambda d: 2 * d + 1, "orthogonal"),
    "Dd": (0, lambda d: 2 * d, "orthogonal"),
    "2D": (4, lambda d: 2 * d + 2, "orthogonal"),
    "2A_even": (3, lambda d: 2 * d + 1, "unitary"),
    "2A_odd": (1, lambda d: 2 * d, "unitary"),
}

_ALIASES = {
    "c": "Cd", "cd": "Cd", "sp": "Cd", "symplectic": "Cd",
    "b": "Bd", "bd": "Bd", "parabolic": "Bd",
    "d": "Dd", "dd": "Dd", "hyperbolic": "Dd",
    "2d": "2D", "elliptic": "2D",
    "2aodd": "2A_odd", "2a_odd": "2A_odd",
    "2aeven": "2A_even", "2a_even": "2A_even",
}

DEFAULT_BUDGET = 50_000


def canonical_family(name):
    key = str(name).strip().lower().replace("-", "_")
    if key in _ALIASES:
        return _ALIASES[key]
    if key.replace("_", "") in _ALIASES:
        return _ALIASES[key.replace("_", "")]
    raise InvalidParameterError(
        f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")


def family_e2(family):
    return FAMILIES[canonical_family(family)][0]


def validate_selector(family, q, d):
    """Check a (family, q, d) triple without building anything."""
    family = canonical_family(family)
    prime_power(q)
    if not isinstance(d, int) or d < 1:
        raise InvalidParameterError(f"d must be a positive integer, got {d!r}")
    if FAMILIES[family][2] == "unitary" and integer_sqrt(q) is None:
        raise InvalidParameterError(f"q must be a perfect square for {family}, got {q}")
    return family


def predicted_generators(family, q, d):
    """Generator count prod_{i<d}(q^(e+i) + 1), exact integer arithmetic."""
    e2 = family_e2(family)
    s = integer_sqrt(q)
    total = 1
    for i in range(d):
        h = e2 + 2 * i  # twice the exponent
        total *= (s ** h if h % 2 else q ** (h // 2)) + 1
    return total


@dataclass(frozen=True)
class PolarSpaceDescriptor:
    family: str
    q: int
    d: int
    e2: int
    n_amb: int
    gram: tuple
    quad: tuple = None
    lam: int = None
    kind: str = dc_field(default="", compare=False)

    @property
    def field(self):
        return make_field(self.q)

    @property
    def orthogonal(self):
        return self.kind == "orthogonal"

    @property
    def unitary(self):
        return self.kind == "unitary"

    def to_json(self):
        out = {"family": self.family, "q": self.q, "d": self.d,
               "e2": self.e2, "n_amb": self.n_amb}
        if self.lam is not None:
            out["lambda"] = self.lam
        return out

    @classmethod
    def from_json(cls, obj):
        return make_polar_space(obj["family"], obj["q"], obj["d"], check=False)

    def __str__(self):
        return f"{self.family}(q={self.q},d={self.d})"


def elliptic_lambda(f):
    """First element lam (index order) with t^2 + t + lam irreducible."""
    for lam in f.elements:
        if all(f.add[f.add[f.mul[t][t]][t]][lam] for t in f.elements):
            return lam
    raise AssertionError("an irreducible quadratic always exists")


def _build(family, q, d):
    e2, namb, kind = FAMILIES[family]
    f = make_field(q)
    n = namb(d)
    zero = [[0] * n for _ in range(n)]
    quad = None
    lam = None
    if kind == "symplectic":
        gram = [row[:] for row in zero]
        for i in range(d):
            gram[2 * i][2 * i + 1] = 1
            gram[2 * i + 1][2 * i] = f.neg[1]
    elif kind == "unitary":
        gram = [[int(i == j) for j in range(n)] for i in range(n)]
    else:
        quad = [row[:] for row in zero]
        if family == "Bd":
            quad[0][0] = 1
            for i in range(d):
                quad[2 * i + 1][2 * i + 2] = 1
        else:
            for i in range(d):
                quad[2 * i][2 * i + 1] = 1
            if family == "2D":
                lam = elliptic_lambda(f)
                u, v = 2 * d, 2 * d + 1
                quad[u][u] = 1
                quad[u][v] = 1
                quad[v][v] = lam
        gram = [[f.add[quad[i][j]][quad[j][i]] for j in range(n)] for i in range(n)]
        quad = tuple(map(tuple, quad))
    return PolarSpaceDescriptor(family, q, d, e2, n, tuple(map(tuple, gram)), quad, lam, kind)


def make_polar_space(family, q, d, *, budget=None, check=True):
    """Descriptor for the standard form of ``family`` over GF(q), Witt index d.

    Raises ResourceError when the predicted generator count exceeds
    ``budget`` (default 50,000).  With ``check`` the form is verified to
    be non-degenerate with Witt index exactly d.
    """
    from .errors import ResourceError

    family = validate_selector(family, q, d)
    predicted = predicted_generators(family, q, d)
    budget = DEFAULT_BUDGET if budget is None else budget
    if predicted > budget:
        raise ResourceError(
            f"{family}(q={q},d={d}) has {predicted} generators, over the budget of {budget}")
    P = _build(family, q, d)
    if check:
        check_nondegenerate(P)
        w = greedy_witt_index(P)
        if w != d:
            raise InvariantViolation(f"{P}: form has Witt index {w}, expected {d}")
    return P


def _check_len(P, *vs):
    for v in vs:
        if len(v) != P.n_amb:
            raise InvalidParameterError(f"vector of length {len(v)}, expected {P.n_amb}")


def b_eval(P, u, v):
    """u^T . gram . conj(v); conj is the identity outside the unitary families."""
    _check_len(P, u, v)
    f = P.field
    if P.unitary:
        v = [f.conj_map[x] for x in v]
    add, mul = f.add, f.mul
    total = 0
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = P.gram[i]
        for j, vj in enumerate(v):
            if vj and row[j]:
                total = add[total][mul[ui][mul[row[j]][vj]]]
    return total


def f_eval(P, v):
    """Quadratic form of an orthogonal family."""
    if not P.orthogonal:
        raise UnsupportedOperationError(f"{P.family} has no quadratic form")
    _check_len(P, v)
    f = P.field
    add, mul = f.add, f.mul
    total = 0
    for i, row in enumerate(P.quad):
        if not v[i]:
            continue
        for j in range(i, P.n_amb):
            if row[j] and v[j]:
                total = add[total][mul[row[j]][mul[v[i]][v[j]]]]
    return total


def is_isotropic_vector(P, v):
    return (f_eval(P, v) if P.orthogonal else b_eval(P, v, v)) == 0


def is_totally_isotropic(P, S):
    """True iff the form vanishes on S (pairwise check on a basis suffices)."""
    rows = S.rows if isinstance(S, Subspace) else tuple(S)
    if isinstance(S, Subspace) and (S.n, S.q) != (P.n_amb, P.q):
        raise InvalidParameterError(f"subspace of V({S.n},{S.q}) tested in {P}")
    for i, x in enumerate(rows):
        if P.orthogonal:
            if f_eval(P, x):
                return False
        elif b_eval(P, x, x):
            return False
        for y in rows[i + 1:]:
            if b_eval(P, x, y):
                return False
    return True


def perp_functionals(P, vectors):
    """Rows w with b(x, v) = w . x, one per vector v."""
    f = P.field
    out = []
    for v in vectors:
        cv = [f.conj_map[x] for x in v] if P.unitary else v
        out.append([f.dot(P.gram[i], cv) for i in range(P.n_amb)])
    return out


def perp(P, S):
    """{v : b(v, s) = 0 for all s in S}."""
    return nullspace(perp_functionals(P, S.rows), P.q, P.n_amb)


def radical(P):
    return perp(P, Subspace.whole(P.n_amb, P.q))


def check_nondegenerate(P):
    rad = radical(P)
    if rad.dim == 0:
        return
    if P.family == "Bd" and P.field.p == 2 and rad.dim == 1 and f_eval(P, rad.rows[0]):
        return
    raise InvariantViolation(f"{P}: form is degenerate (radical of dimension {rad.dim})",
                             witness=rad)


def greedy_witt_index(P):
    """Dimension of one maximal totally isotropic subspace built greedily.

    In a non-degenerate polar space all maximal totally isotropic subspaces
    have the same dimension, so this is the Witt index.
    """
    f = P.field
    U = Subspace.zero(P.n_amb, P.q)
    while True:
        perp_u = perp(P, U)
        ext = None
        for coeffs in product(range(f.q), repeat=perp_u.dim):
            if not any(coeffs):
                continue
            v = [0] * P.n_amb
            for c, r in zip(coeffs, perp_u.rows):
                if c:
                    v = [f.add[a][f.mul[c][b]] for a, b in zip(v, r)]
            if is_isotropic_vector(P, v) and not U.contains_vector(v):
                ext = v
                break
        if ext is None:
            return U.dim
        U = Subspace.span(list(U.rows) + [ext], P.q, P.n_amb)
