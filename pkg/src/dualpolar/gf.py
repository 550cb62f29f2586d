"""Arithmetic in small finite fields GF(q), q = p^k <= 16.

Elements are plain ints in ``range(q)``.  Element ``x`` encodes the
polynomial ``sum(c_i * t**i)`` with ``x = sum(c_i * p**i)``, reduced modulo
the lexicographically smallest monic irreducible of degree ``k`` over GF(p).
Index 0 is zero and index 1 is one.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import InvalidParameterError, UnsupportedOperationError

MAX_ORDER = 16


def _is_prime(n):
    return n >= 2 and all(n % m for m in range(2, int(n ** 0.5) + 1))


def prime_power(q):
    """Return ``(p, k)`` with ``q == p**k`` or raise InvalidParameterError."""
    if not isinstance(q, (int, np.integer)) or isinstance(q, bool) or q < 2:
        raise InvalidParameterError(f"q must be a prime power, got {q!r}")
    q = int(q)
    for p in range(2, q + 1):
        if q % p == 0:
            break
    if not _is_prime(p):
        raise InvalidParameterError(f"q must be a prime power, got {q}")
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise InvalidParameterError(f"q must be a prime power, got {q}")
    return p, k


def is_prime_power(q):
    try:
        prime_power(q)
    except InvalidParameterError:
        return False
    return True


def integer_sqrt(q):
    """Return s with s*s == q, or None."""
    s = int(round(q ** 0.5))
    return s if s * s == q else None


# -- polynomials over GF(p): coefficient lists, lowest degree first ---------

def _poly_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return a[:dm] + [0] * max(0, dm - len(a))


def _is_irreducible(m, p):
    k = len(m) - 1
    for deg in range(1, k // 2 + 1):
        for low in product(range(p), repeat=deg):
            if any(_poly_mod(m, list(low) + [1], p)[:deg]):
                continue
            return False
    return True


def smallest_irreducible(p, k):
    """Smallest monic irreducible of degree k over GF(p).

    Candidates are ordered by the integer ``sum(c_i * p**i)`` of their lower
    coefficients, i.e. lexicographically from ``c_{k-1}`` down to ``c_0``.
    """
    for code in range(p ** k):
        low = [(code // p ** i) % p for i in range(k)]
        if low[0] == 0 and k > 1:
            continue
        if _is_irreducible(low + [1], p):
            return tuple(low + [1])
    raise AssertionError("an irreducible polynomial always exists")


@dataclass(frozen=True, eq=False)
class FieldTable:
    """Immutable operation tables for GF(q)."""

    q: int
    p: int
    k: int
    modulus: tuple
    add: tuple
    mul: tuple
    neg: tuple
    inv: tuple
    conj_map: tuple = None
    arrays: dict = field(default=None, repr=False)

    @property
    def elements(self):
        return range(self.q)

    @property
    def sqrt_order(self):
        """``sqrt(q)`` when the extension degree is even, else None."""
        return self.p ** (self.k // 2) if self.k % 2 == 0 else None

    def sub(self, x, y):
        return self.add[x][self.neg[y]]

    def div(self, x, y):
        if y == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.q)
        return self.mul[x][self.inv[y]]

    def power(self, x, n):
        r = 1
        for _ in range(n):
            r = self.mul[r][x]
        return r

    def conj(self, x):
        return conj(self, x)

    def dot(self, u, v):
        add, mul = self.add, self.mul
        s = 0
        for a, b in zip(u, v):
            if a and b:
                s = add[s][mul[a][b]]
        return s

    def subfield(self):
        """Elements fixed by conjugation."""
        return [x for x in self.elements if conj(self, x) == x]

    def __eq__(self, other):
        return isinstance(other, FieldTable) and (self.q, self.add, self.mul) == (
            other.q, other.add, other.mul)

    def __hash__(self):
        return hash(("GF", self.q))

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def make_field(q):
    """Build the operation tables of GF(q)."""
    p, k = prime_power(q)
    if q > MAX_ORDER:
        raise InvalidParameterError(f"q must be at most {MAX_ORDER}, got {q}")
    modulus = smallest_irreducible(p, k)

    def coeffs(x):
        return [(x // p ** i) % p for i in range(k)]

    def encode(c):
        return sum(ci * p ** i for i, ci in enumerate(c))

    add = tuple(
        tuple(encode([(a + b) % p for a, b in zip(coeffs(x), coeffs(y))]) for y in range(q))
        for x in range(q)
    )

    def polymul(x, y):
        a, b = coeffs(x), coeffs(y)
        r = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                r[i + j] = (r[i + j] + ai * bj) % p
        return encode(_poly_mod(r, list(modulus), p))

    mul = tuple(tuple(polymul(x, y) for y in range(q)) for x in range(q))
    neg = tuple(next(y for y in range(q) if add[x][y] == 0) for x in range(q))
    inv = (0,) + tuple(next(y for y in range(q) if mul[x][y] == 1) for x in range(1, q))

    conj_map = None
    if k % 2 == 0:
        s = p ** (k // 2)
        conj_map = []
        for x in range(q):
            r = 1
            for _ in range(s):
                r = mul[r][x]
            conj_map.append(r)
        conj_map = tuple(conj_map)

    arrays = {
        "add": np.array(add, dtype=np.int64),
        "mul": np.array(mul, dtype=np.int64),
        "neg": np.array(neg, dtype=np.int64),
        "inv": np.array(inv, dtype=np.int64),
    }
    for a in arrays.values():
        a.setflags(write=False)
    return FieldTable(q, p, k, modulus, add, mul, neg, inv, conj_map, arrays)


def conj(f, x):
    """The involution ``x -> x**sqrt(q)``; needs an even extension degree."""
    if f.conj_map is None:
        raise UnsupportedOperationError(
            f"conjugation needs q to be an even power of a prime; GF({f.q}) has degree {f.k}")
    return f.conj_map[x]


def generator(f):
    """Smallest element of multiplicative order q - 1."""
    for g in range(2 if f.q > 2 else 1, f.q):
        x, order = g, 1
        while x != 1:
            x = f.mul[x][g]
            order += 1
        if order == f.q - 1:
            return g
    raise AssertionError("multiplicative group is cyclic")
