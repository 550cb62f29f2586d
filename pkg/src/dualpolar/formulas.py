"""Closed-form counts, strongly regular parameters and rank bounds.

Everything is exact: exponents are carried doubled (``h`` stands for
``q**(h/2)``), so the half-integer powers of the Hermitian families become
integer powers of ``s = sqrt(q)``.  Nothing here touches the enumeration
code; the cross-checks elsewhere depend on that separation.
"""

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import InvalidParameterError, InvariantViolation

_FAMILY_E2 = {"Cd": 2, "Bd": 2, "Dd": 0, "2D": 4, "2A_even": 3, "2A_odd": 1}


@dataclass(frozen=True)
class ParamTriple:
    q: int
    d: int
    e2: int
    s: Optional[int] = None

    def __post_init__(self):
        if self.e2 not in (0, 1, 2, 3, 4):
            raise InvalidParameterError(f"2e must be one of 0..4, got {self.e2}")
        if self.d < 1:
            raise InvalidParameterError(f"d must be at least 1, got {self.d}")
        if self.q < 2:
            raise InvalidParameterError(f"q must be at least 2, got {self.q}")
        s = self.s
        if s is None:
            r = int(round(self.q ** 0.5))
            s = r if r * r == self.q else None
            object.__setattr__(self, "s", s)
        elif s * s != self.q:
            raise InvalidParameterError(f"s = {s} is not the square root of q = {self.q}")
        if self.e2 % 2 and self.s is None:
            raise InvalidParameterError(f"q must be a perfect square when 2e is odd, got {self.q}")

    @classmethod
    def for_family(cls, family, q, d):
        from .forms import canonical_family
        return cls(q, d, _FAMILY_E2[canonical_family(family)])

    def qp(self, h):
        """q ** (h / 2) as an exact Fraction."""
        if h % 2 == 0:
            return Fraction(self.q) ** (h // 2)
        if self.s is None:
            raise InvalidParameterError(f"q^({h}/2) needs q = {self.q} to be a square")
        return Fraction(self.s) ** h


def _integral(x, what):
    if x.denominator != 1:
        raise InvariantViolation(f"{what} evaluated to the non-integer {x}")
    return int(x)


def generators_through(t, dim):
    """Generators through a fixed totally isotropic space of dimension ``dim``."""
    total = Fraction(1)
    for i in range(t.d - dim):
        total *= t.qp(t.e2 + 2 * i) + 1
    return _integral(total, f"N_{dim}")


def eval_counts(t):
    """(points, generators) of the polar space."""
    q, d, e2 = t.q, t.d, t.e2
    points = (t.qp(2 * d + e2 - 2) + 1) * (Fraction(q) ** d - 1) / (q - 1)
    return _integral(points, "point count"), generators_through(t, 0)


class SrgFormulas(NamedTuple):
    n: int
    k: int
    a: int
    c: int
    theta1: int
    theta2: int
    m1: int
    m2: int


def eval_srg(t):
    """Collinearity-graph parameters and spectrum.

    The positive non-principal eigenvalue is q^(d-1) - 1, the root of
    T^2 + (c-a)T + (c-k) other than -(q^(d+e-2) + 1); the multiplicity
    formulas are checked against the generic strongly regular ones.
    """
    q, d, e2 = t.q, t.d, t.e2
    if d < 2:
        raise InvalidParameterError("the collinearity graph needs d >= 2")
    Q = Fraction(q)
    n = (t.qp(2 * d + e2 - 2) + 1) * (Q ** d - 1) / (q - 1)
    k = q * (t.qp(2 * d + e2 - 4) + 1) * (Q ** (d - 1) - 1) / (q - 1)
    a = (q - 1) + q * q * (t.qp(2 * d + e2 - 6) + 1) * (Q ** (d - 2) - 1) / (q - 1)
    c = (t.qp(2 * d + e2 - 4) + 1) * (Q ** (d - 1) - 1) / (q - 1)
    theta1 = Q ** (d - 1) - 1
    theta2 = -(t.qp(2 * d + e2 - 4) + 1)
    m1 = t.qp(e2) * (t.qp(2 * d + e2 - 4) + 1) / (t.qp(e2 - 2) + 1) * (Q ** d - 1) / (q - 1)
    m2 = q * (t.qp(2 * d + e2 - 2) + 1) / (t.qp(e2 - 2) + 1) * (Q ** (d - 1) - 1) / (q - 1)

    for th in (theta1, theta2):
        if th * th + (c - a) * th + (c - k) != 0:
            raise InvariantViolation(f"{th} is not a root of T^2 + {c - a}T + {c - k}")
    if m1 != (theta2 + 1) * k * (k - theta2) / (c * (theta2 - theta1)):
        raise InvariantViolation(f"m1 = {m1} disagrees with the generic multiplicity formula")
    if m2 != n - m1 - 1:
        raise InvariantViolation(f"m2 = {m2} but n - m1 - 1 = {n - m1 - 1}")
    vals = [_integral(x, name) for x, name in zip(
        (n, k, a, c, theta1, theta2, m1, m2), SrgFormulas._fields)]
    return SrgFormulas(*vals)


def eval_rank_bound(t):
    """Rank over R of the generator/point incidence matrix."""
    q, d, e2 = t.q, t.d, t.e2
    top = t.qp(2 * d + e2 - 2)
    val = (top + 1) * (top - t.qp(e2 - 2) + q - 1) / ((t.qp(e2 - 2) + 1) * (q - 1))
    return _integral(val, "rank bound")


def eval_family_bound(t, family):
    """The per-family restatement of the rank bound."""
    from .forms import canonical_family
    family = canonical_family(family)
    if _FAMILY_E2[family] != t.e2:
        raise InvalidParameterError(f"{family} has 2e = {_FAMILY_E2[family]}, not {t.e2}")
    q, d = t.q, t.d
    Q = Fraction(q)
    if family in ("Cd", "Bd"):
        val = Fraction(1, 2) * (Q ** d + 1) * (Q ** d + q - 2) / (q - 1)
    elif family == "Dd":
        val = (Q ** (d - 1) + 1) * (Q ** d + q * q - q - 1) / (q * q - 1)
    elif family == "2D":
        val = (Q ** (2 * (d + 1)) - 1) / (q * q - 1)
    elif family == "2A_even":
        s = t.qp(1)
        val = (t.qp(2 * d + 1) + 1) * (t.qp(2 * d + 1) + q - s - 1) / ((s + 1) * (q - 1))
    else:
        s = t.qp(1)
        val = (t.qp(2 * d - 1) + 1) * (Q ** d + t.qp(3) - s - 1) / ((s + 1) * (q - 1))
    return _integral(val, f"{family} bound")


def eval_gwl_bound(t):
    """The earlier symplectic bound (q^d + 1)(q^d + q - 2)/(q - 1)."""
    if t.e2 != 2:
        raise InvalidParameterError("the symplectic comparison bound needs 2e = 2")
    Q = Fraction(t.q)
    return _integral((Q ** t.d + 1) * (Q ** t.d + t.q - 2) / (t.q - 1), "symplectic bound")


@dataclass(frozen=True)
class FormulaReport:
    family: str
    q: int
    d: int
    e2: int
    points: int
    generators: int
    n: Optional[int] = None
    k: Optional[int] = None
    a: Optional[int] = None
    c: Optional[int] = None
    theta1: Optional[int] = None
    theta2: Optional[int] = None
    m1: Optional[int] = None
    m2: Optional[int] = None
    rank_bound: int = 0
    family_bound: int = 0
    gwl_bound: Optional[int] = None

    def to_dict(self):
        return {key: (None if v is None else v if isinstance(v, str) else str(v))
                for key, v in asdict(self).items()}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)


def formula_report(family, q, d):
    """Evaluate every closed form for one instance (no enumeration)."""
    from .forms import validate_selector
    family = validate_selector(family, q, d)
    t = ParamTriple.for_family(family, q, d)
    points, gens = eval_counts(t)
    srg = eval_srg(t)._asdict() if d >= 2 else {}
    rank = eval_rank_bound(t)
    fam = eval_family_bound(t, family)
    gwl = eval_gwl_bound(t) if family == "Cd" else None
    report = FormulaReport(family, q, d, t.e2, points, gens, **srg,
                           rank_bound=rank, family_bound=fam, gwl_bound=gwl)
    if d >= 2 and (report.n != points or rank != points - report.m2):
        raise InvariantViolation(f"inconsistent closed forms for {family}({q},{d})")
    return report
