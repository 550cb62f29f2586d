"""The full check battery run by ``verify-all``: one row per check."""

import csv
import io
from dataclasses import dataclass

from .errors import PolarError
from .exactla import gram_product_check, independent_row_basis, nullity_equals_m2
from .formulas import (ParamTriple, eval_counts, eval_family_bound, eval_gwl_bound,
                       eval_rank_bound, eval_srg, generators_through)
from .graphs import check_distance_law, eigen_multiplicity, measure_srg
from .isotropic import extensions
from .resolving import verify_resolving

CSV_HEADER = "instance,check,expected,observed,pass"


@dataclass(frozen=True)
class Row:
    instance: str
    check: str
    expected: str
    observed: str
    passed: bool

    def csv(self):
        buf = io.StringIO()
        csv.writer(buf, lineterminator="").writerow(
            [self.instance, self.check, self.expected, self.observed,
             "true" if self.passed else "false"])
        return buf.getvalue()


def _fmt(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def run_battery(inst, graph=None):
    """Every invariant for one instance; ``graph`` replaces the dual polar graph."""
    P = inst.P
    t = ParamTriple.for_family(P.family, P.q, P.d)
    G = inst.dual_graph if graph is None else graph
    rows = []

    def add(name, expected, fn):
        try:
            observed = fn()
        except PolarError as exc:
            rows.append(Row(inst.label, name, _fmt(expected), _fmt(f"error: {exc}"), False))
            return
        rows.append(Row(inst.label, name, _fmt(expected), _fmt(observed), expected == observed))

    points, gens = eval_counts(t)
    add("points", points, lambda: len(inst.points))
    add("generators", gens, lambda: len(inst.generators))
    add("no_larger_isotropic", 0,
        lambda: sum(len(extensions(P, g, inst.points)) for g in inst.generators))

    def through_point():
        sums = sorted({int(c) for c in inst.incidence.matrix.sum(axis=0)})
        return sums[0] if len(sums) == 1 else sums

    add("generators_through_point", generators_through(t, 1), through_point)

    def distance_law():
        check = check_distance_law(P, G, inst.generators)
        return True if check else check.message

    add("distance_law", True, distance_law)

    if P.d >= 2:
        srg = eval_srg(t)
        try:
            measured = measure_srg(inst.collinearity)
        except PolarError as exc:
            measured = exc

        def srg_value(name):
            if isinstance(measured, Exception):
                raise measured
            return getattr(measured, name)

        for name in ("n", "k", "a", "c"):
            add(f"srg_{name}", getattr(srg, name), lambda name=name: srg_value(name))
        add("mult_theta1", srg.m1, lambda: eigen_multiplicity(inst.collinearity, srg.theta1))
        add("mult_theta2", srg.m2, lambda: eigen_multiplicity(inst.collinearity, srg.theta2))

        def gram_identity():
            check = gram_product_check(P, inst.incidence, inst.collinearity)
            return True if check else check.message

        add("gram_identity", True, gram_identity)
        add("nullity_m2", True, lambda: bool(nullity_equals_m2(P, inst.incidence, inst.rank)))

    bound = eval_rank_bound(t)
    add("rank", bound, lambda: inst.rank)
    add("table_bound", bound, lambda: eval_family_bound(t, P.family))
    if P.family == "Cd":
        add("gwl_double", 2 * eval_family_bound(t, P.family), lambda: eval_gwl_bound(t))

    def rowbasis_resolves():
        basis = independent_row_basis(inst.incidence)
        check = verify_resolving(G, basis, mode="bfs")
        return len(basis) if check else check.message

    add("rowbasis_resolving", bound, rowbasis_resolves)
    return rows
