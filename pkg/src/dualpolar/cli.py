"""Command-line interface: formulas, build, resolve, verify-all, table.

Exit codes: 0 success, 1 failed check, 2 invalid parameters, 3 budget
exceeded, 4 critical invariant violation.
"""

import argparse
import csv
import io as _io
import re
import sys
from pathlib import Path

from . import io
from .errors import InvalidParameterError, PolarError, ResourceError
from .formulas import FormulaReport, formula_report
from .forms import FAMILIES, canonical_family, predicted_generators, validate_selector
from .gf import is_prime_power
from .pipeline import Instance, budgets_from_env
from .resolving import exact_minimum_resolving_set, verify_resolving
from .verify import CSV_HEADER, run_battery

TABLE_COLUMNS = ["family", "q", "d", "e2", "points", "generators", "rank", "bound",
                 "gwl_bound", "resolving_size", "greedy_size", "exact_min"]


def _emit(text, out=None):
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _instance(args):
    return Instance(args.family, args.q, args.d, budget=args.budget,
                    subset_budget=args.subset_budget, jobs=args.jobs)


def cmd_formulas(args):
    report = formula_report(args.family, args.q, args.d)
    if args.format == "json":
        text = report.to_json() + "\n"
    elif args.format == "csv":
        d = report.to_dict()
        text = ",".join(d) + "\n" + ",".join("" if v is None else v for v in d.values()) + "\n"
    else:
        text = "".join(f"{k}: {'' if v is None else v}\n" for k, v in report.to_dict().items())
    _emit(text, args.out)
    return 0


def cmd_build(args):
    inst = _instance(args)
    P = inst.P
    out = Path(args.out or f"{P.family}_q{P.q}_d{P.d}")
    out.mkdir(parents=True, exist_ok=True)
    (out / "descriptor.json").write_text(io.dump_json(P.to_json()))
    (out / "points.txt").write_text(io.format_subspaces(P, 1, inst.points))
    (out / "generators.txt").write_text(io.format_subspaces(P, P.d, inst.generators))
    (out / "dual_polar.edges").write_text(io.format_edges(P, inst.dual_graph))
    (out / "incidence.txt").write_text(io.format_incidence_dense(inst.incidence))
    (out / "incidence_pairs.txt").write_text(io.format_incidence_pairs(inst.incidence))
    report = formula_report(P.family, P.q, P.d)
    ok = (len(inst.points), len(inst.generators)) == (report.points, report.generators)
    print(f"{inst.label}: points={len(inst.points)} (expected {report.points}) "
          f"generators={len(inst.generators)} (expected {report.generators}) "
          f"edges={inst.dual_graph.num_edges} -> {out}")
    return 0 if ok else 1


def cmd_resolve(args):
    inst = _instance(args)
    sets = [inst.rowbasis]
    bound = formula_report(inst.P.family, inst.P.q, inst.P.d).rank_bound
    summary = f"{inst.label}: bound={bound} rowbasis={inst.rowbasis.size}"
    if args.minimize in ("greedy", "exact"):
        sets.append(inst.greedy)
        summary += f" greedy={inst.greedy.size}"
    if args.minimize == "exact":
        found = exact_minimum_resolving_set(inst.dual_graph, inst.greedy.size,
                                            inst.subset_budget, args.jobs)
        if found is not None:
            sets.append(found)
            summary += f" exact={found.size}"
        else:
            summary += " exact=exceeds-limit"
    verified = all(verify_resolving(inst.dual_graph, s.vertices) for s in sets)
    summary += f" verified={'true' if verified else 'false'}"
    payload = [s.to_dict(inst.P) for s in sets]
    if args.out:
        _emit(io.dump_json(payload), args.out)
    elif args.format == "json":
        sys.stdout.write(io.dump_json(payload))
    print(summary)
    return 0 if verified else 4


def cmd_verify_all(args):
    inst = _instance(args)
    graph = None
    if args.edges:
        graph = io.parse_edges(Path(args.edges).read_text(), len(inst.generators))
    rows = run_battery(inst, graph)
    text = CSV_HEADER + "\n" + "".join(r.csv() + "\n" for r in rows)
    _emit(text, args.out)
    if args.out:
        sys.stdout.write(text)
    return 0 if all(r.passed for r in rows) else 1


_GRID = re.compile(r"^([^:]+):(\d+)\.\.(\d+):(\d+)\.\.(\d+)$")


def parse_grid(text):
    """``family:qmin..qmax:dmin..dmax`` -> list of valid (family, q, d)."""
    m = _GRID.match(text.strip())
    if not m:
        raise InvalidParameterError(f"bad grid {text!r}; expected family:qmin..qmax:dmin..dmax")
    family = canonical_family(m.group(1))
    qlo, qhi, dlo, dhi = map(int, m.groups()[1:])
    out = []
    for q in range(qlo, qhi + 1):
        if not is_prime_power(q) or q > 16:
            continue
        for d in range(max(dlo, 1), dhi + 1):
            try:
                validate_selector(family, q, d)
            except InvalidParameterError:
                continue
            out.append((family, q, d))
    return out


def table_row(family, q, d, *, budget, subset_budget, jobs, exact):
    rep = formula_report(family, q, d)
    row = dict.fromkeys(TABLE_COLUMNS, "")
    row.update(family=family, q=q, d=d, e2=rep.e2, points=rep.points,
               generators=rep.generators, bound=rep.rank_bound,
               gwl_bound="" if rep.gwl_bound is None else rep.gwl_bound)
    if predicted_generators(family, q, d) > budget:
        return row
    inst = Instance(family, q, d, budget=budget, subset_budget=subset_budget, jobs=jobs)
    row.update(rank=inst.rank, resolving_size=inst.rowbasis.size,
               greedy_size=inst.greedy.size)
    if exact:
        report = inst.conjecture(exact=True)
        if report.exact is not None:
            row["exact_min"] = report.exact
    return row


def cmd_table(args):
    enum_budget, subset_budget = budgets_from_env(args.budget, args.subset_budget)
    instances = [x for g in args.grid for x in parse_grid(g)]
    buf = _io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for family, q, d in instances:
        writer.writerow(table_row(family, q, d, budget=enum_budget,
                                  subset_budget=subset_budget, jobs=args.jobs,
                                  exact=args.exact))
    _emit(buf.getvalue(), args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="dualpolar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, selector=True):
        if selector:
            p.add_argument("--family", required=True,
                           help="one of " + ", ".join(FAMILIES) + " (2Aodd/2Aeven accepted)")
            p.add_argument("--q", type=int, required=True)
            p.add_argument("--d", type=int, required=True)
        p.add_argument("--jobs", type=int, default=1, help="worker processes for subset search")
        p.add_argument("--budget", type=int, default=None, help="max generators to enumerate")
        p.add_argument("--subset-budget", type=int, default=None,
                       help="max candidate subsets in exact search")
        p.add_argument("--out", default=None)

    p = sub.add_parser("formulas", help="evaluate the closed forms")
    common(p)
    p.add_argument("--format", choices=["json", "text", "csv"], default="json")
    p.set_defaults(func=cmd_formulas)

    p = sub.add_parser("build", help="enumerate and write points, generators, graph, incidence")
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("resolve", help="row-basis resolving set with optional minimisation")
    common(p)
    p.add_argument("--minimize", choices=["none", "greedy", "exact"], default="none")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("verify-all", help="run the invariant battery, CSV output")
    common(p)
    p.add_argument("--edges", default=None, help="use this edge list as the dual polar graph")
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("table", help="batch CSV over parameter grids")
    common(p, selector=False)
    p.add_argument("--grid", action="append", required=True,
                   help="family:qmin..qmax:dmin..dmax (repeatable)")
    p.add_argument("--exact", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except PolarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
