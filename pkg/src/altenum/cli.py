"""Command-line front end: sequence tables, oracle verification, series identities.

    altenum table dis --q 2 --n-max 6
    altenum verify --scope nds,dis --q 2 --n-max 4 --jobs 4
    altenum series --q 2 --order 8

Reports are JSON (default) or CSV; counts are always decimal strings.
Exit status: 0 success / all match, 1 mismatch, 2 usage or budget error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Callable

from altenum import formulas, series
from altenum.oracle import counting
from altenum.oracle.enumerate import DEFAULT_BUDGET, BudgetExceeded, enumerate_subspaces
from altenum.qcalc import IntegrityError, compositions, decomposition_count, galois_number

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Row:
    formula: str
    n: int
    value: int
    c: int | None = None
    q: int | None = None
    oracle: int | None = None
    seconds: float | None = None
    compared: bool = False

    @property
    def match(self) -> bool | None:
        if not self.compared:
            return None
        return self.oracle is not None and self.oracle == self.value

    def to_dict(self, timings: bool = False) -> dict:
        d = {"formula": self.formula, "n": self.n}
        if self.c is not None:
            d["c"] = self.c
        if self.q is not None:
            d["q"] = self.q
        d["value"] = str(self.value)
        if self.compared:
            d["oracle"] = None if self.oracle is None else str(self.oracle)
            d["match"] = self.match
        if timings and self.seconds is not None:
            d["seconds"] = round(self.seconds, 6)
        return d


@dataclass
class RunReport:
    command: str
    params: dict
    rows: list[Row] = field(default_factory=list)

    def sorted_rows(self) -> list[Row]:
        return sorted(self.rows, key=lambda r: (r.formula, r.n, -1 if r.c is None else r.c))

    @property
    def all_match(self) -> bool:
        return all(r.match is not False for r in self.rows)

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "command": self.command,
            "params": dict(sorted(self.params.items())),
            "rows": [r.to_dict(timings) for r in self.sorted_rows()],
        }

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["formula", "n", "c", "q", "value", "oracle", "match"])
        for r in self.sorted_rows():
            d = r.to_dict()
            match = d.get("match")
            w.writerow([
                r.formula, r.n,
                "" if r.c is None else r.c,
                "" if r.q is None else r.q,
                d["value"],
                d.get("oracle") or "",
                "" if match is None else str(match).lower(),
            ])
        return buf.getvalue()


def _timed(fn: Callable, *args):
    t = time.perf_counter()
    v = fn(*args)
    return v, time.perf_counter() - t


# -- formula tables ----------------------------------------------------------------


@dataclass(frozen=True)
class FormulaSpec:
    fn: Callable  # (n, q, c) -> int
    n_min: int = 0
    needs_q: bool = False
    needs_c: bool = False


def _rooted(n, q, c):
    return formulas.rg(n) if q in (None, 1) else formulas.rs(n, q)


FORMULAS: dict[str, FormulaSpec] = {
    "graphs": FormulaSpec(lambda n, q, c: formulas.graph_count(n)),
    "spaces": FormulaSpec(lambda n, q, c: formulas.space_count(n, q), needs_q=True),
    "connected": FormulaSpec(lambda n, q, c: formulas.connected_graphs(n), n_min=1),
    "no-isolated": FormulaSpec(lambda n, q, c: formulas.no_isolated_graphs(n)),
    "nds": FormulaSpec(lambda n, q, c: formulas.nds(n, q), needs_q=True),
    "dis": FormulaSpec(lambda n, q, c: formulas.dis(n, q), n_min=2, needs_q=True),
    "dis-rooted": FormulaSpec(lambda n, q, c: formulas.dis_rooted(n, q), n_min=2, needs_q=True),
    "read": FormulaSpec(lambda n, q, c: formulas.read_colored(n, c), needs_c=True),
    "read-q": FormulaSpec(lambda n, q, c: formulas.read_q_isotropic(n, c, q), needs_q=True, needs_c=True),
    "ortho-q": FormulaSpec(lambda n, q, c: formulas.ortho_q(n, c, q), needs_q=True, needs_c=True),
    "rooted": FormulaSpec(_rooted, n_min=1),
}


def _require(args, spec: FormulaSpec, name: str):
    if args.n_max is None:
        raise UsageError(f"{name}: --n-max is required")
    if spec.needs_q and args.q is None:
        raise UsageError(f"{name}: --q is required")
    if spec.needs_c and args.c is None:
        raise UsageError(f"{name}: --c is required")
    if args.q is not None and args.q < 1:
        raise UsageError("--q must be >= 1")
    if args.c is not None and args.c < 1:
        raise UsageError("--c must be >= 1")
    if args.n_max < 0:
        raise UsageError("--n-max must be >= 0")


def cmd_table(args) -> tuple[RunReport, int]:
    spec = FORMULAS.get(args.formula)
    if spec is None:
        raise UsageError(f"unknown formula {args.formula!r}; choose from {', '.join(FORMULAS)}")
    _require(args, spec, args.formula)
    params = {"formula": args.formula, "n_max": args.n_max}
    q = args.q if (spec.needs_q or args.formula == "rooted") else None
    c = args.c if spec.needs_c else None
    if q is not None:
        params["q"] = q
    if c is not None:
        params["c"] = c
    report = RunReport("table", params)
    for n in range(spec.n_min, args.n_max + 1):
        v, dt = _timed(spec.fn, n, q, c)
        report.rows.append(Row(args.formula, n, v, c=c, q=q, seconds=dt))
    return report, EXIT_OK


# -- verification ------------------------------------------------------------------


def _oracle_nds(n, q, c, jobs, budget):
    return counting.count_no_isolated(n, jobs) if q == 1 else counting.oracle_nds(n, q, jobs, budget)


def _oracle_dis(n, q, c, jobs, budget):
    if q == 1:
        return counting.count_connected_no_isolated(n, jobs)
    return counting.oracle_dis(n, q, jobs, budget)


def _oracle_read_q(n, q, c, jobs, budget):
    if q == 1:
        return counting.count_colored_pairs(n, c, jobs)
    return counting.oracle_read_q(n, c, q, jobs, budget)


def _oracle_ortho(n, q, c, jobs, budget):
    if q == 1:
        return counting.count_orthogonal_graph_pairs(n, c, jobs)
    return counting.oracle_ortho(n, c, q, jobs, budget)


def _decomp_total(n, q, c):
    return sum(decomposition_count(n, comp, q) for comp in compositions(n, c))


def _oracle_decomp(n, q, c, jobs, budget):
    return sum(counting.count_decompositions(n, comp.parts, q, jobs, budget) for comp in compositions(n, c))


def _oracle_subspaces(n, q, c, jobs, budget):
    return sum(1 for _ in enumerate_subspaces(n, q, budget))


@dataclass(frozen=True)
class Scope:
    formula: Callable  # (n, q, c) -> int
    oracle: Callable  # (n, q, c, jobs, budget) -> int
    n_min: int = 0
    uses_q: bool = True
    uses_c: bool = False
    default_c: tuple[int, ...] = ()


SCOPES: dict[str, Scope] = {
    "subspaces": Scope(lambda n, q, c: galois_number(n, q), _oracle_subspaces),
    "decompositions": Scope(_decomp_total, _oracle_decomp, n_min=1, uses_c=True, default_c=(1, 2, 3)),
    "nds": Scope(lambda n, q, c: formulas.nds(n, q), _oracle_nds),
    "dis": Scope(lambda n, q, c: formulas.dis(n, q), _oracle_dis, n_min=2),
    "dis-rooted": Scope(lambda n, q, c: formulas.dis_rooted(n, q), _oracle_dis, n_min=2),
    "read-q": Scope(lambda n, q, c: formulas.read_q_isotropic(n, c, q), _oracle_read_q, n_min=1,
                    uses_c=True, default_c=(2, 3)),
    "ortho-q": Scope(lambda n, q, c: formulas.ortho_q(n, c, q), _oracle_ortho, n_min=1,
                     uses_c=True, default_c=(2, 3)),
    "connected": Scope(lambda n, q, c: formulas.connected_graphs(n),
                       lambda n, q, c, j, b: counting.count_connected(n, j), n_min=1, uses_q=False),
    "no-isolated": Scope(lambda n, q, c: formulas.no_isolated_graphs(n),
                         lambda n, q, c, j, b: counting.count_no_isolated(n, j), uses_q=False),
    "read": Scope(lambda n, q, c: formulas.read_colored(n, c),
                  lambda n, q, c, j, b: counting.count_colored_pairs(n, c, j), n_min=1, uses_q=False,
                  uses_c=True, default_c=(2, 3)),
}


def cmd_verify(args) -> tuple[RunReport, int]:
    if not args.scope:
        raise UsageError("--scope is required")
    scope_ids = [s for s in args.scope.split(",") if s]
    for s in scope_ids:
        if s not in SCOPES:
            raise UsageError(f"unknown scope {s!r}; choose from {', '.join(SCOPES)}")
    if args.n_max is None:
        raise UsageError("--n-max is required")
    if any(SCOPES[s].uses_q for s in scope_ids) and args.q is None:
        raise UsageError("--q is required for these scopes")
    if args.jobs is not None and args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    params = {"scope": ",".join(scope_ids), "n_max": args.n_max, "budget": args.budget}
    if args.q is not None:
        params["q"] = args.q
    if args.c is not None:
        params["c"] = args.c
    report = RunReport("verify", params)
    for sid in scope_ids:
        sc = SCOPES[sid]
        q = args.q if sc.uses_q else None
        cs = ((args.c,) if args.c is not None else sc.default_c) if sc.uses_c else (None,)
        for c in cs:
            for n in range(sc.n_min, args.n_max + 1):
                t = time.perf_counter()
                value = sc.formula(n, q, c)
                oracle = sc.oracle(n, q, c, args.jobs, args.budget)
                report.rows.append(Row(sid, n, value, c=c, q=q, oracle=oracle, compared=True,
                                       seconds=time.perf_counter() - t))
    return report, EXIT_OK if report.all_match else EXIT_MISMATCH


def cmd_series(args) -> tuple[RunReport, int]:
    if args.q is None or args.order is None:
        raise UsageError("series needs --q and --order")
    if args.q < 1 or args.order < 1:
        raise UsageError("--q and --order must be >= 1")
    t = time.perf_counter()
    rep = series.verify_riddell(args.q, args.order)
    dt = time.perf_counter() - t
    report = RunReport("series", {"q": args.q, "order": args.order})
    name = f"riddell-{rep.lhs_name}"
    for r in rep.rows:
        report.rows.append(Row(name, r.n, r.lhs, q=args.q, oracle=r.rhs, compared=True,
                               seconds=dt / len(rep.rows)))
    return report, EXIT_OK if report.all_match else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int)
    common.add_argument("--c", type=int)
    common.add_argument("--n-max", type=int)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--timings", action="store_true", help="include per-row wall time (JSON only)")

    parser = argparse.ArgumentParser(prog="altenum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", parents=[common], help="compute a sequence table")
    t.add_argument("formula", help=", ".join(FORMULAS))
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", parents=[common], help="compare formulas with brute-force oracles")
    v.add_argument("--scope", help="comma-separated: " + ", ".join(SCOPES))
    v.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max objects per enumeration")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("series", parents=[common], help="check the Riddell identity coefficient-wise")
    s.add_argument("--order", type=int)
    s.set_defaults(func=cmd_series)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.func(args)
    except (UsageError, BudgetExceeded) as exc:
        print(f"altenum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IntegrityError as exc:
        print(f"altenum: integrity failure: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    text = report.to_csv() if args.format == "csv" else report.to_json(args.timings)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
