"""Command-line front end.

Exit codes: 0 on success, 1 when a verified inequality or cross-check fails
(the offending values are printed), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import census as cen
from . import lps
from . import number_theory as nt
from .graph_core import EdgeListError, Graph6Error, GraphSizeError, read_graph
from .invariants import INFINITE, bounds_report, compute_invariants

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
R3_TABLE_LIMIT = 10**7


class UsageError(Exception):
    pass


def fmt(value) -> str:
    if value is None:
        return "n/a"
    if value is INFINITE:
        return "INF"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, Fraction):
        return str(value) if value.denominator == 1 else f"{value} ({float(value):.12g})"
    return str(value)


def _jsonable(value):
    if value is INFINITE:
        return "INF"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return float(f"{value:.12g}")
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def emit_json(obj) -> None:
    print(json.dumps(_jsonable(obj), indent=2, sort_keys=True, ensure_ascii=False))


def emit_pairs(pairs) -> None:
    width = max(len(k) for k, _ in pairs)
    for k, v in pairs:
        print(f"{k:<{width}}  {fmt(v)}")


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return max(1, args.threads)
    return cen.threads_from_env()


def _load(args):
    path = Path(args.file)
    if not path.is_file():
        raise UsageError(f"cannot read {path}")
    return read_graph(path, args.format)


# --------------------------------------------------------------------------
# graph analysis


def _bounds_failures(rep) -> list[str]:
    checks = {
        "thm1": rep.thm1_holds,
        "corollary": rep.corollary_holds,
        "eq10": rep.eq10_lhs_ok,
        "eq11": rep.eq11_ok,
    }
    return [name for name, ok in checks.items() if ok is False]


def _analysis(g, with_invariants: bool):
    inv = compute_invariants(g)
    rep = None
    if g.is_connected() and inv.girth is not INFINITE:
        rep = bounds_report(g, inv)
    out = {}
    if with_invariants:
        out["invariants"] = inv.as_dict()
    out["bounds"] = rep.as_dict() if rep else None
    failures = _bounds_failures(rep) if rep else []
    return out, failures


def _print_analysis(out: dict) -> None:
    pairs = []
    for k, v in out.get("invariants", {}).items():
        pairs.append((k, INFINITE if v == "INF" else v))
    if out["bounds"] is None:
        pairs.append(("bounds", "n/a (needs a connected graph with a cycle)"))
    else:
        shown = {k for k, _ in pairs}
        pairs += [(k, v) for k, v in out["bounds"].items() if k not in shown]
    emit_pairs(pairs)


def cmd_analyze(args, with_invariants: bool = True) -> int:
    g = _load(args)
    out, failures = _analysis(g, with_invariants)
    if args.json:
        emit_json(out)
    else:
        _print_analysis(out)
    if failures:
        b = out["bounds"]
        print(
            f"VIOLATION {','.join(failures)}: g*kiss={b['thm1_lhs']} "
            f"n*d*(d-1)^floor(g/2)={b['thm1_rhs_numerator']}",
            file=sys.stderr,
        )
        return EXIT_FAIL
    return EXIT_OK


def cmd_bounds(args) -> int:
    return cmd_analyze(args, with_invariants=False)


# --------------------------------------------------------------------------
# LPS


def cmd_lps_build(args) -> int:
    x = lps.build_lps(args.p, args.q, force=args.force)
    meta = x.metadata()
    if args.out:
        meta["files"] = [str(p) for p in lps.export_lps(x, args.out, graph6=args.graph6)]
    if args.json:
        emit_json(meta)
    else:
        emit_pairs([(k, v) for k, v in meta.items() if k not in ("generators", "files")])
        for path in meta.get("files", []):
            print(f"wrote {path}")
    return EXIT_OK


def cmd_lps_verify(args) -> int:
    rep = lps.verify_lps(args.p, args.q, samples=args.samples, seed=args.seed, force=args.force)
    if args.json:
        emit_json(rep.as_dict())
    else:
        emit_pairs(
            [
                ("p", rep.p),
                ("q", rep.q),
                ("n", rep.n),
                ("degree", rep.degree),
                ("girth (BFS)", rep.girth),
                ("girth roots", rep.girth_roots),
                ("girth (formula)", rep.girth_formula),
                ("formula branch", rep.girth_branch),
                ("based count (identity)", rep.based_count),
                ("based count (arithmetic)", rep.eq7_count),
                ("r3 lower bound", rep.loops_id_bound),
                ("sampled vertices", " ".join(map(str, rep.sample_vertices))),
                ("sampled counts", " ".join(map(str, rep.sample_counts))),
                ("kiss", rep.kiss),
                ("log kiss / log n", rep.exponent),
            ]
        )
        for name, ok in rep.checks.items():
            print(f"check {name}: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if rep.ok else EXIT_FAIL


# --------------------------------------------------------------------------
# number theory


def cmd_primes(args) -> int:
    if args.k_min < 1 or args.k_max < args.k_min:
        raise UsageError("need 1 <= k_min <= k_max")
    rows = []
    for k in range(args.k_min, args.k_max + 1):
        try:
            res = nt.find_q(args.p, k)
        except nt.NotFoundError:
            rows.append({"p": args.p, "k": k, "q": None})
            continue
        row = {"p": args.p, "k": k, "q": res.q, **res.checks.__dict__}
        if k % 2 == 0:
            first, second = nt.check_mod16_conditions(args.p, res.q, k)
            row["mod16_first"], row["mod16_second"] = first, second
        rows.append(row)
    if args.json:
        emit_json(rows)
        return EXIT_OK
    cols = [
        "k",
        "q",
        "q_is_1_mod_4",
        "legendre_is_minus_1",
        "q_squared_not_p_mod_16",
        "in_interval",
        "mod16_first",
        "mod16_second",
    ]
    print(f"p={args.p}")
    print("\t".join(cols))
    for row in rows:
        if row["q"] is None:
            print(f"{row['k']}\tnot found")
        else:
            print("\t".join(fmt(row.get(c)) for c in cols))
    return EXIT_OK


def cmd_r3(args) -> int:
    if args.table:
        hi = args.n
        if hi < 0 or hi > R3_TABLE_LIMIT:
            raise UsageError(f"table limit must lie in 0..{R3_TABLE_LIMIT}")
        table = nt.r3_table(hi)
        print("n,r3")
        for k, v in enumerate(table):
            print(f"{k},{int(v)}")
        return EXIT_OK
    value = nt.r3(args.n)
    if args.json:
        emit_json({"n": args.n, "r3": value, "sum_of_three_squares": nt.is_sum_of_three_squares(args.n)})
    else:
        print(value)
    return EXIT_OK


def cmd_girth_formula(args) -> int:
    g, branch = nt.lps_girth_branch(args.p, args.q)
    out = {"p": args.p, "q": args.q, "girth": g, "branch": branch, "r3_lower_bound": nt.loops_id_lower_bound(args.p, args.q)}
    if args.json:
        emit_json(out)
    else:
        emit_pairs(list(out.items()))
    return EXIT_OK


# --------------------------------------------------------------------------
# census


def cmd_census(args) -> int:
    cen._check_n(args.n_max)
    if args.n_max > cen.DEFAULT_MAX_N and not args.allow_18:
        raise UsageError(f"n_max above {cen.DEFAULT_MAX_N} needs --allow-18")
    workers = _threads(args)
    if args.csv:
        path = cen.census_csv(args.n_max, args.csv, workers)
        print(f"wrote {sum(1 for _ in path.open()) - 1} rows to {path}")
    else:
        sys.stdout.write(cen.census_csv_text(args.n_max, workers))
    return EXIT_OK


def cmd_table1(args) -> int:
    workers = _threads(args)
    rows = []
    for n in args.n:
        cen._check_n(n)
        if n > cen.DEFAULT_MAX_N and not args.allow_18:
            raise UsageError(f"n above {cen.DEFAULT_MAX_N} needs --allow-18")
        rows.append(cen.table1(n, cen.census(n, workers)))
    if args.json:
        emit_json([r.__dict__ for r in rows])
        return EXIT_OK
    print("\t".join(["n", "kiss", "girth", "aut", "diameter", "relations", "moore"]))
    for r in rows:
        print("\t".join(r.cells()))
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="girthkiss", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file")
        p.add_argument("--format", choices=["graph6", "edgelist"], default=None)
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    graph_cmd("analyze", cmd_analyze, "invariants and bounds of one graph")
    graph_cmd("bounds", cmd_bounds, "kissing bounds of one graph")

    for name, func in (("lps-build", cmd_lps_build), ("lps-verify", cmd_lps_verify)):
        p = sub.add_parser(name)
        p.add_argument("p", type=int)
        p.add_argument("q", type=int)
        p.add_argument("--force", action="store_true", help=f"allow q > {lps.DEFAULT_MAX_Q}")
        p.add_argument("--json", action="store_true")
        p.add_argument("--threads", type=int, default=None)
        p.set_defaults(func=func)
        if name == "lps-build":
            p.add_argument("--out", help="directory for edge list and metadata")
            p.add_argument("--graph6", action="store_true")
        else:
            p.add_argument("--samples", type=int, default=10)
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("primes", help="prime search table")
    p.add_argument("p", type=int)
    p.add_argument("k_min", type=int)
    p.add_argument("k_max", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("r3", help="three-square representation counts")
    p.add_argument("n", type=int)
    p.add_argument("--table", action="store_true", help="print r3(0..n) as CSV")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_r3)

    p = sub.add_parser("girth-formula", help="arithmetic girth of X^{p,q}")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_girth_formula)

    p = sub.add_parser("census", help="CSV of all connected cubic graphs up to n_max")
    p.add_argument("n_max", type=int)
    p.add_argument("--csv", help="output path (default: stdout)")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--allow-18", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("table1", help="record holders among cubic graphs")
    p.add_argument("n", type=int, nargs="+")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--allow-18", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "threads", None):
        os.environ["GIRTHKISS_THREADS"] = str(args.threads)
    try:
        return args.func(args)
    except (UsageError, ValueError, OverflowError, OSError, Graph6Error, EdgeListError, GraphSizeError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, lps.LpsConstructionError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
