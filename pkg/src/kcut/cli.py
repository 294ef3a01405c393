"""Command-line front end.

Every command prints one JSON run report on stdout.  Exit codes:
0 success, 1 violation found, 2 parse error, 3 budget exceeded,
4 mismatch between independent methods.
"""

from __future__ import annotations

import argparse
import json
import os
import signal
import sys
import time
from typing import Optional, Sequence

from . import __version__
from .bounds import ALL_BOUNDS, evaluate_bounds
from .errors import BudgetExceeded, DisconnectedGraph, GraphTooLarge, MethodMismatch, ParseError
from .extremal import f_table, verify_f_bounds
from .genconn import DEFAULT_MAX_EDGES, DEFAULT_MAX_SUBSETS
from .graph import GraphFamily, broom, complete_bipartite, make_family, petersen
from .greedy import greedy_k_split
from .io import parse_edge_list, parse_graph6, to_graph6
from .solver import DEFAULT_MAX_PARTITIONS, lambda_k_bb, lambda_k_enumerate
from .suites import run_suite

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_BUDGET, EXIT_MISMATCH = 0, 1, 2, 3, 4
DEFAULT_TIMEOUT = 300


def parse_family(spec: str):
    """``name:n[:seed]``, plus ``petersen``, ``broom:n:k`` and ``bipartite:a:b``."""
    parts = spec.split(":")
    name, args = parts[0], parts[1:]
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise ParseError(f"bad family spec {spec!r}") from None
    if name == "petersen" and not nums:
        return petersen()
    if name == "broom" and len(nums) == 2:
        return broom(*nums)
    if name == "bipartite" and len(nums) == 2:
        return complete_bipartite(*nums)
    if not nums or len(nums) > 2 or (len(nums) == 2 and name != "tree"):
        raise ParseError(f"bad family spec {spec!r}; expected name:n (tree:n[:seed])")
    try:
        fam = GraphFamily(name, nums[0], seed=nums[1] if len(nums) == 2 else 0)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return make_family(fam)


def load_graph(args):
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.edges is not None:
        try:
            with open(args.edges, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {args.edges}: {exc}") from None
        return parse_edge_list(text)
    return parse_family(args.family)


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("KCUT_THREADS")
    return int(env) if env and env.isdigit() and int(env) > 0 else 1


def cmd_lambda(args, g):
    out = {"k": args.k, "method": args.method}
    results = {}
    if args.method in ("enumerate", "both"):
        v, cert = lambda_k_enumerate(g, args.k, max_partitions=args.max_partitions)
        results["enumerate"] = {"value": v, "certificate": cert.to_dict()}
    if args.method in ("bb", "both"):
        v, cert = lambda_k_bb(g, args.k)
        results["bb"] = {"value": v, "certificate": cert.to_dict()}
    values = {r["value"] for r in results.values()}
    if len(values) != 1:
        raise MethodMismatch(f"methods disagree: {({k: r['value'] for k, r in results.items()})}")
    out["value"] = values.pop()
    out["methods"] = results
    return out, EXIT_OK


def cmd_bounds(args, g):
    which = args.bounds.split(",") if args.bounds else None
    report = evaluate_bounds(
        g,
        args.k,
        which,
        max_edges_steiner=args.max_edges_steiner,
        max_subsets=args.max_subsets,
        strict=False,
    )
    return report.to_dict(), EXIT_VIOLATION if report.violations else EXIT_OK


def cmd_greedy(args, g):
    trace = greedy_k_split(g, args.k)
    out = trace.to_dict()
    out["k"] = args.k
    ok = trace.final_components >= args.k and trace.total_removed <= trace.bound
    return out, EXIT_OK if ok else EXIT_VIOLATION


def cmd_ftable(args):
    table = f_table(
        args.n,
        args.k,
        args.graphs,
        max_partitions=args.max_partitions,
        workers=_threads(args),
    )
    findings = verify_f_bounds(table, strict=False)
    out = table.to_dict()
    out["findings"] = [f.to_dict() for f in findings]
    if args.write:
        with open(args.write + ".csv", "w", encoding="utf-8") as fh:
            fh.write(table.to_csv())
        with open(args.write + ".json", "w", encoding="utf-8") as fh:
            json.dump(out, fh, indent=2)
    bad = any(f.kind == "violation" for f in findings)
    return out, table, EXIT_VIOLATION if bad else EXIT_OK


def cmd_verify(args):
    res = run_suite(
        args.suite,
        args.nmax,
        labeled=args.labeled,
        max_edges_steiner=args.max_edges_steiner,
        max_subsets=args.max_subsets,
    )
    return res, EXIT_VIOLATION if res["violation_count"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kcut", description="Exact k-edge-connectivity toolkit.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--graph6", help="graph6 string")
        g.add_argument("--edges", help="edge-list file ('n m' then 'u v' lines)")
        g.add_argument("--family", help="e.g. cycle:6, wheel:7, tree:9:SEED, broom:7:4, petersen")
        sp.add_argument("--k", type=int, required=True)

    def common(sp):
        sp.add_argument("--timeout-secs", type=int, default=DEFAULT_TIMEOUT)
        sp.add_argument("--max-partitions", type=int, default=DEFAULT_MAX_PARTITIONS)
        sp.add_argument("--max-edges-steiner", type=int, default=DEFAULT_MAX_EDGES)
        sp.add_argument("--max-subsets", type=int, default=DEFAULT_MAX_SUBSETS)
        sp.add_argument("--threads", type=int, default=None, help="worker processes (env KCUT_THREADS)")
        sp.add_argument("--no-timing", action="store_true", help="omit wall-clock timing from the report")

    sp = sub.add_parser("lambda", help="exact lambda_k with certificate")
    graph_input(sp)
    sp.add_argument("--method", choices=("enumerate", "bb", "both"), default="bb")
    common(sp)

    sp = sub.add_parser("bounds", help="all bounds on lambda_k with tightness flags")
    graph_input(sp)
    sp.add_argument("--bounds", help="comma-separated subset of " + ",".join(ALL_BOUNDS))
    common(sp)

    sp = sub.add_parser("greedy", help="greedy vertex-isolation trace")
    graph_input(sp)
    common(sp)

    sp = sub.add_parser("ftable", help="extremal table f(n,k,t)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--graphs", help="graph6 file of the universe (default: all labeled graphs)")
    sp.add_argument("--csv", action="store_true", help="print the table as CSV instead of JSON")
    sp.add_argument("--write", metavar="PREFIX", help="also write PREFIX.csv and PREFIX.json")
    common(sp)

    sp = sub.add_parser("verify", help="exhaustive theorem sweeps")
    sp.add_argument("--suite", choices=("all", "obs", "extremal", "bounds"), default="all")
    sp.add_argument("--nmax", type=int, required=True)
    sp.add_argument("--labeled", action="store_true", help="sweep labeled graphs instead of isomorphism classes")
    common(sp)
    return p


def _on_alarm(signum, frame):
    raise BudgetExceeded("wall-clock timeout reached")


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    report = {"command": ["kcut"] + argv, "input_graph6": None}
    start = time.perf_counter()
    code = EXIT_OK
    csv_text = None
    use_alarm = args.timeout_secs and args.timeout_secs > 0 and hasattr(signal, "SIGALRM")
    if use_alarm:
        signal.signal(signal.SIGALRM, _on_alarm)
        signal.alarm(args.timeout_secs)
    try:
        if args.command in ("lambda", "bounds", "greedy"):
            g = load_graph(args)
            report["input_graph6"] = to_graph6(g)
            handler = {"lambda": cmd_lambda, "bounds": cmd_bounds, "greedy": cmd_greedy}[args.command]
            results, code = handler(args, g)
        elif args.command == "ftable":
            results, table, code = cmd_ftable(args)
            if args.csv:
                csv_text = table.to_csv()
        else:
            results, code = cmd_verify(args)
        report["results"] = results
    except (ParseError, GraphTooLarge) as exc:
        report["error"], code = str(exc), EXIT_PARSE
    except BudgetExceeded as exc:
        report["error"], code = str(exc), EXIT_BUDGET
    except MethodMismatch as exc:
        report["error"], code = str(exc), EXIT_MISMATCH
    except (ValueError, DisconnectedGraph) as exc:
        report["error"], code = str(exc), EXIT_PARSE
    finally:
        if use_alarm:
            signal.alarm(0)
    report["budget"] = {
        "timeout_secs": args.timeout_secs,
        "max_partitions": args.max_partitions,
        "max_edges_steiner": args.max_edges_steiner,
        "max_subsets": args.max_subsets,
    }
    report["timing_secs"] = None if args.no_timing else round(time.perf_counter() - start, 6)
    report["exit_code"] = code
    if csv_text is not None and code in (EXIT_OK, EXIT_VIOLATION):
        sys.stdout.write(csv_text)
    else:
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
    if "error" in report:
        print(f"kcut: {report['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
