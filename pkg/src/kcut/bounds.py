"""All lower and upper bounds on lambda_k for one (G, k), with tightness."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import BudgetExceeded, DisconnectedGraph, TheoremViolation
from .formulas import clique_upper_bound
from .genconn import (
    DEFAULT_MAX_EDGES,
    DEFAULT_MAX_SUBSETS,
    EDGE,
    INTERNAL,
    kappa_k,
    min_packing_witness,
)
from .graph import Graph, line_graph, max_degree
from .solver import lambda_k_bb

LOWER = ("trivial", "steiner_edge", "steiner_vertex", "line_graph")
UPPER = ("clique", "degree_kappa", "greedy_degree")
ALL_BOUNDS = LOWER + UPPER


@dataclass
class BoundsReport:
    n: int
    k: int
    max_degree: int
    lambda_k: Optional[int]
    lower_bounds: dict[str, int] = field(default_factory=dict)
    upper_bounds: dict[str, int] = field(default_factory=dict)
    tight: set[str] = field(default_factory=set)
    skipped: dict[str, str] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)
    # inputs behind the composite bounds, for third-party re-checking
    ingredients: dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "max_degree": self.max_degree,
            "lambda_k": self.lambda_k,
            "lower_bounds": dict(self.lower_bounds),
            "upper_bounds": dict(self.upper_bounds),
            "tight": sorted(self.tight),
            "skipped": dict(self.skipped),
            "violations": list(self.violations),
            "ingredients": self.ingredients,
        }


def regular_bound(r: int, k: int) -> int:
    """(r - 1)(k - 1) + 1, the degree bound specialised to r-regular graphs."""
    if r < 2:
        raise ValueError("r must be at least 2")
    return (r - 1) * (k - 1) + 1


def evaluate_bounds(
    g: Graph,
    k: int,
    which: Optional[Iterable[str]] = None,
    *,
    max_edges_steiner: int = DEFAULT_MAX_EDGES,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
    max_nodes: Optional[int] = None,
    strict: bool = True,
) -> BoundsReport:
    """Compute the requested bounds (default: all) and check
    ``lower <= lambda_k <= upper`` for each.

    A bound whose computation exceeds its budget lands in ``skipped``.
    With ``strict`` a failed inequality raises :class:`TheoremViolation`;
    otherwise it is only recorded in ``violations``.
    """
    n = g.n
    if not 2 <= k <= n:
        raise ValueError(f"k must satisfy 2 <= k <= n={n}, got {k}")
    if not g.is_connected():
        raise DisconnectedGraph("bounds report expects a connected graph")
    wanted = set(ALL_BOUNDS if which is None else which)
    unknown = wanted - set(ALL_BOUNDS)
    if unknown:
        raise ValueError(f"unknown bounds: {sorted(unknown)}")

    delta = max_degree(g)
    try:
        lam, cert = lambda_k_bb(g, k, max_nodes=max_nodes)
    except BudgetExceeded as exc:
        lam, cert = None, None
        skipped_lambda = str(exc)
    report = BoundsReport(n=n, k=k, max_degree=delta, lambda_k=lam)
    if cert is not None:
        report.ingredients["certificate"] = cert.to_dict()
    else:
        report.ingredients["lambda_k_skipped"] = skipped_lambda

    def attempt(name, fn):
        if name not in wanted:
            return
        try:
            value = fn()
        except BudgetExceeded as exc:
            report.skipped[name] = str(exc)
            return
        (report.lower_bounds if name in LOWER else report.upper_bounds)[name] = value

    def steiner(mode, key):
        value, packing = min_packing_witness(g, k, mode, max_edges=max_edges_steiner)
        report.ingredients[key] = value
        if packing is not None:
            report.ingredients[key + "_packing"] = packing.to_dict()
        return (k - 1) * value

    def line():
        lg = line_graph(g).graph
        # the "fewer than k vertices" branch needs nothing removed
        if lg.n < k:
            report.ingredients["kappa_k_line_graph"] = 0
            return 0
        value, vcert = kappa_k(lg, k, max_subsets=max_subsets)
        report.ingredients["kappa_k_line_graph"] = value
        report.ingredients["kappa_k_line_graph_cut"] = vcert.to_dict()
        return value

    def degree_kappa():
        value, vcert = kappa_k(g, k - 1, max_subsets=max_subsets)
        report.ingredients["kappa_k_minus_1"] = value
        report.ingredients["kappa_k_minus_1_cut"] = vcert.to_dict()
        return delta * value

    attempt("trivial", lambda: k - 1)
    attempt("steiner_edge", lambda: steiner(EDGE, "lambda_prime_k"))
    attempt("steiner_vertex", lambda: steiner(INTERNAL, "kappa_prime_k"))
    attempt("line_graph", line)
    attempt("clique", lambda: clique_upper_bound(n, k))
    if k == 2:
        if "degree_kappa" in wanted:
            report.skipped["degree_kappa"] = "undefined for k=2 (needs kappa_1)"
    else:
        attempt("degree_kappa", degree_kappa)
    attempt("greedy_degree", lambda: (delta - 1) * (k - 1) + 1)

    if lam is not None:
        for name, value in report.lower_bounds.items():
            if value > lam:
                report.violations.append(f"{name}: {value} <= lambda_{k} = {lam} fails")
            elif value == lam:
                report.tight.add(name)
        for name, value in report.upper_bounds.items():
            if value < lam:
                report.violations.append(f"{name}: lambda_{k} = {lam} <= {value} fails")
            elif value == lam:
                report.tight.add(name)
    if strict and report.violations:
        raise TheoremViolation(
            f"bound chain violated for n={n}, m={g.m}, k={k}: " + "; ".join(report.violations),
            details=list(report.violations),
        )
    return report
