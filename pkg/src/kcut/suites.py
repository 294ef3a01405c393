"""Exhaustive theorem sweeps behind ``kcut verify``.

Each suite walks every connected graph up to ``nmax`` (isomorph-free by
default, labeled on request) and collects violations instead of stopping
at the first one.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, Iterable, Iterator

from .bounds import evaluate_bounds
from .errors import BudgetExceeded, TheoremViolation
from .extremal import enumerate_connected_labeled, enumerate_connected_unlabeled
from .formulas import characterize_extremal
from .graph import Graph, bridges
from .io import to_graph6
from .solver import lambda_values

SUITES = ("obs", "extremal", "bounds")


def universe(nmax: int, labeled: bool = False, nmin: int = 2) -> Iterator[Graph]:
    gen = enumerate_connected_labeled if labeled else enumerate_connected_unlabeled
    for n in range(nmin, nmax + 1):
        yield from gen(n)


def _violation(g: Graph, k, rule: str, detail: str) -> dict:
    return {"graph6": to_graph6(g), "n": g.n, "m": g.m, "k": k, "rule": rule, "detail": detail}


def check_observations(g: Graph) -> list[dict]:
    """Monotonicity in k and under deleting a non-bridge edge."""
    out = []
    vals = lambda_values(g)
    for k in range(2, g.n):
        if vals[k] > vals[k + 1]:
            out.append(_violation(g, k, "monotone-in-k", f"lambda_{k}={vals[k]} > lambda_{k + 1}={vals[k + 1]}"))
    # deleting non-bridges one at a time reaches every connected spanning subgraph
    cut = bridges(g)
    for e in g.edges:
        if e in cut:
            continue
        sub = lambda_values(g.remove_edges([e]))
        for k in range(2, g.n + 1):
            if sub[k] > vals[k]:
                out.append(_violation(g, k, "spanning-subgraph", f"deleting {e} raises lambda_{k} {vals[k]} -> {sub[k]}"))
    return out


def check_extremal(g: Graph) -> list[dict]:
    out = []
    vals = lambda_values(g)
    for k, lam in vals.items():
        try:
            characterize_extremal(g, k, lam)
        except TheoremViolation as exc:
            out.append(_violation(g, k, "extremal-characterization", str(exc)))
    return out


def check_bounds(g: Graph, **budgets) -> tuple[list[dict], Counter]:
    out = []
    skipped: Counter = Counter()
    for k in range(2, g.n + 1):
        try:
            report = evaluate_bounds(g, k, strict=False, **budgets)
        except BudgetExceeded:
            skipped["report"] += 1
            continue
        for name in report.skipped:
            skipped[name] += 1
        for v in report.violations:
            out.append(_violation(g, k, v.split(":")[0], v))
    return out, skipped


def run_suite(
    suite: str,
    nmax: int,
    labeled: bool = False,
    progress: Callable[[Graph], None] | None = None,
    **budgets,
) -> dict:
    """Run one suite (or ``"all"``) and summarise violations by rule."""
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {SUITES + ('all',)}")
    violations: list[dict] = []
    skipped: Counter = Counter()
    graphs = 0
    for g in universe(nmax, labeled):
        graphs += 1
        if progress:
            progress(g)
        if "obs" in names:
            violations += check_observations(g)
        if "extremal" in names:
            violations += check_extremal(g)
        if "bounds" in names:
            found, skip = check_bounds(g, **budgets)
            violations += found
            skipped += skip
    by_rule = Counter(v["rule"] for v in violations)
    return {
        "suite": suite,
        "nmax": nmax,
        "labeled": labeled,
        "graphs": graphs,
        "violation_count": len(violations),
        "violations_by_rule": dict(sorted(by_rule.items())),
        "skipped": dict(sorted(skipped.items())),
        "violations": violations,
    }
