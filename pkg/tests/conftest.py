"""Shared oracles and strategies.

The oracles here deliberately avoid the package's own solvers: they work
on networkx graphs and brute-force over edge or vertex subsets.
"""

import os
import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from kcut.graph import Graph, random_connected_graph


def pytest_collection_modifyitems(config, items):
    if os.environ.get("KCUT_NIGHTLY") == "1":
        return
    skip = pytest.mark.skip(reason="nightly job; set KCUT_NIGHTLY=1")
    for item in items:
        if "nightly" in item.keywords:
            item.add_marker(skip)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def brute_lambda(g: Graph, k: int) -> int:
    """Fewest edges whose deletion leaves >= k components, by subset size."""
    h = to_nx(g)
    edges = list(h.edges())
    for s in range(len(edges) + 1):
        for ys in combinations(edges, s):
            h2 = h.copy()
            h2.remove_edges_from(ys)
            if nx.number_connected_components(h2) >= k:
                return s
    raise AssertionError("k exceeds n")


def brute_kappa(g: Graph, k: int) -> int:
    h = to_nx(g)
    for s in range(g.n + 1):
        for xs in combinations(range(g.n), s):
            if g.n - s < k:
                return s
            h2 = h.copy()
            h2.remove_nodes_from(xs)
            if nx.number_connected_components(h2) >= k:
                return s
    raise AssertionError("unreachable")


def random_graphs(count, nmin, nmax, seed, max_m=None):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(nmin, nmax)
        hi = n * (n - 1) // 2
        if max_m is not None:
            hi = min(hi, max_m)
        yield random_connected_graph(n, rng.randint(n - 1, hi), rng)


@st.composite
def connected_graphs(draw, nmin=2, nmax=7, max_extra=None):
    """A random spanning tree plus arbitrary extra edges."""
    n = draw(st.integers(nmin, nmax))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    cap = len(pairs) if max_extra is None else max_extra
    extra = draw(st.lists(st.sampled_from(pairs), max_size=cap)) if pairs else []
    edges.update(extra)
    perm = draw(st.permutations(range(n)))
    return Graph(n, [tuple(sorted((perm[u], perm[v]))) for u, v in edges])


@st.composite
def graph_and_k(draw, nmin=2, nmax=7):
    g = draw(connected_graphs(nmin, nmax))
    k = draw(st.integers(2, g.n)) if g.n >= 2 else 2
    return g, k


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def record_acceptance(number: int, title: str, failures: list, detail: str = "") -> None:
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {number} [{status}] {title}"
    if detail:
        line += f" ({detail})"
    if failures:
        line += f"; {len(failures)} failure(s), first: {failures[0]}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
