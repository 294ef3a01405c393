"""f(n, k, t): fewest edges in a connected n-vertex graph with lambda_k = t.

The table is built by exhausting a universe of connected graphs of order n:
either every labeled graph (the baseline, n <= 7) or an isomorph-free
graph6 stream.  Both give the same f, which the test-suite checks.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import comb
from typing import Iterable, Iterator, Optional, Union

from .errors import TheoremViolation
from .formulas import clique_upper_bound
from .graph import Graph, count_components, pairs_in_order
from .io import read_graph6_lines, to_graph6
from .solver import DEFAULT_MAX_PARTITIONS, lambda_k_enumerate

MAX_LABELED_ORDER = 7
MAX_UNLABELED_ORDER = 8


def _connected_masks(n: int) -> Iterator[int]:
    """Edge masks of labeled connected graphs, by edge count then
    lexicographic combination of pair indices."""
    if n > MAX_LABELED_ORDER:
        raise ValueError(
            f"full labeled enumeration is limited to n <= {MAX_LABELED_ORDER}; "
            "use a graph6 stream for larger orders"
        )
    if n == 1:
        yield 0
        return
    pairs = pairs_in_order(n)
    full = (1 << n) - 1
    for m in range(n - 1, len(pairs) + 1):
        for chosen in combinations(range(len(pairs)), m):
            adj = [0] * n
            mask = 0
            for idx in chosen:
                i, j = pairs[idx]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                mask |= 1 << idx
            if count_components(adj, full, stop_at=2) == 1:
                yield mask


def enumerate_connected_labeled(n: int) -> Iterator[Graph]:
    """Every labeled connected graph on ``0..n-1`` exactly once (n <= 7)."""
    for mask in _connected_masks(n):
        yield Graph.from_edge_mask(n, mask)


def canonical_form(g: Graph) -> Graph:
    """Isomorphism-invariant relabeling of ``g``.

    Vertices are grouped by (degree, sorted neighbour degrees); classes are
    laid out in invariant order and every ordering within each class is
    tried, keeping the labeling with the largest edge mask.
    """
    n = g.n
    deg = g.degrees
    key = [(deg[v], tuple(sorted(deg[w] for w in g.neighbors(v)))) for v in range(n)]
    classes: dict = {}
    for v in range(n):
        classes.setdefault(key[v], []).append(v)
    ordered = [classes[c] for c in sorted(classes, reverse=True)]
    pairs = pairs_in_order(n)
    best_mask = -1
    for choice in product(*(permutations(c) for c in ordered)):
        order = [v for block in choice for v in block]  # order[new] = old
        mask = 0
        for idx, (i, j) in enumerate(pairs):
            if g.adj[order[i]] >> order[j] & 1:
                mask |= 1 << idx
        if mask > best_mask:
            best_mask = mask
    return Graph.from_edge_mask(n, best_mask)


def enumerate_connected_unlabeled(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected
    graphs of order n, built by adding a vertex to order n-1 graphs
    (every connected graph has a vertex whose removal keeps it connected)."""
    if n > MAX_UNLABELED_ORDER:
        raise ValueError(f"isomorph-free generation is limited to n <= {MAX_UNLABELED_ORDER}")
    level = [Graph(1)]
    for order in range(2, n + 1):
        seen: dict[tuple, Graph] = {}
        for g in level:
            base = list(g.adj)
            for r in range(1, order):
                for nbrs in combinations(range(order - 1), r):
                    adj = base + [0]
                    for u in nbrs:
                        adj[u] |= 1 << (order - 1)
                        adj[order - 1] |= 1 << u
                    c = canonical_form(Graph.from_adjacency(adj))
                    seen.setdefault(c.adj, c)
        level = sorted(seen.values(), key=lambda h: (h.m, to_graph6(h)))
    yield from level


def ingest_graph6_stream(source, n: Optional[int] = None) -> Iterator[Graph]:
    """Graphs from a graph6 stream; with ``n`` given, every order must match."""
    for lineno, g in enumerate(read_graph6_lines(source), start=1):
        if n is not None and g.n != n:
            raise ValueError(f"graph #{lineno} has order {g.n}, expected {n}")
        yield g


@dataclass
class Row:
    f: Optional[int]
    witness: Optional[str]


@dataclass
class ExtremalTable:
    n: int
    k: int
    rows: dict[int, Row]
    graphs_seen: int = 0
    solver_calls: int = 0

    @property
    def upper(self) -> int:
        return clique_upper_bound(self.n, self.k)

    def lower_value(self, t: int) -> int:
        return self.n - self.k + t

    def upper_value(self, t: int) -> int:
        return comb(self.n - self.k + 1, 2) + t

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "graphs_seen": self.graphs_seen,
            "solver_calls": self.solver_calls,
            "rows": [
                {
                    "t": t,
                    "f": row.f,
                    "witness_graph6": row.witness,
                    "lower_tight": None if row.f is None else row.f == self.lower_value(t),
                    "upper_tight": None if row.f is None else row.f == self.upper_value(t),
                }
                for t, row in sorted(self.rows.items())
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "f", "witness_graph6", "lower_tight", "upper_tight"])
        for r in self.to_dict()["rows"]:
            w.writerow([
                r["t"],
                "" if r["f"] is None else r["f"],
                r["witness_graph6"] or "",
                "" if r["lower_tight"] is None else str(r["lower_tight"]).lower(),
                "" if r["upper_tight"] is None else str(r["upper_tight"]).lower(),
            ])
        return buf.getvalue()


def _scan(n, k, graphs, max_partitions):
    """Min-reduction over an iterable of graphs: {t: (m, graph6)}."""
    lo, hi = k - 1, clique_upper_bound(n, k)
    span = range(lo, hi + 1)
    best: dict[int, tuple[int, str]] = {}
    seen = calls = 0
    for g in graphs:
        if isinstance(g, int):
            g = Graph.from_edge_mask(n, g)
        seen += 1
        m = g.m
        if len(best) == len(span) and all(best[t][0] < m for t in span):
            continue
        if not g.is_connected():
            continue
        calls += 1
        t = lambda_k_enumerate(g, k, max_partitions=max_partitions)[0]
        cur = best.get(t)
        if cur is None or m < cur[0] or (m == cur[0] and to_graph6(g) < cur[1]):
            best[t] = (m, to_graph6(g))
    return best, seen, calls


def _scan_chunk(args):
    n, k, masks, max_partitions = args
    return _scan(n, k, masks, max_partitions)


def f_table(
    n: int,
    k: int,
    source: Union[None, str, Iterable[Graph]] = None,
    *,
    max_partitions: int = DEFAULT_MAX_PARTITIONS,
    workers: int = 1,
) -> ExtremalTable:
    """Compute f(n, k, t) for every t in [k-1, C(n,2) - C(n-k+1,2)].

    ``source=None`` exhausts all labeled connected graphs; otherwise it is a
    graph6 path/file or an iterable of graphs of order n.  Rows with no
    witness have ``f=None``.  Among minimum-size witnesses the
    lexicographically least graph6 string is kept, so the table does not
    depend on ``workers``.
    """
    if not 2 <= k <= n:
        raise ValueError(f"k must satisfy 2 <= k <= n={n}, got {k}")
    if source is None:
        items: Iterable = _connected_masks(n)
    elif isinstance(source, str) or hasattr(source, "read"):
        items = ingest_graph6_stream(source, n)
    else:
        items = _checked_order(source, n)

    if workers > 1:
        items = list(items)
        size = max(1, -(-len(items) // (workers * 4)))
        chunks = [(n, k, items[i:i + size], max_partitions) for i in range(0, len(items), size)]
        best: dict[int, tuple[int, str]] = {}
        seen = calls = 0
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part, s, c in pool.map(_scan_chunk, chunks):
                seen += s
                calls += c
                for t, cand in part.items():
                    if t not in best or cand < best[t]:
                        best[t] = cand
    else:
        best, seen, calls = _scan(n, k, items, max_partitions)

    lo, hi = k - 1, clique_upper_bound(n, k)
    rows = {}
    for t in range(lo, hi + 1):
        if t in best:
            rows[t] = Row(best[t][0], best[t][1])
        else:
            rows[t] = Row(None, None)
    return ExtremalTable(n, k, rows, graphs_seen=seen, solver_calls=calls)


def _checked_order(graphs: Iterable[Graph], n: int) -> Iterator[Graph]:
    for g in graphs:
        if g.n != n:
            raise ValueError(f"graph of order {g.n} in a universe of order {n}")
        yield g


@dataclass
class Finding:
    t: int
    kind: str  # "violation" or "info"
    message: str

    def to_dict(self) -> dict:
        return {"t": self.t, "kind": self.kind, "message": self.message}


def verify_f_bounds(table: ExtremalTable, strict: bool = True) -> list[Finding]:
    """Check n-k+t <= f <= C(n-k+1,2)+t on feasible rows, equality with the
    lower value at t in {k-1, k} and with the upper value at t in
    {UB-1, UB}.  Also notes infeasible rows and drops of f as t grows.

    With ``strict`` any violation raises :class:`TheoremViolation`.
    """
    n, k = table.n, table.k
    lo, ub = k - 1, table.upper
    findings: list[Finding] = []
    lower_eq = {t for t in (k - 1, k) if lo <= t <= ub}
    upper_eq = {t for t in (ub - 1, ub) if lo <= t <= ub}
    prev = None
    for t, row in sorted(table.rows.items()):
        low, high = table.lower_value(t), table.upper_value(t)
        if row.f is None:
            if t in lower_eq or t in upper_eq:
                findings.append(Finding(t, "violation", f"t={t}: no witness, but an exact value is claimed"))
            else:
                findings.append(Finding(t, "info", f"t={t}: no connected graph of order {n} has lambda_{k}={t}"))
            continue
        if not low <= row.f <= high:
            findings.append(Finding(t, "violation", f"t={t}: f={row.f} outside [{low}, {high}]"))
        if t in lower_eq and row.f != low:
            findings.append(Finding(t, "violation", f"t={t}: f={row.f}, expected {low}"))
        if t in upper_eq and row.f != high:
            findings.append(Finding(
                t, "violation", f"t={t}: f={row.f}, expected {high} (witness {row.witness})"
            ))
        if prev is not None and row.f < prev:
            findings.append(Finding(t, "info", f"t={t}: f={row.f} drops below f(t-1)={prev}"))
        prev = row.f
    bad = [f for f in findings if f.kind == "violation"]
    if strict and bad:
        raise TheoremViolation(
            f"f({n},{k},t) bounds violated: " + "; ".join(f.message for f in bad),
            details=[f.to_dict() for f in bad],
        )
    return findings
