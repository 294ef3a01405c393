"""Exact k-edge-connectivity (minimum k-way edge cut).

Two independent routes compute lambda_k:

* :func:`lambda_k_enumerate` scans every partition of V into exactly k
  blocks (the oracle);
* :func:`lambda_k_bb` runs a depth-first branch-and-bound over vertex-to-
  block assignments, seeded with the greedy splitting bound.

Minimising over exactly-k-block partitions is enough: an optimal cut leaves
exactly k components, since with more one removed edge could be put back.
Both routes return the lexicographically least optimal partition, so their
certificates coincide.  :func:`global_min_cut` is a Stoer-Wagner
implementation used only to cross-check k = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import BudgetExceeded, DisconnectedGraph, KCutError
from .graph import Edge, Graph, count_components, pairs_in_order
from .partitions import Partition, bell, restricted_growth_strings, stirling2

DEFAULT_MAX_PARTITIONS = 10**8
# (n, k) tables with at most this many partitions are memoised as masks
_CACHE_LIMIT = 50_000


@dataclass(frozen=True)
class CutCertificate:
    removed: tuple[Edge, ...]
    component_count: int
    partition: Partition

    def to_dict(self) -> dict:
        return {
            "removed": [list(e) for e in self.removed],
            "component_count": self.component_count,
            "partition": self.partition.groups(),
        }


def _check_args(g: Graph, k: int) -> None:
    if not isinstance(k, int) or not 2 <= k <= g.n:
        raise ValueError(f"k must satisfy 2 <= k <= n={g.n}, got {k!r}")
    if not g.is_connected():
        raise DisconnectedGraph("lambda_k is only defined here for connected graphs")


def crossing_edges(g: Graph, p: Partition) -> tuple[Edge, ...]:
    """Edges whose endpoints lie in different blocks of ``p``."""
    if p.n != g.n:
        raise ValueError(f"partition covers {p.n} vertices, graph has {g.n}")
    b = p.blocks
    return tuple(e for e in g.edges if b[e[0]] != b[e[1]])


def certificate(g: Graph, p: Partition) -> CutCertificate:
    removed = crossing_edges(g, p)
    count = count_components(g.remove_edges(removed).adj, (1 << g.n) - 1)
    return CutCertificate(removed, count, p)


def _crossing_mask(n: int, rgs: tuple[int, ...]) -> int:
    mask = 0
    for idx, (i, j) in enumerate(pairs_in_order(n)):
        if rgs[i] != rgs[j]:
            mask |= 1 << idx
    return mask


@lru_cache(maxsize=128)
def _mask_table(n: int, k: Optional[int]) -> tuple[tuple[tuple[int, ...], int], ...]:
    pairs = pairs_in_order(n)
    out = []
    for rgs in restricted_growth_strings(n, k):
        mask = 0
        for idx, (i, j) in enumerate(pairs):
            if rgs[i] != rgs[j]:
                mask |= 1 << idx
        out.append((rgs, mask))
    return tuple(out)


def _partitions_with_masks(n: int, k: Optional[int]):
    count = bell(n) if k is None else stirling2(n, k)
    if count <= _CACHE_LIMIT:
        return _mask_table(n, k)
    return ((rgs, _crossing_mask(n, rgs)) for rgs in restricted_growth_strings(n, k))


def _short_circuit(g: Graph, k: int) -> Optional[Partition]:
    n = g.n
    if k == n:
        return Partition(tuple(range(n)))
    if k == n - 1:
        # one merged pair; the lexicographically least RGS merging an edge
        # is the edge with the smallest larger endpoint, then smaller one
        u, v = min(g.edges, key=lambda e: (e[1], e[0]))
        return Partition.from_labels([u if x == v else x for x in range(n)])
    return None


def lambda_k_enumerate(
    g: Graph, k: int, max_partitions: int = DEFAULT_MAX_PARTITIONS
) -> tuple[int, CutCertificate]:
    """lambda_k by scanning all S(n, k) partitions in RGS order.

    Raises :class:`BudgetExceeded` when S(n, k) > ``max_partitions``.
    """
    _check_args(g, k)
    p = _short_circuit(g, k)
    if p is None:
        total = stirling2(g.n, k)
        if total > max_partitions:
            raise BudgetExceeded(
                f"S({g.n},{k}) = {total} partitions exceeds the budget of {max_partitions}"
            )
        emask = g.edge_mask
        best = None
        best_rgs = None
        for rgs, cross in _partitions_with_masks(g.n, k):
            c = (emask & cross).bit_count()
            if best is None or c < best:
                best, best_rgs = c, rgs
        p = Partition(best_rgs)
    cert = certificate(g, p)
    return len(cert.removed), cert


def lambda_all_k(g: Graph, max_partitions: int = DEFAULT_MAX_PARTITIONS) -> dict[int, tuple[int, Partition]]:
    """lambda_k for every 2 <= k <= n from one pass over all Bell(n) partitions.

    Returns ``{k: (value, lexicographically least optimal partition)}``.
    """
    if not g.is_connected():
        raise DisconnectedGraph("lambda_k is only defined here for connected graphs")
    n = g.n
    total = bell(n)
    if total > max_partitions:
        raise BudgetExceeded(f"Bell({n}) = {total} partitions exceeds the budget of {max_partitions}")
    emask = g.edge_mask
    best: dict[int, tuple[int, tuple[int, ...]]] = {}
    for rgs, cross in _partitions_with_masks(n, None):
        k = max(rgs) + 1
        if k < 2:
            continue
        c = (emask & cross).bit_count()
        cur = best.get(k)
        if cur is None or c < cur[0]:
            best[k] = (c, rgs)
    return {k: (v, Partition(r)) for k, (v, r) in sorted(best.items())}


def lambda_values(g: Graph) -> dict[int, int]:
    """``{k: lambda_k}`` for all k; cheap helper for sweeps."""
    return {k: v for k, (v, _) in lambda_all_k(g).items()}


class _Search:
    """Mutable state for one branch-and-bound run."""

    def __init__(self, g: Graph, k: int, bound: int, max_nodes: Optional[int]):
        self.n = g.n
        self.k = k
        # edges from v to lower-numbered vertices, as a bitmask
        self.back = [g.adj[v] & ((1 << v) - 1) for v in range(g.n)]
        self.block_mask = [0] * k
        self.assign = [0] * g.n
        self.best = bound  # prune when cost >= best
        self.best_assign: Optional[tuple[int, ...]] = None
        self.nodes = 0
        self.max_nodes = max_nodes

    def run(self, v: int, used: int, cost: int) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(f"branch-and-bound exceeded {self.max_nodes} nodes")
        if v == self.n:
            if used == self.k and cost < self.best:
                self.best = cost
                self.best_assign = tuple(self.assign)
            return
        remaining = self.n - v
        missing = self.k - used
        back = self.back[v]
        back_deg = back.bit_count()
        top = used if used < self.k else self.k - 1
        for b in range(top + 1):
            if b < used and missing >= remaining:
                continue  # every remaining vertex must open a new block
            if b == used:
                inside = 0
            else:
                inside = (back & self.block_mask[b]).bit_count()
            c = cost + back_deg - inside
            if c >= self.best:
                continue
            self.assign[v] = b
            self.block_mask[b] |= 1 << v
            self.run(v + 1, used + 1 if b == used else used, c)
            self.block_mask[b] &= ~(1 << v)


def lambda_k_bb(
    g: Graph, k: int, max_nodes: Optional[int] = None
) -> tuple[int, CutCertificate]:
    """lambda_k by branch-and-bound.

    Vertices are assigned to blocks in id order; a branch is cut once the
    edges already crossing reach the incumbent.  The incumbent starts at the
    greedy splitting value, and since leaves are met in lexicographic order
    the first optimum found is the lexicographically least one.
    """
    from .greedy import greedy_k_split

    _check_args(g, k)
    p = _short_circuit(g, k)
    if p is None:
        seed = greedy_k_split(g, k).total_removed
        search = _Search(g, k, seed + 1, max_nodes)
        search.block_mask[0] = 1
        search.assign[0] = 0
        search.run(1, 1, 0)
        if search.best_assign is None:
            raise KCutError("branch-and-bound found no partition within the greedy bound")
        p = Partition(search.best_assign)
    cert = certificate(g, p)
    return len(cert.removed), cert


def global_min_cut(g: Graph) -> int:
    """Stoer-Wagner minimum cut of a connected unweighted graph."""
    n = g.n
    if n < 2:
        raise ValueError("global minimum cut needs at least two vertices")
    if not g.is_connected():
        raise DisconnectedGraph("global_min_cut expects a connected graph")
    w = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        w[u][v] = w[v][u] = 1
    alive = list(range(n))
    best = None
    while len(alive) > 1:
        # one minimum-cut phase: maximum adjacency ordering
        weight = {v: 0 for v in alive}
        added = []
        prev = last = None
        remaining = set(alive)
        while remaining:
            nxt = max(remaining, key=lambda v: (weight[v], -v))
            remaining.remove(nxt)
            added.append(nxt)
            prev, last = last, nxt
            for v in remaining:
                weight[v] += w[nxt][v]
        cut = weight[last]
        if best is None or cut < best:
            best = cut
        # merge last into prev
        for v in alive:
            if v != last and v != prev:
                w[prev][v] += w[last][v]
                w[v][prev] = w[prev][v]
        alive.remove(last)
    return best
