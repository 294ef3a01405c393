"""Brute-force companion connectivities.

* ``kappa_k``: fewest vertices whose deletion leaves >= k components or
  < k vertices.
* ``steiner_pack``: the largest family of S-trees that are pairwise
  edge-disjoint (``mode="edge"``) or internally disjoint
  (``mode="internal"``: edge-disjoint and meeting only in S).
* ``lambda_prime_k`` / ``kappa_prime_k``: the minimum packing number over
  all k-subsets S.

Packing search works over *minimal* S-trees, those whose leaves all lie in
S.  Pruning non-S leaves from any tree in a packing keeps the packing
valid, so nothing is lost.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Optional

from .errors import BudgetExceeded
from .graph import Edge, Graph, bits, count_components

DEFAULT_MAX_EDGES = 16
DEFAULT_MAX_SUBSETS = 1 << 20
DEFAULT_MAX_TREES = 500_000

EDGE = "edge"
INTERNAL = "internal"


@dataclass(frozen=True)
class VertexCutCertificate:
    removed: tuple[int, ...]
    # "components": G - X has >= k components; "order": fewer than k vertices remain
    outcome: str
    component_count: int

    def to_dict(self) -> dict:
        return {
            "removed": list(self.removed),
            "outcome": self.outcome,
            "component_count": self.component_count,
        }


def kappa_k(
    g: Graph, k: int, max_subsets: int = DEFAULT_MAX_SUBSETS
) -> tuple[int, VertexCutCertificate]:
    """Vertex k-connectivity, searching sets by size then lexicographically."""
    n = g.n
    if not isinstance(k, int) or not 2 <= k <= n:
        raise ValueError(f"k must satisfy 2 <= k <= n={n}, got {k!r}")
    full = (1 << n) - 1
    visited = 0
    for size in range(n + 1):
        if n - size < k:
            x = tuple(range(size))
            rest = full & ~((1 << size) - 1)
            return size, VertexCutCertificate(x, "order", count_components(g.adj, rest))
        visited += comb(n, size)
        if visited > max_subsets:
            raise BudgetExceeded(
                f"kappa_{k} search on {n} vertices needs more than {max_subsets} subsets"
            )
        for x in combinations(range(n), size):
            alive = full
            for v in x:
                alive &= ~(1 << v)
            c = count_components(g.adj, alive, stop_at=k)
            if c >= k:
                return size, VertexCutCertificate(x, "components", count_components(g.adj, alive))
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class SteinerPacking:
    S: tuple[int, ...]
    trees: tuple[tuple[Edge, ...], ...]
    mode: str

    def to_dict(self) -> dict:
        return {
            "S": list(self.S),
            "mode": self.mode,
            "trees": [[list(e) for e in t] for t in self.trees],
        }

    def validate(self, g: Graph) -> None:
        """Raise ``ValueError`` unless every tree is an S-tree of ``g`` and
        the family is disjoint per ``mode``."""
        s_set = set(self.S)
        seen_edges: set[Edge] = set()
        seen_inner: set[int] = set()
        for t in self.trees:
            verts = {v for e in t for v in e} or set(self.S)
            if not s_set <= verts:
                raise ValueError(f"tree {t} misses part of S")
            if len(t) != len(verts) - 1:
                raise ValueError(f"tree {t} is not a tree")
            sub = Graph(g.n, t)
            for u, v in t:
                if not g.has_edge(u, v):
                    raise ValueError(f"edge {(u, v)} not in graph")
            alive = 0
            for v in verts:
                alive |= 1 << v
            if count_components(sub.adj, alive) != 1:
                raise ValueError(f"tree {t} is disconnected")
            if seen_edges & set(t):
                raise ValueError("trees share an edge")
            seen_edges |= set(t)
            if self.mode == INTERNAL:
                inner = verts - s_set
                if seen_inner & inner:
                    raise ValueError("trees share a vertex outside S")
                seen_inner |= inner


def minimal_steiner_trees(
    g: Graph, S: Iterable[int], max_trees: int = DEFAULT_MAX_TREES
) -> list[tuple[int, int]]:
    """All S-trees whose leaves lie in S, as ``(edge_id_mask, vertex_mask)``.

    Edge ids index ``g.edges``.  Trees are grown from min(S) with an
    include/exclude branching on boundary edges, so each is produced once.
    """
    S = sorted(set(S))
    edges = g.edges
    inc = [0] * g.n
    for i, (u, v) in enumerate(edges):
        inc[u] |= 1 << i
        inc[v] |= 1 << i
    s_mask = 0
    for v in S:
        s_mask |= 1 << v
    all_edges = (1 << len(edges)) - 1
    ends = [u + v for u, v in edges]  # other endpoint of edge i at v: ends[i] - v
    out: list[tuple[int, int]] = []

    def leaves_ok(tverts, tedges):
        if tedges == 0:
            return True
        for v in bits(tverts & ~s_mask):
            if (inc[v] & tedges).bit_count() == 1:
                return False
        return True

    def reachable(tverts, inner_all, excluded):
        avail = all_edges & ~excluded & ~inner_all
        reach = tverts
        frontier = tverts
        while frontier and s_mask & ~reach:
            low = frontier & -frontier
            frontier ^= low
            v = low.bit_length() - 1
            es = inc[v] & avail
            avail &= ~es
            while es:
                e = es & -es
                es ^= e
                w = ends[e.bit_length() - 1] - v
                if not reach >> w & 1:
                    reach |= 1 << w
                    frontier |= 1 << w
        return not s_mask & ~reach

    def rec(tverts, tedges, touch, inner_all, excluded):
        if not s_mask & ~tverts:
            if leaves_ok(tverts, tedges):
                out.append((tedges, tverts))
                if len(out) > max_trees:
                    raise BudgetExceeded(f"more than {max_trees} minimal Steiner trees")
            return
        cand = touch & ~inner_all & ~excluded
        # a non-S leaf with no remaining extension can never become internal
        rest = tverts & ~s_mask
        while rest:
            low = rest & -rest
            rest ^= low
            iv = inc[low.bit_length() - 1]
            if not iv & cand and (iv & tedges).bit_count() == 1:
                return
        if not cand:
            return
        e = cand & -cand
        i = e.bit_length() - 1
        u, v = edges[i]
        new = v if tverts >> u & 1 else u
        rec(
            tverts | (1 << new),
            tedges | e,
            touch | inc[new],
            inner_all | (inc[new] & touch),
            excluded,
        )
        if reachable(tverts, inner_all, excluded | e):
            rec(tverts, tedges, touch, inner_all, excluded | e)

    root = S[0]
    rec(1 << root, 0, inc[root], 0, 0)
    return out


@lru_cache(maxsize=512)
def _cached_trees(g: Graph, S: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    # both packing modes share the tree list of each (G, S)
    return tuple(minimal_steiner_trees(g, S))


def steiner_pack(
    g: Graph,
    S: Iterable[int],
    mode: str = EDGE,
    max_edges: int = DEFAULT_MAX_EDGES,
    stop_at: Optional[int] = None,
) -> tuple[int, SteinerPacking]:
    """Maximum number of disjoint S-trees (exact, exponential).

    With ``stop_at`` the search returns as soon as that many trees are
    packed; the count is then a lower bound capped at ``stop_at``.
    """
    S = tuple(sorted(set(S)))
    if len(S) < 2:
        raise ValueError("S needs at least two vertices")
    if any(not 0 <= v < g.n for v in S):
        raise ValueError(f"S={S} is not a subset of V(G)")
    if mode not in (EDGE, INTERNAL):
        raise ValueError(f"mode must be {EDGE!r} or {INTERNAL!r}")
    if g.m > max_edges:
        raise BudgetExceeded(f"Steiner packing limited to m <= {max_edges}, graph has m={g.m}")

    trees = _cached_trees(g, S)
    s_mask = 0
    for v in S:
        s_mask |= 1 << v
    edges = g.edges
    # anchor at the S vertex of least degree; every tree uses one of its edges
    anchor = min(S, key=lambda v: (g.degree(v), v))
    anchor_edges = 0
    for i, (u, v) in enumerate(edges):
        if u == anchor or v == anchor:
            anchor_edges |= 1 << i
    by_first: dict[int, list[tuple[int, int]]] = {}
    for te, tv in trees:
        first = te & anchor_edges
        first &= -first
        inner = tv & ~s_mask if mode == INTERNAL else 0
        by_first.setdefault(first, []).append((te, inner))

    best = [0, ()]
    chosen: list[int] = []
    goal = stop_at

    def search(used_e, used_v, avail, count):
        if count > best[0]:
            best[0] = count
            best[1] = tuple(chosen)
        if goal is not None and best[0] >= goal:
            return True
        if count + avail.bit_count() <= best[0] or not avail:
            return False
        e = avail & -avail
        for te, inner in by_first.get(e, ()):
            if te & used_e or inner & used_v:
                continue
            chosen.append(te)
            if search(used_e | te, used_v | inner, avail & ~te, count + 1):
                return True
            chosen.pop()
        return search(used_e, used_v, avail & ~e, count)

    search(0, 0, anchor_edges, 0)
    packed = tuple(tuple(edges[i] for i in bits(te)) for te in best[1])
    return best[0], SteinerPacking(S, packed, mode)


def _min_packing(g, k, mode, max_edges):
    n = g.n
    if k < 2:
        raise ValueError("k must be at least 2")
    if not g.is_connected():
        return 0, None
    if n < k:
        return 1, None
    best = None
    witness = None
    for S in combinations(range(n), k):
        value, packing = steiner_pack(g, S, mode, max_edges=max_edges, stop_at=best)
        if best is None or value < best:
            best, witness = value, packing
            if best <= 1:
                break
    return best, witness


def lambda_prime_k(g: Graph, k: int, max_edges: int = DEFAULT_MAX_EDGES) -> int:
    """Generalized k-edge-connectivity: min over |S| = k of the edge-disjoint
    S-tree packing number.  Uses 0 for disconnected graphs and 1 for
    connected graphs with fewer than k vertices."""
    return _min_packing(g, k, EDGE, max_edges)[0]


def kappa_prime_k(g: Graph, k: int, max_edges: int = DEFAULT_MAX_EDGES) -> int:
    """Generalized k-connectivity (internally disjoint S-trees), with the
    conventions 0 for disconnected and 1 for connected graphs on fewer than
    k vertices."""
    return _min_packing(g, k, INTERNAL, max_edges)[0]


def min_packing_witness(
    g: Graph, k: int, mode: str = EDGE, max_edges: int = DEFAULT_MAX_EDGES
) -> tuple[int, Optional[SteinerPacking]]:
    """Like :func:`lambda_prime_k` / :func:`kappa_prime_k` but also returns
    the maximum packing for the lexicographically first minimising S
    (``None`` when a convention value applies)."""
    return _min_packing(g, k, mode, max_edges)
