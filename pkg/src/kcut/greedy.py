"""Greedy vertex-isolation splitting.

Isolate v_1, ..., v_{k-1} one at a time, each time deleting every edge still
incident with the chosen vertex.  After the first step each v_i is taken from
a largest component of the current graph with current degree at most
Delta - 1, which keeps the total at most (Delta - 1)(k - 1) + 1.

Selection is deterministic:

* v_1 is the smallest-id vertex of minimum degree;
* later v_i come from the largest component (ties: the component holding
  the smallest vertex id).  Vertices adjacent in G to an earlier choice are
  preferred, then minimum current degree, then smallest id.

If no vertex of that component has current degree <= Delta - 1 the choice
falls back to the same ordering without the degree cap, and the step is
listed in ``fallback_steps``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DisconnectedGraph
from .graph import Edge, Graph, bits, count_components


@dataclass
class GreedyTrace:
    chosen: list[int]
    removed_per_step: list[list[Edge]]
    total_removed: int
    final_components: int
    max_degree: int
    # 1-based step after which at least k components existed (None if never)
    first_k_step: int | None = None
    fallback_steps: list[int] = field(default_factory=list)
    # vertices scanned per iteration, for the O(kn) accounting
    scans: list[int] = field(default_factory=list)

    @property
    def bound(self) -> int:
        return (self.max_degree - 1) * (len(self.chosen)) + 1

    @property
    def removed(self) -> list[Edge]:
        return sorted(e for step in self.removed_per_step for e in step)

    def to_dict(self) -> dict:
        return {
            "chosen": self.chosen,
            "removed_per_step": [[list(e) for e in step] for step in self.removed_per_step],
            "total_removed": self.total_removed,
            "final_components": self.final_components,
            "max_degree": self.max_degree,
            "bound": self.bound,
            "first_k_step": self.first_k_step,
            "fallback_steps": self.fallback_steps,
            "scans": self.scans,
        }


def _components(adj: list[int], n: int) -> tuple[list[int], int, int]:
    """One sweep: (vertex mask per component, index of the largest, vertices visited)."""
    unseen = (1 << n) - 1
    comps = []
    visited = 0
    while unseen:
        low = unseen & -unseen
        seen = low
        stack = low
        while stack:
            b = stack & -stack
            stack ^= b
            visited += 1
            new = adj[b.bit_length() - 1] & ~seen
            seen |= new
            stack |= new
        unseen &= ~seen
        comps.append(seen)
    sizes = [c.bit_count() for c in comps]
    largest = sizes.index(max(sizes))  # comps are ordered by smallest vertex
    return comps, largest, visited


def greedy_k_split(g: Graph, k: int) -> GreedyTrace:
    n = g.n
    if not isinstance(k, int) or not 2 <= k <= n:
        raise ValueError(f"k must satisfy 2 <= k <= n={n}, got {k!r}")
    if not g.is_connected():
        raise DisconnectedGraph("greedy splitting expects a connected graph")

    adj = list(g.adj)
    delta = max(g.degrees)
    v1 = min(range(n), key=lambda v: (adj[v].bit_count(), v))

    chosen: list[int] = []
    steps: list[list[Edge]] = []
    scans: list[int] = []
    fallbacks: list[int] = []
    near_chosen = 0  # vertices adjacent in G to some earlier choice
    first_k_step = None

    for i in range(1, k):
        if i == 1:
            v = v1
            scans.append(n)
        else:
            comps, largest, visited = _components(adj, n)
            scans.append(visited)
            pool = comps[largest]
            if pool.bit_count() == 1:
                # everything is isolated already; any unchosen vertex will do
                taken = 0
                for c in chosen:
                    taken |= 1 << c
                free = ((1 << n) - 1) & ~taken
                pool = free & -free
            candidates = bits(pool)
            capped = [u for u in candidates if adj[u].bit_count() <= delta - 1]
            if not capped:
                fallbacks.append(i)
                capped = candidates
            preferred = [u for u in capped if near_chosen >> u & 1]
            pick_from = preferred or capped
            v = min(pick_from, key=lambda u: (adj[u].bit_count(), u))
        removed = [(min(v, w), max(v, w)) for w in bits(adj[v])]
        for w in bits(adj[v]):
            adj[w] &= ~(1 << v)
        adj[v] = 0
        chosen.append(v)
        steps.append(sorted(removed))
        near_chosen |= g.adj[v]
        if first_k_step is None and _count(adj, n) >= k:
            first_k_step = i

    final = _count(adj, n)
    return GreedyTrace(
        chosen=chosen,
        removed_per_step=steps,
        total_removed=sum(len(s) for s in steps),
        final_components=final,
        max_degree=delta,
        first_k_step=first_k_step,
        fallback_steps=fallbacks,
        scans=scans,
    )


def _count(adj: list[int], n: int) -> int:
    return count_components(adj, (1 << n) - 1)
