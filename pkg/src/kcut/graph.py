"""Immutable simple undirected graphs on vertices ``0..n-1``.

Adjacency rows are stored as Python ints used as fixed-width bitsets, which
keeps the exhaustive searches elsewhere in the package cheap.  Orders above
``MAX_ORDER`` are rejected.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import GraphTooLarge

MAX_ORDER = 64

Edge = tuple[int, int]


def pair_index(u: int, v: int) -> int:
    """Position of pair {u, v} in the upper-triangle column-major order.

    This is the bit order used by graph6 and by edge masks throughout the
    package: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
    """
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def pairs_in_order(n: int) -> list[Edge]:
    return [(i, j) for j in range(1, n) for i in range(j)]


class Graph:
    """Simple undirected graph with dense integer vertex ids.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.m, g.degrees
    (2, (1, 2, 1))
    """

    __slots__ = ("n", "adj", "_edges")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"graph order must be a positive integer, got {n!r}")
        if n > MAX_ORDER:
            raise GraphTooLarge(f"order {n} exceeds the supported maximum of {MAX_ORDER}")
        adj = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge {(min(u, v), max(u, v))}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._edges = None

    @classmethod
    def from_adjacency(cls, rows: Iterable[int]) -> "Graph":
        """Build from bitset rows; rows must already be symmetric and loop-free."""
        rows = tuple(rows)
        n = len(rows)
        if n > MAX_ORDER:
            raise GraphTooLarge(f"order {n} exceeds the supported maximum of {MAX_ORDER}")
        g = cls.__new__(cls)
        g.n = n
        g.adj = rows
        g._edges = None
        return g

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Inverse of :attr:`edge_mask`."""
        adj = [0] * n
        idx = 0
        for j in range(1, n):
            for i in range(j):
                if mask >> idx & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                idx += 1
        return cls.from_adjacency(adj)

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        if self._edges is None:
            out = []
            for u in range(self.n):
                row = self.adj[u] >> (u + 1)
                v = u + 1
                while row:
                    if row & 1:
                        out.append((u, v))
                    row >>= 1
                    v += 1
            self._edges = tuple(out)
        return self._edges

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    @property
    def edge_mask(self) -> int:
        """Edge set as a bitmask over :func:`pair_index` positions."""
        mask = 0
        for u, v in self.edges:
            mask |= 1 << pair_index(u, v)
        return mask

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.adj)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def remove_edges(self, edges: Iterable[Edge]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            if not adj[u] >> v & 1:
                raise ValueError(f"edge {(u, v)} not in graph")
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph.from_adjacency(adj)

    def is_connected(self) -> bool:
        return count_components(self.adj, (1 << self.n) - 1) == 1

    def to_graph6(self) -> str:
        from .io import to_graph6

        return to_graph6(self)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def bits(x: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def count_components(adj, alive: int, stop_at: Optional[int] = None) -> int:
    """Number of components of the subgraph induced by the ``alive`` mask.

    Stops early once ``stop_at`` components have been seen.
    """
    count = 0
    while alive:
        low = alive & -alive
        seen = low
        stack = low
        while stack:
            b = stack & -stack
            stack ^= b
            new = adj[b.bit_length() - 1] & alive & ~seen
            seen |= new
            stack |= new
        alive &= ~seen
        count += 1
        if stop_at is not None and count >= stop_at:
            return count
    return count


class ComponentLabeling(NamedTuple):
    labels: tuple[int, ...]
    count: int

    def groups(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.count)]
        for v, c in enumerate(self.labels):
            out[c].append(v)
        return out


def components(g: Graph) -> ComponentLabeling:
    """Label components 0..count-1 in order of their smallest vertex."""
    labels = [-1] * g.n
    count = 0
    for s in range(g.n):
        if labels[s] != -1:
            continue
        labels[s] = count
        stack = [s]
        while stack:
            u = stack.pop()
            for w in bits(g.adj[u]):
                if labels[w] == -1:
                    labels[w] = count
                    stack.append(w)
        count += 1
    return ComponentLabeling(tuple(labels), count)


def bridges(g: Graph) -> frozenset[Edge]:
    """Cut edges, found with an iterative low-link DFS."""
    n = g.n
    order = [-1] * n
    low = [0] * n
    found = set()
    counter = 0
    for root in range(n):
        if order[root] != -1:
            continue
        order[root] = low[root] = counter
        counter += 1
        # frames: (vertex, parent, remaining neighbours)
        stack = [(root, -1, iter(bits(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if order[w] == -1:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(bits(g.adj[w]))))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], order[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] > order[parent]:
                    found.add((min(v, parent), max(v, parent)))
    return frozenset(found)


def max_degree(g: Graph) -> int:
    return max(g.degrees)


def min_degree(g: Graph) -> int:
    return min(g.degrees)


class LineGraph(NamedTuple):
    """Line graph plus the map from its vertices back to source edges."""

    graph: Graph
    source_edges: tuple[Edge, ...]


def line_graph(g: Graph) -> LineGraph:
    """Vertex i of the result is ``g.edges[i]`` (lexicographic edge order).

    A graph with no edges has an empty line graph; since :class:`Graph` needs
    at least one vertex, that case returns ``None`` as the graph.
    """
    edges = g.edges
    m = len(edges)
    if m == 0:
        return LineGraph(None, ())
    if m > MAX_ORDER:
        raise GraphTooLarge(f"line graph would have {m} vertices (max {MAX_ORDER})")
    incident: list[int] = [0] * g.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    rows = []
    for i, (u, v) in enumerate(edges):
        rows.append((incident[u] | incident[v]) & ~(1 << i))
    return LineGraph(Graph.from_adjacency(rows), edges)


# -- named families ---------------------------------------------------------

FAMILY_MIN_ORDER = {
    "path": 1,
    "cycle": 3,
    "star": 1,
    "wheel": 4,
    "complete": 1,
    "complete-minus-edge": 2,
    "tree": 1,
}


@dataclass(frozen=True)
class GraphFamily:
    tag: str
    n: int
    seed: Optional[int] = None  # only used by "tree"

    def __post_init__(self):
        if self.tag not in FAMILY_MIN_ORDER:
            raise ValueError(f"unknown family {self.tag!r}; expected one of {sorted(FAMILY_MIN_ORDER)}")
        if self.n < FAMILY_MIN_ORDER[self.tag]:
            raise ValueError(f"{self.tag} needs order >= {FAMILY_MIN_ORDER[self.tag]}, got {self.n}")


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    return Graph(n, [(0, i) for i in range(1, n)])


def wheel(n: int) -> Graph:
    """Rim cycle on 0..n-2, hub n-1."""
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    rim = [(i, (i + 1) % (n - 1)) for i in range(n - 1)]
    return Graph(n, rim + [(i, n - 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge {0, 1} removed."""
    if n < 2:
        raise ValueError("complete-minus-edge needs n >= 2")
    return Graph(n, [e for e in combinations(range(n), 2) if e != (0, 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def random_tree(n: int, seed=None) -> Graph:
    """Uniform labeled tree via a random Pruefer sequence."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return Graph(n, edges)


def broom(n: int, k: int) -> Graph:
    """Star K_{1,k-2} whose centre is an end of a path on n-k+2 vertices.

    The centre is vertex 0, the star leaves are 1..k-2 and the path continues
    k-1, k, ..., n-1.  Maximum degree is k-1 for k >= 3.
    """
    if not 3 <= k <= n:
        raise ValueError("broom needs 3 <= k <= n")
    edges = [(0, i) for i in range(1, k - 1)]
    tail = [0] + list(range(k - 1, n))
    edges += list(zip(tail, tail[1:]))
    return Graph(n, edges)


def make_family(f: GraphFamily) -> Graph:
    builders = {
        "path": path,
        "cycle": cycle,
        "star": star,
        "wheel": wheel,
        "complete": complete,
        "complete-minus-edge": complete_minus_edge,
    }
    if f.tag == "tree":
        return random_tree(f.n, f.seed)
    return builders[f.tag](f.n)


def random_connected_graph(n: int, m: int, rng: random.Random) -> Graph:
    """Random spanning tree plus ``m - (n-1)`` extra distinct edges."""
    max_m = n * (n - 1) // 2
    if not n - 1 <= m <= max_m:
        raise ValueError(f"edge count {m} outside [{n - 1}, {max_m}]")
    tree = random_tree(n, rng)
    present = set(tree.edges)
    rest = [e for e in combinations(range(n), 2) if e not in present]
    extra = rng.sample(rest, m - (n - 1))
    return Graph(n, list(present) + extra)


def spanning_subgraphs_one_edge_less(g: Graph) -> Iterator[Graph]:
    """Connected graphs obtained by deleting one non-bridge edge."""
    cut = bridges(g)
    for e in g.edges:
        if e not in cut:
            yield g.remove_edges([e])
