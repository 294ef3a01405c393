"""Set partitions of ``0..n-1`` as restricted-growth strings."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def bell(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


@dataclass(frozen=True)
class Partition:
    """A partition stored as the block id of each vertex.

    Block ids appear in order of each block's smallest vertex, so
    ``blocks`` is a restricted-growth string and equal partitions compare
    equal.
    """

    blocks: tuple[int, ...]

    def __post_init__(self):
        top = -1
        for b in self.blocks:
            if b < 0 or b > top + 1:
                raise ValueError(f"{self.blocks} is not a restricted-growth string")
            top = max(top, b)

    @classmethod
    def from_groups(cls, groups: Iterable[Iterable[int]], n: Optional[int] = None) -> "Partition":
        groups = [sorted(g) for g in groups]
        if any(not g for g in groups):
            raise ValueError("partition blocks must be nonempty")
        size = sum(len(g) for g in groups)
        if n is None:
            n = size
        label = [-1] * n
        for idx, g in enumerate(groups):
            for v in g:
                if not 0 <= v < n or label[v] != -1:
                    raise ValueError(f"vertex {v} missing from range or repeated")
                label[v] = idx
        if size != n or -1 in label:
            raise ValueError("groups do not cover 0..n-1")
        return cls.from_labels(label)

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "Partition":
        """Canonicalize arbitrary block labels."""
        remap: dict[int, int] = {}
        out = []
        for x in labels:
            if x not in remap:
                remap[x] = len(remap)
            out.append(remap[x])
        return cls(tuple(out))

    @property
    def n(self) -> int:
        return len(self.blocks)

    @property
    def k(self) -> int:
        return max(self.blocks) + 1 if self.blocks else 0

    def groups(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, b in enumerate(self.blocks):
            out[b].append(v)
        return out

    def __str__(self):
        return "|".join(",".join(map(str, g)) for g in self.groups())


def restricted_growth_strings(n: int, k: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """All RGS of length ``n`` in lexicographic order.

    With ``k`` given, only those using exactly ``k`` blocks.
    """
    if n == 0:
        if not k:
            yield ()
        return
    if k is not None and not 1 <= k <= n:
        return
    a = [0] * n

    def rec(i, top):
        # top = largest block id used in a[:i]
        if i == n:
            if k is None or top == k - 1:
                yield tuple(a)
            return
        remaining = n - i
        hi = top + 1
        if k is not None:
            hi = min(hi, k - 1)
            # must still be able to open the missing blocks
            if (k - 1 - top) > remaining:
                return
        for b in range(hi + 1):
            if k is not None and b <= top and (k - 1 - top) >= remaining:
                continue
            a[i] = b
            yield from rec(i + 1, max(top, b))

    a[0] = 0
    yield from rec(1, 0)
