"""Closed forms for lambda_k and the extremal classification."""

from __future__ import annotations

from enum import Enum
from math import comb

from .errors import TheoremViolation
from .graph import Graph, GraphFamily, bridges


class ExtremalClass(str, Enum):
    LOWER_TIGHT = "LowerTight"
    UPPER_TIGHT = "UpperTight"
    UPPER_MINUS_ONE = "UpperMinusOne"
    INTERIOR = "Interior"


def _check_k(n: int, k: int) -> None:
    if not 2 <= k <= n:
        raise ValueError(f"k must satisfy 2 <= k <= n={n}, got {k}")


def clique_upper_bound(n: int, k: int) -> int:
    """C(n,2) - C(n-k+1,2), the value of lambda_k on K_n."""
    return comb(n, 2) - comb(n - k + 1, 2)


def max_edges_with_k_components(n: int, k: int) -> int:
    """Most edges an n-vertex graph with at least k components can have."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return comb(n - k + 1, 2)


def lambda_range(n: int, k: int) -> tuple[int, int]:
    _check_k(n, k)
    return k - 1, clique_upper_bound(n, k)


def lambda_k_closed_form(family, n: int, k: int) -> int:
    """lambda_k for trees, cycles, wheels, K_n and K_n - e.

    ``family`` is a tag string or a :class:`GraphFamily`; paths and stars
    are trees.
    """
    tag = family.tag if isinstance(family, GraphFamily) else family
    GraphFamily(tag, n)  # validates tag and minimum order
    _check_k(n, k)
    if tag in ("tree", "path", "star"):
        return k - 1
    if tag == "cycle":
        return k
    if tag == "wheel":
        return 2 * k - 1 if k <= n - 1 else 2 * k - 2
    if tag == "complete":
        return clique_upper_bound(n, k)
    if tag == "complete-minus-edge":
        return clique_upper_bound(n, k) - 1
    raise ValueError(f"no closed form for {tag!r}")


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and g.is_connected()


def characterize_extremal(g: Graph, k: int, lam: int) -> ExtremalClass:
    """Classify ``lam = lambda_k(g)`` against the three characterized levels.

    * ``lam == k-1``  iff g has at least k-1 bridges;
    * ``lam == UB``   iff g is complete;
    * ``lam == UB-1`` iff g is K_n minus one edge;

    where UB = C(n,2) - C(n-k+1,2).  Every applicable equivalence is checked
    in both directions and a disagreement raises :class:`TheoremViolation`.
    When levels coincide (tiny n) the tag priority is UpperTight,
    UpperMinusOne, LowerTight.
    """
    n = g.n
    _check_k(n, k)
    lo, ub = lambda_range(n, k)
    problems = []
    if not lo <= lam <= ub:
        problems.append(f"lambda_{k}={lam} outside [{lo}, {ub}]")

    n_bridges = len(bridges(g))
    complete = g.m == comb(n, 2)
    minus_one = g.m == comb(n, 2) - 1
    if (lam == lo) != (n_bridges >= k - 1):
        problems.append(
            f"lambda_{k}={lam} vs lower level {lo}, but graph has {n_bridges} bridges"
        )
    if (lam == ub) != complete:
        problems.append(f"lambda_{k}={lam} vs upper level {ub}, complete={complete}")
    if (lam == ub - 1) != minus_one:
        problems.append(f"lambda_{k}={lam} vs level {ub - 1}, K_n-e={minus_one}")
    if not complete and not minus_one and lam > ub - 2:
        problems.append(f"lambda_{k}={lam} exceeds {ub - 2} for a graph that is neither K_n nor K_n-e")
    if problems:
        raise TheoremViolation(
            f"extremal characterization failed for n={n}, m={g.m}, k={k}: " + "; ".join(problems),
            details=problems,
        )

    if lam == ub:
        return ExtremalClass.UPPER_TIGHT
    if lam == ub - 1:
        return ExtremalClass.UPPER_MINUS_ONE
    if lam == lo:
        return ExtremalClass.LOWER_TIGHT
    return ExtremalClass.INTERIOR
