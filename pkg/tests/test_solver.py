import pytest
from hypothesis import given, settings

from kcut.errors import BudgetExceeded, DisconnectedGraph
from kcut.graph import (
    Graph,
    bridges,
    complete,
    complete_bipartite,
    complete_minus_edge,
    cycle,
    path,
    petersen,
    random_tree,
    wheel,
)
from kcut.partitions import Partition
from kcut.solver import (
    crossing_edges,
    global_min_cut,
    lambda_all_k,
    lambda_k_bb,
    lambda_k_enumerate,
)

from conftest import brute_lambda, connected_graphs, graph_and_k, random_graphs


def test_crossing_edges_example():
    g = cycle(6)
    p = Partition.from_groups([[0, 1], [2, 3], [4, 5]])
    assert crossing_edges(g, p) == ((0, 5), (1, 2), (3, 4))
    with pytest.raises(ValueError):
        crossing_edges(g, Partition((0, 1)))


@pytest.mark.parametrize(
    "g, k, expected",
    [
        (cycle(6), 3, 3),
        (path(7), 4, 3),
        (complete(5), 3, 7),
        (wheel(7), 4, 7),
        (complete_minus_edge(6), 3, 8),
        (complete(6), 6, 15),
    ],
)
def test_known_values_both_methods(g, k, expected):
    assert lambda_k_enumerate(g, k)[0] == expected
    assert lambda_k_bb(g, k)[0] == expected


def test_petersen_lambda_3():
    # frozen from an edge-subset brute force; the value equals the fewest
    # edges isolating two vertices joined by an edge: 3 + 3 - 1
    g = petersen()
    assert brute_lambda(g, 3) == 5
    assert lambda_k_enumerate(g, 3)[0] == 5
    assert lambda_k_bb(g, 3)[0] == 5


def test_certificate_contents():
    v, cert = lambda_k_enumerate(cycle(6), 3)
    assert cert.component_count >= 3
    assert len(cert.removed) == v
    assert cert.partition.k == 3
    assert set(cert.removed) == set(crossing_edges(cycle(6), cert.partition))
    d = cert.to_dict()
    assert sorted(map(tuple, d["removed"])) == sorted(cert.removed)


@pytest.mark.parametrize("n", [4, 6, 9])
def test_k_equals_n_removes_everything(n):
    g = wheel(n)
    for fn in (lambda_k_enumerate, lambda_k_bb):
        v, cert = fn(g, n)
        assert v == g.m and cert.component_count == n


def test_k_equals_n_minus_one_merges_an_edge():
    g = petersen()
    v, cert = lambda_k_enumerate(g, 9)
    assert v == g.m - 1
    assert lambda_k_bb(g, 9)[1] == cert


def test_bad_arguments():
    with pytest.raises(ValueError):
        lambda_k_enumerate(cycle(5), 1)
    with pytest.raises(ValueError):
        lambda_k_bb(cycle(5), 6)
    with pytest.raises(DisconnectedGraph):
        lambda_k_enumerate(Graph(4, [(0, 1), (2, 3)]), 2)
    with pytest.raises(BudgetExceeded):
        lambda_k_enumerate(petersen(), 4, max_partitions=100)
    with pytest.raises(BudgetExceeded):
        lambda_k_bb(petersen(), 4, max_nodes=10)


def test_all_k_matches_single_k():
    g = wheel(7)
    table = lambda_all_k(g)
    for k in range(2, 8):
        v, cert = lambda_k_enumerate(g, k)
        assert table[k] == (v, cert.partition)


@pytest.mark.parametrize("seed", range(10))
def test_trees_need_k_minus_one(seed):
    t = random_tree(8, seed=seed)
    for k in range(2, 9):
        assert lambda_k_bb(t, k)[0] == k - 1


# -- properties ---------------------------------------------------------------

@settings(max_examples=150, deadline=None)
@given(graph_and_k(2, 7))
def test_matches_edge_subset_brute_force(gk):
    g, k = gk
    assert lambda_k_enumerate(g, k)[0] == brute_lambda(g, k)


@settings(max_examples=200, deadline=None)
@given(graph_and_k(2, 8))
def test_bb_agrees_and_certificates_are_valid(gk):
    g, k = gk
    v1, c1 = lambda_k_enumerate(g, k)
    v2, c2 = lambda_k_bb(g, k)
    assert v1 == v2
    assert c1.partition == c2.partition
    for v, cert in ((v1, c1), (v2, c2)):
        assert len(cert.removed) == v
        assert cert.component_count >= k
        assert set(cert.removed) <= set(g.edges)


@settings(max_examples=100, deadline=None)
@given(connected_graphs(2, 8))
def test_monotone_in_k_and_sandwiched(g):
    vals = {k: v for k, (v, _) in lambda_all_k(g).items()}
    n = g.n
    for k in range(2, n + 1):
        assert k - 1 <= vals[k] <= n * (n - 1) // 2 - (n - k + 1) * (n - k) // 2
        if k < n:
            assert vals[k] <= vals[k + 1]


@settings(max_examples=100, deadline=None)
@given(connected_graphs(3, 7))
def test_deleting_a_non_bridge_never_raises(g):
    vals = {k: v for k, (v, _) in lambda_all_k(g).items()}
    cut = bridges(g)
    for e in g.edges:
        if e in cut:
            continue
        sub = lambda_all_k(g.remove_edges([e]))
        for k, (v, _) in sub.items():
            assert v <= vals[k]


# -- global min cut --------------------------------------------------------------

def test_global_min_cut_examples():
    assert global_min_cut(complete(5)) == 4
    assert global_min_cut(complete_bipartite(2, 3)) == 2
    assert global_min_cut(petersen()) == 3
    assert global_min_cut(random_tree(9, seed=1)) == 1
    with pytest.raises(ValueError):
        global_min_cut(Graph(1))
    with pytest.raises(DisconnectedGraph):
        global_min_cut(Graph(3, [(0, 1)]))


def test_global_min_cut_vs_brute_force():
    for g in random_graphs(60, 2, 7, seed=11):
        assert global_min_cut(g) == brute_lambda(g, 2)
