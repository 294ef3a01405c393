import io

import networkx as nx
import pytest

from kcut.errors import ParseError, TheoremViolation
from kcut.extremal import (
    ExtremalTable,
    Row,
    canonical_form,
    enumerate_connected_labeled,
    enumerate_connected_unlabeled,
    f_table,
    ingest_graph6_stream,
    verify_f_bounds,
)
from kcut.graph import Graph, cycle, path
from kcut.io import parse_graph6, to_graph6

from conftest import brute_lambda, from_nx, to_nx


def atlas_connected(n):
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n and nx.is_connected(g)]


# OEIS A001187 (labeled) and A001349 (unlabeled) connected graphs
LABELED = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704}
UNLABELED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@pytest.mark.parametrize("n", range(1, 7))
def test_labeled_counts(n):
    graphs = list(enumerate_connected_labeled(n))
    assert len(graphs) == LABELED[n]
    assert len(set(graphs)) == len(graphs)
    assert all(g.is_connected() for g in graphs)


@pytest.mark.parametrize("n", range(1, 7))
def test_unlabeled_counts_match_atlas(n):
    ours = list(enumerate_connected_unlabeled(n))
    assert len(ours) == UNLABELED[n] == len(atlas_connected(n))
    # one representative per class
    for g in ours:
        assert canonical_form(g) == g


def test_unlabeled_count_order_7():
    assert sum(1 for _ in enumerate_connected_unlabeled(7)) == UNLABELED[7]


def test_canonical_form_is_invariant():
    g = parse_graph6("E}lw")
    h = nx.relabel_nodes(to_nx(g), {0: 3, 1: 5, 2: 0, 3: 1, 4: 2, 5: 4})
    assert canonical_form(from_nx(h)) == canonical_form(g)
    assert canonical_form(cycle(6)) != canonical_form(Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]))


def test_limits():
    with pytest.raises(ValueError):
        next(enumerate_connected_labeled(8))
    with pytest.raises(ValueError):
        next(enumerate_connected_unlabeled(9))


def test_stream_ingestion():
    text = io.StringIO("Bw\nBW\n\nBo\n")
    graphs = list(ingest_graph6_stream(text, n=3))
    assert [g.m for g in graphs] == [3, 2, 2]
    assert list(ingest_graph6_stream([])) == []


def test_stream_errors():
    with pytest.raises(ParseError) as info:
        list(ingest_graph6_stream(["Bw", "B!"]))
    assert info.value.line == 2
    with pytest.raises(ValueError):
        list(ingest_graph6_stream(["Bw", "C~"], n=3))


def test_f_table_from_path(tmp_path):
    p = tmp_path / "g4.g6"
    p.write_text("\n".join(to_graph6(from_nx(h)) for h in atlas_connected(4)) + "\n")
    table = f_table(4, 3, str(p))
    assert {t: r.f for t, r in table.rows.items()} == {2: 3, 3: 4, 4: 5, 5: 6}
    assert table.graphs_seen == 6


def test_f_row_order_6_k_3():
    # regression constant from an independent edge-subset brute force over
    # the networkx atlas: {t: fewest edges}
    expected = {2: 5, 3: 6, 4: 8, 5: 9, 6: 11, 7: 12, 8: 14, 9: 15}
    table = f_table(6, 3)
    assert {t: r.f for t, r in table.rows.items()} == expected


def test_witnesses_realise_their_rows():
    table = f_table(5, 3)
    for t, row in table.rows.items():
        g = parse_graph6(row.witness)
        assert g.m == row.f and g.is_connected()
        assert brute_lambda(g, 3) == t


def test_labeled_and_isomorph_free_agree():
    atlas = [from_nx(h) for h in atlas_connected(5)]
    for k in range(2, 6):
        a = f_table(5, k)
        b = f_table(5, k, atlas)
        c = f_table(5, k, enumerate_connected_unlabeled(5))
        assert {t: r.f for t, r in a.rows.items()} == {t: r.f for t, r in b.rows.items()}
        assert {t: r.f for t, r in a.rows.items()} == {t: r.f for t, r in c.rows.items()}


def test_workers_do_not_change_the_table():
    assert f_table(5, 3, workers=2).to_dict() == f_table(5, 3).to_dict()


def test_universe_order_is_checked():
    with pytest.raises(ValueError):
        f_table(4, 2, [path(5)])
    with pytest.raises(ValueError):
        f_table(4, 5)


def test_csv_layout():
    text = f_table(4, 2).to_csv().splitlines()
    assert text[0] == "t,f,witness_graph6,lower_tight,upper_tight"
    assert text[1] == "1,3,CF,true,false"
    assert len(text) == 4


def test_verify_reports_infeasible_rows_and_drops():
    # n=6, k=3: t in [2, 9], lower n-k+t, upper 6+t, exact rows 2, 3, 8, 9
    f = {2: 5, 3: 6, 4: None, 5: 10, 6: 9, 7: 11, 8: 14, 9: 15}
    rows = {t: Row(v, None if v is None else "w") for t, v in f.items()}
    found = verify_f_bounds(ExtremalTable(6, 3, rows))
    assert [(x.t, x.kind) for x in found] == [(4, "info"), (6, "info")]
    rows[8] = Row(13, "w")
    with pytest.raises(TheoremViolation):
        verify_f_bounds(ExtremalTable(6, 3, rows))


def test_verify_strict_raises():
    table = f_table(4, 2)
    with pytest.raises(TheoremViolation):
        verify_f_bounds(table)
    assert [f.t for f in verify_f_bounds(table, strict=False) if f.kind == "violation"] == [2]
