from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from indpoly.enumeration import connected_graphs, free_trees
from indpoly.formats import (
    FormatError,
    GraphDocument,
    graph6_str,
    iter_graph6,
    parse_edge_list,
    parse_graph6,
    parse_graphs,
    write_edge_list,
    write_graph6,
)
from indpoly.graph import Graph, GraphTooLargeError, complete_graph, cycle_graph, path_graph

from conftest import graphs, random_graph


def test_known_strings():
    assert graph6_str(Graph.empty(0)) == "?"
    assert graph6_str(Graph.empty(1)) == "@"
    assert graph6_str(complete_graph(2)) == "A_"
    assert graph6_str(path_graph(3)) == "Bg"
    assert graph6_str(complete_graph(3)) == "Bw"
    assert graph6_str(cycle_graph(4)) == "Cl"
    assert parse_graph6("D?{").edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert graph6_str(parse_graph6("D?{")) == "D?{"
    assert parse_graph6(">>graph6<<Bw\n") == complete_graph(3)


def test_matches_networkx_encoder():
    nx = pytest.importorskip("networkx")
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(0, 40)
        g = random_graph(rng, n, rng.random())
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges())
        expected = nx.to_graph6_bytes(h, header=False).strip()
        assert write_graph6(g) == expected
        back = nx.from_graph6_bytes(expected)
        assert sorted(tuple(sorted(e)) for e in back.edges()) == g.edges()


def test_round_trip_all_generated_graphs():
    total = 0
    for n in range(1, 9):
        for g in connected_graphs(n):
            text = write_graph6(g)
            assert write_graph6(parse_graph6(text)) == text
            assert parse_graph6(text) == g
            total += 1
    assert total == 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117


@pytest.mark.parametrize("n", [62, 63, 64])
def test_round_trip_at_size_boundaries(n):
    g = cycle_graph(n)
    text = write_graph6(g)
    assert (text[0] == 126) == (n >= 63)
    assert parse_graph6(text) == g


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=12))
def test_round_trip_property(g):
    assert parse_graph6(graph6_str(g)) == g
    assert parse_edge_list(write_edge_list(g)) == g


@pytest.mark.parametrize(
    "bad",
    ["", "B", "Bx", "Bww", "B\x7f", "A ", "~?", "Aé"],
)
def test_graph6_errors(bad):
    with pytest.raises(FormatError):
        parse_graph6(bad.rstrip() if bad == "A " else bad)


def test_graph6_over_cap():
    text = graph6_str(path_graph(64))
    with pytest.raises(GraphTooLargeError):
        parse_graph6(text, cap=63)


def test_iter_graph6_skips_blank_lines():
    stream = ["Bw\n", "\n", "@", "  "]
    assert list(iter_graph6(stream)) == [complete_graph(3), Graph.empty(1)]


def test_edge_list_format():
    g = cycle_graph(4)
    assert write_edge_list(g) == "n 4\n0 1\n0 3\n1 2\n2 3\n"
    text = "# a square\nn 4\n0 1  # first\n\n1 2\n2 3\n3 0\n"
    assert parse_edge_list(text) == g


def test_edge_list_random_round_trip():
    rng = random.Random(17)
    for _ in range(100):
        g = random_graph(rng, rng.randint(0, 20), 0.3)
        assert parse_edge_list(write_edge_list(g)) == g


@pytest.mark.parametrize(
    "bad",
    ["", "n x\n", "m 3\n", "n 3\n0\n", "n 3\n0 a\n", "n 3\n0 3\n", "n 3\n1 1\n"],
)
def test_edge_list_errors(bad):
    with pytest.raises(FormatError):
        parse_edge_list(bad)


def test_parse_graphs_detects_format():
    docs = parse_graphs("n 2\n0 1\n")
    assert docs == [GraphDocument("edge-list", complete_graph(2))]
    docs = parse_graphs("Bw\nA_\n")
    assert [d.source_format for d in docs] == ["graph6", "graph6"]
    assert docs[1].serialize() == "A_\n"
    assert parse_graphs("") == []


def test_tree_stream_is_deterministic():
    first = [graph6_str(t) for t in free_trees(10)]
    assert first == [graph6_str(t) for t in free_trees(10)]
