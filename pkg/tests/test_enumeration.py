from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings

from indpoly.analysis import cyclomatic_number
from indpoly.enumeration import (
    CONNECTED_GRAPH_COUNTS,
    FREE_TREE_COUNTS,
    canonical_form,
    canonical_relabel,
    connected_graphs,
    connected_graphs_with_nu,
    free_trees,
)
from indpoly.graph import Graph, GraphError, cycle_graph, path_graph

from conftest import graphs, relabel


# -- independent oracles ------------------------------------------------------

def prufer_trees(n: int):
    """All labelled trees on n >= 2 vertices by decoding every Pruefer sequence."""
    if n == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        edges = []
        for v in seq:
            leaf = min(u for u in range(n) if degree[u] == 1)
            edges.append((leaf, v))
            degree[leaf] -= 1
            degree[v] -= 1
        edges.append(tuple(u for u in range(n) if degree[u] == 1))
        yield edges


def ahu_code(n: int, edges) -> str:
    """Canonical string of a free tree: AHU encoding rooted at its centre(s)."""
    nbrs = {v: [] for v in range(n)}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    # peel leaves to find the centre
    remaining = set(range(n))
    layer = [v for v in range(n) if len(nbrs[v]) <= 1]
    degree = {v: len(nbrs[v]) for v in range(n)}
    while len(remaining) > 2:
        nxt = []
        for leaf in layer:
            remaining.discard(leaf)
            for u in nbrs[leaf]:
                if u in remaining:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt

    def encode(v, parent):
        return "(" + "".join(sorted(encode(u, v) for u in nbrs[v] if u != parent)) + ")"

    return min(encode(c, None) for c in remaining)


def perm_min_key(n: int, edges) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def connected_by_brute_force(n: int) -> int:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if not Graph.from_edge_list(n, edges).is_connected():
            continue
        seen.add(perm_min_key(n, edges))
    return len(seen)


# -- tests ---------------------------------------------------------------------

@pytest.mark.parametrize("n", range(2, 9))
def test_free_tree_count_matches_pruefer_dedup(n):
    classes = {ahu_code(n, edges) for edges in prufer_trees(n)}
    generated = [ahu_code(t.n, t.edges()) for t in free_trees(n)]
    assert len(generated) == len(set(generated)) == len(classes)
    assert set(generated) == classes


def test_free_tree_counts_to_16():
    for n in range(1, 17):
        assert sum(1 for _ in free_trees(n)) == FREE_TREE_COUNTS[n - 1]


@pytest.mark.parametrize("n", range(1, 11))
def test_free_trees_are_trees_and_distinct(n):
    keys = set()
    for t in free_trees(n):
        assert t.n == n and t.is_connected() and t.edge_count == n - 1
        keys.add(canonical_form(t))
    assert len(keys) == FREE_TREE_COUNTS[n - 1]


def test_free_trees_range():
    with pytest.raises(GraphError):
        list(free_trees(0))
    with pytest.raises(GraphError):
        list(free_trees(17))


@pytest.mark.parametrize("n", range(1, 6))
def test_connected_counts_match_edge_subset_oracle(n):
    assert sum(1 for _ in connected_graphs(n)) == connected_by_brute_force(n)


def test_connected_counts_to_8():
    for n in range(1, 9):
        graphs_n = list(connected_graphs(n))
        assert len(graphs_n) == CONNECTED_GRAPH_COUNTS[n - 1]
        assert all(g.n == n and g.is_connected() for g in graphs_n)
        assert len({canonical_form(g) for g in graphs_n}) == len(graphs_n)


def test_connected_with_nu():
    assert len(list(connected_graphs_with_nu(3, 1))) == 1
    assert len(list(connected_graphs_with_nu(4, 1))) == 2
    for n in range(1, 8):
        trees = {canonical_form(t) for t in free_trees(n)}
        assert {canonical_form(g) for g in connected_graphs_with_nu(n, 0)} == trees
        for g in connected_graphs_with_nu(n, 2):
            assert cyclomatic_number(g) == 2
    with pytest.raises(GraphError):
        list(connected_graphs(9))


def test_canonical_form_examples():
    p4 = path_graph(4)
    assert canonical_form(p4) == canonical_form(relabel(p4, [3, 2, 1, 0]))
    assert canonical_form(cycle_graph(4)) != canonical_form(p4)
    labelled = {canonical_form(Graph.from_edge_list(4, e)) for e in prufer_trees(4)}
    assert len(labelled) == 2
    with pytest.raises(GraphError):
        canonical_form(path_graph(11))
    assert len(canonical_form(path_graph(11), threshold=None)) == 1 + 7


def test_canonical_form_permutation_invariance():
    rng = random.Random(99)
    for _ in range(1000):
        n = rng.randint(1, 10)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        g = Graph.from_edge_list(n, edges)
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(g) == canonical_form(relabel(g, perm))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_canonical_form_separates_non_isomorphic(a, b):
    same = a.n == b.n and perm_min_key(a.n, a.edges()) == perm_min_key(b.n, b.edges())
    assert (canonical_form(a) == canonical_form(b)) == same


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_canonical_relabel_is_isomorphic_representative(g):
    r = canonical_relabel(g)
    assert canonical_form(r) == canonical_form(g)
    assert canonical_relabel(r) == r
