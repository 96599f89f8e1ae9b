from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import strategies as st

from indpoly.graph import Graph
from indpoly.poly import Polynomial


def naive_poly(g: Graph) -> Polynomial:
    """Count stable sets by testing every vertex subset (n <= 14)."""
    assert g.n <= 14
    edges = g.edges()
    counts = [0] * (g.n + 1)
    for size in range(g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            chosen = set(subset)
            if not any(u in chosen and v in chosen for u, v in edges):
                counts[size] += 1
    return Polynomial(counts)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edge_list(n, edges)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edge_list(n, [e for e, keep in zip(pairs, bits) if keep])


@st.composite
def connected_graphs_st(draw, min_n: int = 1, max_n: int = 9):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=4, unique=True)) if pairs else []
    return Graph.from_edge_list(n, sorted(edges | set(extra)))


def relabel(g: Graph, perm) -> Graph:
    return Graph.from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


# Small hand-encoded graphs with known polynomials.

def pendant_examples() -> dict[str, Graph]:
    return {
        # C4 b-d-e-c plus a pendant on b
        "G1": Graph.from_edge_list(5, [(1, 3), (3, 4), (4, 2), (2, 1), (0, 1)]),
        # C4 with two pendants on one cycle vertex
        "G2": Graph.from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (0, 5)]),
        # paw
        "G3": Graph.from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
        # triangle with two pendants on one vertex
        "G4": Graph.from_edge_list(5, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]),
    }


def small_trees() -> dict[str, Graph]:
    return {
        "T1": Graph.from_edge_list(4, [(0, 1), (0, 2), (0, 3)]),
        # P4 with a pendant on each middle vertex
        "T2": Graph.from_edge_list(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]),
        # path a-b-c, two extra leaves on a and two on c
        "T3": Graph.from_edge_list(7, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)]),
    }


def t5() -> Graph:
    # path x-y-z with a pendant on y and one on z
    return Graph.from_edge_list(5, [(0, 1), (1, 2), (1, 3), (2, 4)])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(12345)
