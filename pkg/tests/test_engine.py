from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from indpoly.engine import (
    CONCRETE_STRATEGIES,
    ORACLE_MAX_N,
    OracleTooLargeError,
    Strategy,
    alternating_number,
    brute_force_poly,
    even_odd_counts,
    independence_poly,
    poly,
    stability_number,
    value_at,
)
from indpoly.families import w_star
from indpoly.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from indpoly.poly import Polynomial, cycle_poly, path_poly

from conftest import graphs, naive_poly, random_graph


@pytest.mark.parametrize("strategy", list(Strategy))
def test_small_known_polynomials(strategy):
    assert poly(Graph.empty(0), strategy) == Polynomial([1])
    assert poly(complete_graph(2), strategy) == Polynomial([1, 2])
    assert poly(complete_graph(5), strategy) == Polynomial([1, 5])
    assert poly(Graph.empty(3), strategy) == Polynomial([1, 3, 3, 1])
    assert poly(star_graph(3), strategy) == Polynomial([1, 4, 3, 1])


@pytest.mark.parametrize("strategy", CONCRETE_STRATEGIES)
@pytest.mark.parametrize("closed_forms", [True, False])
def test_strategies_match_oracle(strategy, closed_forms):
    rng = random.Random(2024)
    for _ in range(80):
        g = random_graph(rng, rng.randint(0, 12), rng.choice([0.15, 0.3, 0.5, 0.8]))
        assert poly(g, strategy, closed_forms=closed_forms) == brute_force_poly(g)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=11))
def test_oracle_matches_naive_enumeration(g):
    assert brute_force_poly(g) == naive_poly(g)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=12))
def test_engine_matches_oracle(g):
    assert poly(g) == brute_force_poly(g)


def test_paths_and_cycles_without_closed_forms():
    for n in range(1, 25):
        assert poly(path_graph(n), closed_forms=False) == path_poly(n)
    for n in range(3, 25):
        assert poly(cycle_graph(n), closed_forms=False) == cycle_poly(n)


def test_closed_form_counted_in_stats():
    _, stats = independence_poly(cycle_graph(30))
    assert stats.closed_form_hits == 1 and stats.recursion_nodes == 1
    _, stats = independence_poly(cycle_graph(30), closed_forms=False)
    assert stats.closed_form_hits >= 1 and stats.recursion_nodes > 1


def test_memo_shared_across_calls_and_strategies():
    memo: dict = {}
    g = w_star(4)
    first, _ = independence_poly(g, Strategy.VERTEX_MAX_DEGREE, memo=memo)
    again, stats = independence_poly(g, Strategy.EDGE_RECURSION, memo=memo)
    assert first == again
    assert stats.memo_hits >= 1


def test_memo_keys_are_isomorphism_invariant():
    memo: dict = {}
    independence_poly(Graph.from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)]), memo=memo)
    _, stats = independence_poly(Graph.from_edge_list(4, [(3, 2), (2, 1), (3, 1), (1, 0)]), memo=memo)
    assert stats.memo_hits == 1


def test_stats_render_is_stable():
    _, stats = independence_poly(star_graph(4), Strategy.PENDANT_NEIGHBOR_FIRST)
    text = stats.render()
    assert text.startswith("strategy=pendant-first nodes=")
    assert text == independence_poly(star_graph(4), Strategy.PENDANT_NEIGHBOR_FIRST)[1].render()


def test_larger_graph_strategies_agree():
    rng = random.Random(5)
    g = random_graph(rng, 30, 0.15)
    results = {s: poly(g, s) for s in CONCRETE_STRATEGIES}
    assert len(set(results.values())) == 1


def test_oracle_guard():
    with pytest.raises(OracleTooLargeError):
        brute_force_poly(Graph.empty(ORACLE_MAX_N + 1))


def test_value_helpers():
    g = cycle_graph(7)
    assert alternating_number(g) == 1
    assert value_at(g, 1) == 29
    f0, f1 = even_odd_counts(g)
    assert f0 - f1 == 1 and f0 + f1 == 29


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=12))
def test_stability_number_is_degree(g):
    assert stability_number(g) == poly(g).degree


def test_arbitrary_precision():
    # 60 isolated vertices: coefficients are binomials up to C(60,30)
    p = poly(Graph.empty(60))
    assert p[30] == 118264581564861424
    assert p(1) == 2**60
