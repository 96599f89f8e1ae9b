from __future__ import annotations

import pytest

from indpoly.analysis import cyclomatic_number
from indpoly.engine import alternating_number, brute_force_poly
from indpoly.graph import GraphError, path_graph
from indpoly.poly import eval_int
from indpoly.search import Status, coverage_table, minimize_witness, render_coverage, search


def check_witness(result):
    g = result.witness
    assert g is not None and g.is_connected()
    assert cyclomatic_number(g) == result.nu
    assert alternating_number(g) == result.q


def test_trivial_target():
    r = search(0, 1)
    assert r.status is Status.FOUND_WITNESS
    check_witness(r)


@pytest.mark.parametrize("nu", [0, 1, 2])
def test_small_coverage_complete(nu):
    table = coverage_table(nu)
    assert sorted(table) == list(range(-(1 << nu), (1 << nu) + 1))
    for r in table.values():
        assert r.found
        if r.status is Status.FOUND_WITNESS:
            check_witness(r)
    text = render_coverage(nu, table)
    assert text.endswith("missing: none")


def test_nu3_five_uses_fig22():
    r = search(3, 5)
    assert r.status is Status.FOUND_WITNESS and r.construction == "fig22g()"
    check_witness(r)
    r = search(3, -5)
    assert r.construction == "h1(fig22g())"
    check_witness(r)


def test_deterministic():
    a, b = search(4, 11, seed=3), search(4, 11, seed=3)
    assert a == b and a.render() == b.render()


def test_invalid_target():
    with pytest.raises(GraphError):
        search(2, 5)
    with pytest.raises(GraphError):
        search(-1, 0)


def test_found_identity_over_cap():
    r = search(3, -5, cap=12)
    assert r.status is Status.FOUND_IDENTITY
    assert r.witness is None and r.found
    assert "FoundIdentity" in r.render()


def test_not_found_within_budget():
    r = search(5, 27, budget=2000)
    assert r.status is Status.NOT_FOUND and not r.found
    assert r.budget_spent >= r.budget
    assert r.render() == "nu=5 q=27: NotFoundWithinBudget (spent 2000 of 2000)"


def test_nu4_eleven_is_verified_by_brute_force():
    r = search(4, 11)
    assert r.status is Status.FOUND_WITNESS
    check_witness(r)
    assert eval_int(brute_force_poly(r.witness), -1) == 11


def test_minimize_witness_prunes_pendant_paths():
    g = path_graph(7)
    small = minimize_witness(g, 0, alternating_number(g))
    assert alternating_number(small) == alternating_number(g)
    assert small.n <= g.n
