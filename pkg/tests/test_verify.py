from __future__ import annotations

import pytest

from indpoly.analysis import cyclomatic_number, girth, is_well_covered
from indpoly.engine import alternating_number
from indpoly.formats import parse_graph6
from indpoly.graph import complete_graph, cycle_graph, path_graph
from indpoly import verify
from indpoly.verify import Failure, SuiteReport, Witness, run_suite


@pytest.mark.parametrize("n", range(0, 30))
def test_path_cycle_closed_forms_match_engine(n):
    assert verify.path_value_at_minus_one(n) == alternating_number(path_graph(n))
    if n >= 3:
        assert verify.cycle_value_at_minus_one(n) == alternating_number(cycle_graph(n))


def test_path_cycle_examples():
    assert verify.path_value_at_minus_one(10) == 0
    assert verify.cycle_value_at_minus_one(11) == 1
    assert verify.cycle_value_at_minus_one(6) == 2
    assert verify.cycle_value_at_minus_one(9) == -2
    assert verify.cycle_value_at_minus_one(7) == 1


def test_path_cycle_suite_small():
    report = verify.suite_lemma1(max_n=20, recurrence_n=5000)
    assert report.passed
    assert report.cases > 5000


def test_tree_suite_counts():
    report = verify.suite_theorem6(max_n=10)
    assert report.passed
    assert report.cases == sum([1, 1, 2, 3, 6, 11, 23, 47, 106])
    assert report.summary() == "theorem6: 200 trees, 0 failures"


def test_cyclomatic_suite_has_tight_witnesses():
    report = verify.suite_cyclomatic_bound(max_n=6)
    assert report.passed
    nus = set()
    for w in report.witnesses:
        g = parse_graph6(w.graph)
        assert abs(alternating_number(g)) == 1 << cyclomatic_number(g)
        nus.add(cyclomatic_number(g))
    assert {0, 1, 2} <= nus


def test_girth6_bases():
    bases = verify.girth6_bases(30, seed=4)
    assert len(bases) == 30
    assert all(b.is_connected() and girth(b) >= 6 for b in bases)
    assert bases == verify.girth6_bases(30, seed=4)


def test_small_unicyclic_graphs():
    graphs = verify.small_unicyclic_graphs()
    assert not is_well_covered(graphs["G1"])
    for name in ("G2", "G3", "G4"):
        assert is_well_covered(graphs[name])
        assert alternating_number(graphs[name]) in (-1, 0, 1)


def test_well_covered_suite_small():
    report = verify.suite_well_covered(max_n=7, seed=1, bases=20, tree_max=10)
    assert report.passed and report.cases > 0


def test_families_suite_small():
    report = verify.suite_families(seed=2, joins=30, transforms=5)
    assert report.passed, report.render()


def test_sharding_gives_identical_report():
    one = run_suite("theorem6", max_n=9, jobs=1)
    two = run_suite("theorem6", max_n=9, jobs=2)
    assert one == two
    a = verify.suite_families(seed=5, joins=20, transforms=4, jobs=1)
    b = verify.suite_families(seed=5, joins=20, transforms=4, jobs=2)
    assert a == b


def test_report_jsonl_round_trip():
    report = SuiteReport(
        "demo", 12, "checks",
        [Failure("case-a", "Bw", "0", "1")],
        [Witness("tight nu=1", "Bw", "value -2")],
        elapsed=3.5,
    )
    text = report.to_jsonl()
    back = SuiteReport.from_jsonl(text)
    assert back == report
    assert back.to_jsonl() == text
    assert not back.passed
    assert "FAIL case-a [Bw] expected 0, got 1" in report.render()


def test_report_rejects_bad_records():
    with pytest.raises(ValueError):
        SuiteReport.from_records([])
    good = SuiteReport("x", 1).to_records()
    with pytest.raises(ValueError):
        SuiteReport.from_records(good + [dict(good[0], status="weird", case="c")])


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
