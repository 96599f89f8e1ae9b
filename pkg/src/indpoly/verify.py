"""Theorem suites: each sweeps a graph stream and compares engine output with a
stated identity, collecting any counterexamples.

Work is sharded over processes with ``jobs > 1``; per-item results are merged
in stream order, so reports do not depend on the number of workers.
"""
from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from . import families as fam
from .analysis import corona_decompose, cyclomatic_number, dependent_set_balance, girth, is_well_covered
from .engine import Strategy, alternating_number, poly
from .enumeration import connected_graphs, connected_graphs_with_nu, free_trees
from .formats import graph6_str
from .graph import Graph, complete_graph, complete_multipartite, cycle_graph, path_graph
from .poly import ONE, X, cycle_poly, equal_multipartite_poly, eval_int, linear, path_poly

SUITE_NAMES = ("lemma1", "theorem6", "cyclomatic", "wellcovered", "families")

# Vertex cap for the prime-factor sweep: the chain for the prime 47 alone
# has 138 vertices.
PRIME_CAP = 256


@dataclass(frozen=True)
class Failure:
    case: str
    graph: str
    expected: str
    got: str


@dataclass(frozen=True)
class Witness:
    case: str
    graph: str
    note: str


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    unit: str = "cases"
    failures: list[Failure] = field(default_factory=list)
    witnesses: list[Witness] = field(default_factory=list)
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        return f"{self.suite}: {self.cases} {self.unit}, {len(self.failures)} failures"

    def render(self) -> str:
        lines = [self.summary()]
        for f in self.failures:
            lines.append(f"  FAIL {f.case} [{f.graph}] expected {f.expected}, got {f.got}")
        for w in self.witnesses:
            lines.append(f"  witness {w.case} [{w.graph}] {w.note}")
        return "\n".join(lines)

    def to_records(self) -> list[dict]:
        records = [
            {"suite": self.suite, "case": f.case, "graph": f.graph,
             "expected": f.expected, "got": f.got, "status": "fail"}
            for f in self.failures
        ]
        records += [
            {"suite": self.suite, "case": w.case, "graph": w.graph,
             "expected": w.note, "got": w.note, "status": "witness"}
            for w in self.witnesses
        ]
        records.append(
            {"suite": self.suite, "case": "summary", "graph": "", "expected": self.unit,
             "got": str(self.cases), "status": "pass" if self.passed else "fail"}
        )
        return records

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in self.to_records())

    @classmethod
    def from_records(cls, records: Iterable[dict]) -> "SuiteReport":
        records = list(records)
        summary = [r for r in records if r["status"] in ("pass", "fail") and r["case"] == "summary"]
        if len(summary) != 1:
            raise ValueError("expected exactly one summary record")
        s = summary[0]
        report = cls(s["suite"], int(s["got"]), s["expected"])
        for r in records:
            if r is s:
                continue
            if r["suite"] != report.suite:
                raise ValueError("records from more than one suite")
            if r["status"] == "fail":
                report.failures.append(Failure(r["case"], r["graph"], r["expected"], r["got"]))
            elif r["status"] == "witness":
                report.witnesses.append(Witness(r["case"], r["graph"], r["expected"]))
            else:
                raise ValueError(f"unknown status {r['status']!r}")
        return report

    @classmethod
    def from_jsonl(cls, text: str) -> "SuiteReport":
        return cls.from_records(json.loads(line) for line in text.splitlines() if line.strip())


@dataclass
class _Partial:
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    witnesses: list[Witness] = field(default_factory=list)

    def check(self, ok: bool, case: str, g: Graph, expected, got) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(Failure(case, graph6_str(g), str(expected), str(got)))

    def witness(self, case: str, g: Graph, note: str) -> None:
        self.witnesses.append(Witness(case, graph6_str(g), note))

    def merge(self, other: "_Partial") -> None:
        self.cases += other.cases
        self.failures += other.failures
        self.witnesses += other.witnesses


def _run_sharded(fn: Callable[[object], _Partial], items: Sequence, jobs: int) -> _Partial:
    total = _Partial()
    if jobs <= 1 or len(items) < 2:
        for item in items:
            total.merge(fn(item))
        return total
    chunk = max(1, len(items) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(fn, items, chunksize=chunk):
            total.merge(part)
    return total


def _finish(name: str, unit: str, part: _Partial, start: float, cases: Optional[int] = None) -> SuiteReport:
    return SuiteReport(
        name,
        part.cases if cases is None else cases,
        unit,
        part.failures,
        part.witnesses,
        time.perf_counter() - start,
    )


# -- paths and cycles ---------------------------------------------------------

def path_value_at_minus_one(n: int) -> int:
    """The printed closed form for ``I(P_n;-1)``."""
    k, r = divmod(n + 2, 3)
    return 0 if r == 0 else (-1) ** k


def cycle_value_at_minus_one(n: int) -> int:
    k, r = divmod(n, 3)
    if r == 0:
        return 2 * (-1) ** k
    if r == 1:
        return (-1) ** k
    return (-1) ** (k + 1)


def _lemma1_small(n: int) -> _Partial:
    part = _Partial()
    p = path_graph(n)
    got = poly(p, Strategy.VERTEX_MAX_DEGREE, closed_forms=False)
    part.check(got == path_poly(n), f"P{n} polynomial", p, path_poly(n), got)
    part.check(eval_int(got, -1) == path_value_at_minus_one(n), f"P{n} at -1", p,
               path_value_at_minus_one(n), eval_int(got, -1))
    if n >= 3:
        c = cycle_graph(n)
        got = poly(c, Strategy.VERTEX_MAX_DEGREE, closed_forms=False)
        part.check(got == cycle_poly(n), f"C{n} polynomial", c, cycle_poly(n), got)
        part.check(eval_int(got, -1) == cycle_value_at_minus_one(n), f"C{n} at -1", c,
                   cycle_value_at_minus_one(n), eval_int(got, -1))
    return part


def suite_lemma1(max_n: int = 40, recurrence_n: int = 10**6, jobs: int = 1) -> SuiteReport:
    """Full polynomials for ``n <= min(max_n, 40)``; integer recurrence at -1
    (``P_k = P_{k-1} - P_{k-2}`` and ``C_n = P_{n-1} - P_{n-3}``) up to
    ``recurrence_n``, both compared with the closed forms by residue mod 3."""
    if max_n < 3:
        raise ValueError("max_n must be at least 3")
    start = time.perf_counter()
    part = _run_sharded(_lemma1_small, list(range(1, min(max_n, 40) + 1)), jobs)
    # rolling window: a, b, c = I(P_{n-3};-1), I(P_{n-2};-1), I(P_{n-1};-1),
    # seeded with the Fibonacci convention I(P_{-1}) = I(P_0) = 1
    a, b, c = 0, 1, 1
    mismatches = 0
    first_bad = None
    for n in range(1, recurrence_n + 1):
        if n >= 3:
            # I(C_n) = I(P_{n-1}) + x I(P_{n-3})
            if c - a != cycle_value_at_minus_one(n):
                mismatches += 1
                first_bad = first_bad or f"C{n}"
        a, b, c = b, c, c - b
        if c != path_value_at_minus_one(n):
            mismatches += 1
            first_bad = first_bad or f"P{n}"
    recurrence_cases = 2 * recurrence_n - 2 if recurrence_n >= 3 else recurrence_n
    part.cases += recurrence_cases
    if mismatches:
        part.failures.append(Failure(
            f"recurrence to n={recurrence_n}", "", "0 mismatches",
            f"{mismatches} mismatches, first at {first_bad}",
        ))
    return _finish("lemma1", "cases", part, start)


# -- trees --------------------------------------------------------------------

def _tree_case(t: Graph) -> _Partial:
    part = _Partial()
    n = t.n
    value = alternating_number(t)
    part.check(value in (-1, 0, 1), f"tree n={n} value", t, "in {-1,0,1}", value)
    q_even, q_odd = dependent_set_balance(t)
    part.check(abs(q_even - q_odd) <= 1, f"tree n={n} dependent balance", t,
               "|q_even - q_odd| <= 1", f"{q_even} vs {q_odd}")
    for v in range(n):
        minus_v = alternating_number(t.delete_vertices((v,)))
        minus_nv = alternating_number(t.delete_closed_neighborhood(v))
        part.check(minus_v * minus_nv in (0, 1), f"tree n={n} v={v} I(T-v)I(T-N[v])", t,
                   "in {0,1}", minus_v * minus_nv)
        part.check(value * minus_v in (0, 1), f"tree n={n} v={v} I(T)I(T-v)", t,
                   "in {0,1}", value * minus_v)
    return part


def _tree_order(n: int) -> _Partial:
    part = _Partial()
    for t in free_trees(n):
        part.merge(_tree_case(t))
    return part


def suite_theorem6(max_n: int = 14, jobs: int = 1) -> SuiteReport:
    """Every free tree of order ``2..max_n``: value in ``{-1,0,1}``, dependent
    sets balanced by parity, and the two vertex-deletion products in ``{0,1}``.

    The reported count is the number of trees swept.
    """
    if not 2 <= max_n <= 16:
        raise ValueError("max_n must be in 2..16")
    start = time.perf_counter()
    trees = [t for n in range(2, max_n + 1) for t in free_trees(n)]
    part = _run_sharded(_tree_case, trees, jobs)
    return _finish("theorem6", "trees", part, start, cases=len(trees))


# -- cyclomatic bound ---------------------------------------------------------

def _bound_case(g: Graph) -> _Partial:
    part = _Partial()
    nu = cyclomatic_number(g)
    value = alternating_number(g)
    part.check(abs(value) <= 1 << nu, f"n={g.n} nu={nu}", g, f"|I| <= {1 << nu}", value)
    if abs(value) == 1 << nu:
        part.witness(f"tight nu={nu}", g, f"nu={nu} value={value}")
    return part


def suite_cyclomatic_bound(
    max_n: int = 8, jobs: int = 1, graphs: Optional[Iterable[Graph]] = None
) -> SuiteReport:
    """``|I(G;-1)| <= 2^nu(G)`` on every connected graph of order ``<= max_n``
    (or on ``graphs`` when given), plus ``qK3`` for ``q = 1..4``.

    The first graph attaining the bound for each cyclomatic number is kept
    as a tightness witness.
    """
    start = time.perf_counter()
    stream = [fam.q_triangles(q) for q in range(1, 5)]
    if graphs is None:
        stream += [g for n in range(1, max_n + 1) for g in connected_graphs(n)]
    else:
        stream += list(graphs)
    part = _run_sharded(_bound_case, stream, jobs)
    first: dict[str, Witness] = {}
    for w in part.witnesses:
        first.setdefault(w.case, w)
    part.witnesses = sorted(first.values(), key=lambda w: int(w.case.split("=")[1]))
    return _finish("cyclomatic", "graphs", part, start)


# -- well-covered graphs ------------------------------------------------------

def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform labelled tree on ``n`` vertices via a Pruefer sequence."""
    if n <= 2:
        return path_graph(n) if n else Graph.empty(0)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph.from_edge_list(n, edges)


def random_connected_graph(rng: random.Random, n: int, extra: int) -> Graph:
    """Random tree on ``n`` vertices plus up to ``extra`` further edges."""
    t = random_tree(rng, n)
    edges = set(t.edges())
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    rng.shuffle(missing)
    return Graph.from_edge_list(n, sorted(edges) + missing[:extra])


def subdivide(g: Graph, times: int) -> Graph:
    """Replace each edge by a path with ``times`` interior vertices."""
    edges = []
    nxt = g.n
    for u, v in g.edges():
        chain = [u] + list(range(nxt, nxt + times)) + [v]
        nxt += times
        edges += list(zip(chain, chain[1:]))
    return Graph.from_edge_list(nxt, edges)


def girth6_bases(count: int = 100, seed: int = 0) -> list[Graph]:
    """Seeded connected bases of girth at least 6, at most 14 vertices each:
    random trees, cycles ``C_6..C_14`` and doubly subdivided small graphs."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        kind = i % 3
        if kind == 0:
            g = random_tree(rng, rng.randint(2, 14))
        elif kind == 1:
            g = cycle_graph(rng.randint(6, 14))
        else:
            g = subdivide(random_connected_graph(rng, rng.randint(3, 4), rng.randint(0, 1)), 2)
        out.append(g)
    return out


def small_unicyclic_graphs() -> dict[str, Graph]:
    """The four small unicyclic graphs: a paw, ``K3`` plus an isolated vertex,
    a triangle with a two-edge tail and the corona of ``K3``."""
    return {
        "G1": Graph.from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
        "G2": fam.disjoint_union([complete_graph(3), Graph.empty(1)]),
        "G3": Graph.from_edge_list(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]),
        "G4": fam.corona_k1(complete_graph(3)),
    }


def _corona_base_case(base: Graph) -> _Partial:
    part = _Partial()
    g = fam.corona_k1(base)
    ok_base = base.is_connected() and girth(base) >= 6
    part.check(ok_base, "girth>=6 base", base, "connected, girth >= 6", f"girth {girth(base)}")
    value = alternating_number(g)
    part.check(value == 0, f"corona of base n={base.n}", g, 0, value)
    part.check(is_well_covered(g), f"corona of base n={base.n} well-covered", g, True, False)
    return part


def _unicyclic_case(g: Graph) -> _Partial:
    part = _Partial()
    if not is_well_covered(g):
        return part
    value = alternating_number(g)
    if g.n == 3:
        part.check(value == -2, "C3 excluded", g, -2, value)
    else:
        part.check(value in (-1, 0, 1), f"well-covered unicyclic n={g.n}", g, "in {-1,0,1}", value)
    return part


def _is_matching_cover(g: Graph) -> bool:
    # qK2 with q >= 1
    return g.n > 0 and all(row and not row & (row - 1) for row in g.adj)


def _well_covered_tree_case(t: Graph) -> _Partial:
    part = _Partial()
    if not is_well_covered(t):
        return part
    n = t.n
    part.check(corona_decompose(t) is not None, f"tree n={n} corona shape", t, "corona", "none")
    part.check(alternating_number(t) == 0, f"tree n={n} value", t, 0, alternating_number(t))
    for v in range(n):
        rest = t.delete_closed_neighborhood(v)
        if _is_matching_cover(rest):
            continue
        a = alternating_number(t.delete_vertices((v,)))
        b = alternating_number(rest)
        part.check(a == 0 and b == 0, f"tree n={n} v={v} (i)", t, "0, 0", f"{a}, {b}")
    for u, v in t.edges():
        a = alternating_number(t.delete_edge(u, v))
        part.check(a == 0, f"tree n={n} edge {u}-{v} (ii)", t, 0, a)
        b = alternating_number(t.delete_edge_neighborhoods(u, v))
        part.check(b == 0, f"tree n={n} edge {u}-{v} (iii)", t, 0, b)
    return part


def suite_well_covered(
    max_n: int = 8, seed: int = 0, bases: int = 100, tree_max: int = 14, jobs: int = 1
) -> SuiteReport:
    """Coronas of girth-6 bases vanish at -1; well-covered unicyclic graphs
    other than ``C3`` take values in ``{-1,0,1}``; the edge and vertex
    identities for well-covered trees of order ``6..tree_max``."""
    start = time.perf_counter()
    part = _run_sharded(_corona_base_case, girth6_bases(bases, seed), jobs)
    unicyclic = [g for n in range(3, max_n + 1) for g in connected_graphs_with_nu(n, 1)]
    part.merge(_run_sharded(_unicyclic_case, unicyclic, jobs))
    trees = [t for n in range(6, tree_max + 1, 2) for t in free_trees(n)]
    part.merge(_run_sharded(_well_covered_tree_case, trees, jobs))
    for name, g in small_unicyclic_graphs().items():
        wc = is_well_covered(g)
        part.check(wc == (name != "G1"), f"unicyclic sample {name} well-covered", g, name != "G1", wc)
        if wc:
            value = alternating_number(g)
            part.check(value in (-1, 0, 1), f"unicyclic sample {name} value", g, "in {-1,0,1}", value)
    return _finish("wellcovered", "checks", part, start)


# -- family identities --------------------------------------------------------

def _value_nu(g: Graph) -> tuple[int, int]:
    return alternating_number(g), cyclomatic_number(g)


def _join_case(args: tuple[int, int]) -> _Partial:
    seed, index = args
    rng = random.Random(seed * 1_000_003 + index)
    part = _Partial()
    children = []
    for _ in range(rng.randint(2, 4)):
        n = rng.randint(1, 7)
        g = random_connected_graph(rng, n, rng.randint(0, 3))
        children.append((g, rng.randrange(n)))
    h = fam.join_vertex(children)
    prod_a = prod_b = 1
    nu_sum = 0
    for g, anchor in children:
        prod_a *= alternating_number(g)
        prod_b *= alternating_number(g.delete_vertices((anchor,)))
        nu_sum += cyclomatic_number(g)
    value, nu = _value_nu(h)
    part.check(value == prod_a - prod_b, f"join #{index} value", h, prod_a - prod_b, value)
    part.check(nu == nu_sum, f"join #{index} nu", h, nu_sum, nu)
    return part


def _transform_case(args: tuple[int, int]) -> _Partial:
    seed, index = args
    rng = random.Random(seed * 1_000_003 + 500_000 + index)
    part = _Partial()
    n = rng.randint(1, 8)
    g = random_connected_graph(rng, n, rng.randint(0, 4))
    anchor = rng.randrange(n)
    value, nu = _value_nu(g)
    h = fam.transform_h1(g, anchor)
    part.check(_value_nu(h) == (-value, nu), f"h1 #{index}", h, (-value, nu), _value_nu(h))
    h = fam.transform_h1(h, 0)
    part.check(_value_nu(h) == (value, nu), f"h1 twice #{index}", h, (value, nu), _value_nu(h))
    h = fam.transform_h2(g, anchor)
    part.check(_value_nu(h) == (value, nu + 1), f"h2 #{index}", h, (value, nu + 1), _value_nu(h))
    for k in range(1, 5):
        h = fam.transform_h3(g, anchor, k)
        want = ((-1) ** k * k * value, nu + k - 1)
        part.check(_value_nu(h) == want, f"h3 k={k} #{index}", h, want, _value_nu(h))
    return part


def _lchain_checks(part: _Partial) -> None:
    prev2, prev1 = ONE, poly(fam.l_chain(1))
    part.check(prev1 == linear(1, 3), "L1 polynomial", fam.l_chain(1), "1 + 3x", prev1)
    triangle = linear(1, 3)
    for s in range(1, 11):
        g = fam.l_chain(s)
        value, nu = _value_nu(g)
        want = ((s + 1) * (-1) ** s, s)
        part.check((value, nu) == want, f"L{s} value, nu", g, want, (value, nu))
        if s >= 2:
            p = poly(g)
            expect = triangle * prev1 - prev2.shift(2)
            part.check(p == expect, f"L{s} recurrence", g, expect, p)
            prev2, prev1 = prev1, p


def _wstar_checks(part: _Partial) -> None:
    for q in range(2, 7):
        g = fam.w_star(q)
        p = poly(g)
        expect = linear(1, 3) ** q + (linear(1, 2) ** q).shift(1)
        part.check(p == expect, f"W{q} polynomial", g, expect, p)
        value, nu = _value_nu(g)
        want = ((-1) ** q * ((1 << q) - 1), q)
        part.check((value, nu) == want, f"W{q} value, nu", g, want, (value, nu))


def _paired_family_checks(part: _Partial) -> None:
    for nu in range(0, 7):
        for q in range(0, nu + 1):
            g1 = fam.lemma4_g1(nu, q)
            want = ((-1) ** (q + 1) * (1 << q), nu)
            part.check(_value_nu(g1) == want and g1.is_connected(),
                       f"lemma4 G1 nu={nu} q={q}", g1, want, _value_nu(g1))
            g2 = fam.lemma4_g2(nu, q)
            want = ((-1) ** q * ((1 << q) - 1), nu)
            part.check(_value_nu(g2) == want and g2.is_connected(),
                       f"lemma4 G2 nu={nu} q={q}", g2, want, _value_nu(g2))


def _prime_checks(part: _Partial) -> None:
    for q in range(1, 51):
        g = fam.prime_factor(q, cap=PRIME_CAP)
        want = (q, sum(p - 1 for p in fam.prime_factors(q)))
        part.check(_value_nu(g) == want and g.is_connected(),
                   f"primefactor {q}", g, want, _value_nu(g))
    for attach in ([1], [1, 1, 2], [1, 1, 2, 3], [4, 6]):
        g = fam.chain_product(attach)
        size = 1
        for s in attach:
            size *= s + 1
        value, nu = _value_nu(g)
        part.check((abs(value), nu) == (size, sum(attach)), f"chainprod {attach}", g,
                   (size, sum(attach)), (abs(value), nu))


def _misc_checks(part: _Partial, rng: random.Random) -> None:
    p3 = path_poly(3)
    for n in range(4, 21):
        g = fam.cycle_with_tail(n)
        p = poly(g)
        expect = p3 * cycle_poly(n) - (path_poly(n - 3) * linear(1, 1)).shift(2)
        part.check(p == expect, f"cycletail {n} polynomial", g, expect, p)
        value = eval_int(p, -1)
        part.check(value == -cycle_value_at_minus_one(n), f"cycletail {n} value", g,
                   -cycle_value_at_minus_one(n), value)
    g = fam.fig22_g()
    want = (5, 3)
    part.check(_value_nu(g) == want, "fig22g value, nu", g, want, _value_nu(g))
    k2, k3 = linear(1, 2), linear(1, 3)
    expect = k2 * k3 * k3 * p3 + (k2 ** 3).shift(1)
    part.check(poly(g) == expect, "fig22g factorization", g, expect, poly(g))
    minus = g.delete_vertices((fam.FIG22_G_PIVOT,))
    expect = k2 * k3 * k3 * p3
    part.check(poly(minus) == expect, "fig22g minus pivot", minus, expect, poly(minus))
    for q in range(1, 6):
        g = fam.q_triangles(q)
        part.check(alternating_number(g) == (-2) ** q, f"{q}K3 value", g, (-2) ** q,
                   alternating_number(g))
    for i in range(20):
        a = random_connected_graph(rng, rng.randint(1, 6), rng.randint(0, 3))
        b = random_connected_graph(rng, rng.randint(1, 6), rng.randint(0, 3))
        z = fam.zykov_sum(a, b)
        expect = poly(a) + poly(b) - 1
        part.check(poly(z) == expect, f"zykov #{i}", z, expect, poly(z))
    for parts_ in range(1, 5):
        for size in range(1, 5):
            g = complete_multipartite([size] * parts_)
            expect = equal_multipartite_poly(parts_, size)
            part.check(poly(g) == expect, f"K({parts_}x{size})", g, expect, poly(g))
    for i in range(20):
        h = random_connected_graph(rng, rng.randint(2, 10), rng.randint(0, 4))
        g = fam.corona_k1(h)
        part.check(alternating_number(g) == 0, f"corona #{i}", g, 0, alternating_number(g))


def suite_families(seed: int = 0, joins: int = 200, transforms: int = 40, jobs: int = 1) -> SuiteReport:
    """Value and cyclomatic-number identities of every family constructor."""
    start = time.perf_counter()
    part = _run_sharded(_join_case, [(seed, i) for i in range(joins)], jobs)
    part.merge(_run_sharded(_transform_case, [(seed, i) for i in range(transforms)], jobs))
    _lchain_checks(part)
    _wstar_checks(part)
    _paired_family_checks(part)
    _prime_checks(part)
    _misc_checks(part, random.Random(seed))
    return _finish("families", "checks", part, start)


def run_suite(name: str, max_n: Optional[int] = None, seed: int = 0, jobs: int = 1) -> SuiteReport:
    """Dispatch by CLI suite name; ``max_n`` falls back to each suite's default."""
    if name == "lemma1":
        return suite_lemma1(40 if max_n is None else max_n, jobs=jobs)
    if name == "theorem6":
        return suite_theorem6(14 if max_n is None else max_n, jobs=jobs)
    if name == "cyclomatic":
        return suite_cyclomatic_bound(8 if max_n is None else max_n, jobs=jobs)
    if name == "wellcovered":
        return suite_well_covered(8 if max_n is None else max_n, seed=seed, jobs=jobs)
    if name == "families":
        return suite_families(seed=seed, jobs=jobs)
    raise ValueError(f"unknown suite {name!r}")
