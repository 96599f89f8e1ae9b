"""Search for connected graphs with a prescribed cyclomatic number ``nu`` and
value ``q = I(G;-1)``.

Stages, in order, all charged to one budget (engine recursion nodes plus one
unit per candidate graph):

1. catalog: named family graphs hit ``|q|`` directly; then joins of two or
   three rooted catalog entries at a new vertex, using
   ``I(H;-1) = prod a_i - prod b_i``;
2. exhaustive scan of connected graphs with cyclomatic number ``nu`` on up to
   eight vertices;
3. seeded hill climbing by edge rewiring, which keeps the edge count and
   connectivity and hence ``nu``.

Sign and size are fixed afterwards: one ``h1`` transform negates the value,
each ``h2`` transform adds one to ``nu`` without changing the value.  Every
witness is re-verified from scratch with a fresh engine call.
"""
from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from typing import Optional

from . import families as fam
from .analysis import cyclomatic_number
from .engine import alternating_number, independence_poly
from .enumeration import MAX_CONNECTED_ORDER, connected_graphs, connected_graphs_with_nu
from .familyspec import parse_family_spec
from .formats import graph6_str
from .graph import DEFAULT_CAP, Graph, GraphError, GraphTooLargeError, iter_bits
from .poly import eval_int

DEFAULT_BUDGET = 1_000_000
CATALOG_GRAPH_ORDER = 6
LOCAL_MAX_ORDER = 16


class Status(enum.Enum):
    FOUND_WITNESS = "FoundWitness"
    FOUND_IDENTITY = "FoundIdentity"
    NOT_FOUND = "NotFoundWithinBudget"


@dataclass
class SearchResult:
    nu: int
    q: int
    status: Status
    witness: Optional[Graph]
    construction: str
    stage: str
    budget_spent: int
    budget: int

    @property
    def found(self) -> bool:
        return self.status is not Status.NOT_FOUND

    def render(self) -> str:
        head = f"nu={self.nu} q={self.q}: {self.status.value}"
        if self.status is Status.NOT_FOUND:
            return f"{head} (spent {self.budget_spent} of {self.budget})"
        graph = f" graph6={graph6_str(self.witness)}" if self.witness is not None else ""
        return (
            f"{head} via {self.stage} [{self.construction}]{graph} "
            f"(spent {self.budget_spent} of {self.budget})"
        )


class _Exhausted(Exception):
    pass


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.spent = 0

    def charge(self, units: int) -> None:
        self.spent += units
        if self.spent > self.limit:
            raise _Exhausted


class _Evaluator:
    def __init__(self, budget: _Budget):
        self.budget = budget
        self.memo: dict = {}

    def value(self, g: Graph) -> int:
        self.budget.charge(1)
        p, stats = independence_poly(g, memo=self.memo)
        self.budget.charge(stats.recursion_nodes)
        return eval_int(p, -1)


@dataclass(frozen=True)
class _Rooted:
    nu: int
    a: int
    b: int
    label: str
    graph: Graph
    anchor: int


def _named_families(nu: int) -> list[tuple[str, Graph]]:
    """Family graphs with cyclomatic number at most ``nu``, in a fixed order."""
    texts = ["fig22g()"] if nu >= 3 else []
    for n_ in range(0, nu + 1):
        for q in range(0, n_ + 1):
            texts.append(f"lemma4g1({n_}, {q})")
            texts.append(f"lemma4g2({n_}, {q})")
    for q in range(1, (1 << nu) + 1):
        if sum(p - 1 for p in fam.prime_factors(q)) <= nu:
            texts.append(f"primefactor({q})")
    texts += [f"lchain({s})" for s in range(1, nu + 1)]
    texts += [f"wstar({q})" for q in range(2, nu + 1)]
    if nu >= 1:
        texts += [f"cycle({n_})" for n_ in range(3, 9)]
        texts += [f"cycletail({n_})" for n_ in range(4, 10)]
    texts += [f"path({n_})" for n_ in range(1, 6)]
    out = []
    for text in texts:
        try:
            out.append((text, parse_family_spec(text).build()))
        except GraphTooLargeError:
            continue
    return out


def _finish_graph(g: Graph, value: int, have_nu: int, nu: int, q: int, cap: int) -> Graph:
    if value != q:
        g = fam.transform_h1(g, 0, cap)
    gadget, gadget_anchor = fam.h2_gadget()
    for _ in range(nu - have_nu):
        g = fam.join_vertex([(g, 0), (gadget, gadget_anchor)], cap)
    return g


def _describe(label: str, value: int, have_nu: int, nu: int, q: int) -> str:
    text = label
    if value != q:
        text = f"h1({text})"
    for _ in range(nu - have_nu):
        text = f"h2({text})"
    return text


def _verify(g: Graph, nu: int, q: int) -> bool:
    return g.is_connected() and cyclomatic_number(g) == nu and alternating_number(g) == q


def minimize_witness(g: Graph, nu: int, q: int) -> Graph:
    """Greedily delete pendant vertices (highest label first) while the graph
    stays connected with the same cyclomatic number and value."""
    changed = True
    while changed and g.n > 1:
        changed = False
        for v in sorted(iter_bits(g.pendant_mask()), reverse=True):
            h = g.delete_vertices((v,))
            if _verify(h, nu, q):
                g = h
                changed = True
                break
    return g


class _Search:
    def __init__(self, nu: int, q: int, budget: int, seed: int, cap: int):
        self.nu = nu
        self.q = q
        self.seed = seed
        self.cap = cap
        self.budget = _Budget(budget)
        self.eval = _Evaluator(self.budget)

    def result(self, status: Status, witness, construction: str, stage: str) -> SearchResult:
        return SearchResult(self.nu, self.q, status, witness, construction, stage,
                            self.budget.spent, self.budget.limit)

    def accept(self, g: Graph, value: int, have_nu: int, label: str, stage: str,
               minimize: bool) -> Optional[SearchResult]:
        construction = _describe(label, value, have_nu, self.nu, self.q)
        try:
            h = _finish_graph(g, value, have_nu, self.nu, self.q, self.cap)
        except GraphTooLargeError:
            # the identities still certify the value; report without a graph
            return self.result(Status.FOUND_IDENTITY, None, construction, stage)
        if not _verify(h, self.nu, self.q):
            raise RuntimeError(f"witness failed re-verification: {construction}")
        if minimize:
            smaller = minimize_witness(h, self.nu, self.q)
            if smaller is not h:
                construction += f", pruned to {smaller.n} vertices"
            h = smaller
        return self.result(Status.FOUND_WITNESS, h, construction, stage)

    # stage 1 ---------------------------------------------------------------

    def catalog(self) -> Optional[SearchResult]:
        nu, target = self.nu, abs(self.q)
        rooted: dict[tuple[int, int, int], _Rooted] = {}
        named = _named_families(nu)
        for label, g in named:
            self.budget.charge(1)
            have_nu = cyclomatic_number(g)
            if have_nu > nu:
                continue
            value = self.eval.value(g)
            if abs(value) == target:
                return self.accept(g, value, have_nu, label, "catalog", minimize=False)
            self._add_rooted(rooted, label, g, value, have_nu)
        for n in range(1, CATALOG_GRAPH_ORDER + 1):
            for g in connected_graphs(n):
                self.budget.charge(1)
                have_nu = cyclomatic_number(g)
                if have_nu > nu:
                    continue
                value = self.eval.value(g)
                label = f"graph6 {graph6_str(g)}"
                if abs(value) == target:
                    return self.accept(g, value, have_nu, label, "catalog", minimize=True)
                self._add_rooted(rooted, label, g, value, have_nu)
        entries = list(rooted.values())
        for size in (2, 3):
            for combo in itertools.combinations_with_replacement(range(len(entries)), size):
                self.budget.charge(1)
                parts = [entries[i] for i in combo]
                have_nu = sum(p.nu for p in parts)
                if have_nu > nu:
                    continue
                prod_a = prod_b = 1
                for p in parts:
                    prod_a *= p.a
                    prod_b *= p.b
                value = prod_a - prod_b
                if abs(value) != target:
                    continue
                try:
                    g = fam.join_vertex([(p.graph, p.anchor) for p in parts], self.cap)
                except GraphTooLargeError:
                    continue
                label = "join(" + ", ".join(f"{p.label}@{p.anchor}" for p in parts) + ")"
                return self.accept(g, value, have_nu, label, "catalog join", minimize=True)
        return None

    def _add_rooted(self, rooted: dict, label: str, g: Graph, value: int, have_nu: int) -> None:
        for v in range(g.n):
            b = self.eval.value(g.delete_vertices((v,)))
            rooted.setdefault((have_nu, value, b), _Rooted(have_nu, value, b, label, g, v))

    # stage 2 ---------------------------------------------------------------

    def scan(self) -> Optional[SearchResult]:
        for n in range(1, MAX_CONNECTED_ORDER + 1):
            if self.nu > n * (n - 1) // 2 - n + 1:
                continue
            for g in connected_graphs_with_nu(n, self.nu):
                value = self.eval.value(g)
                if value == self.q:
                    return self.accept(g, value, self.nu, f"graph6 {graph6_str(g)}",
                                       "exhaustive scan", minimize=True)
        return None

    # stage 3 ---------------------------------------------------------------

    def local(self) -> Optional[SearchResult]:
        nu, q = self.nu, self.q
        rng = random.Random(f"search:{nu}:{q}:{self.seed}")
        restart = 0
        while True:
            restart += 1
            n = rng.randint(max(3, MAX_CONNECTED_ORDER + 1), LOCAL_MAX_ORDER)
            if nu > n * (n - 1) // 2 - n + 1:
                continue
            g = _random_connected(rng, n, n - 1 + nu)
            self.budget.charge(1)
            score = abs(self.eval.value(g) - q)
            for _ in range(200):
                if score == 0:
                    break
                h = _rewire(rng, g)
                if h is None:
                    continue
                self.budget.charge(1)
                s = abs(self.eval.value(h) - q)
                if s <= score:
                    g, score = h, s
            if score == 0:
                return self.accept(g, q, nu, f"rewired graph6 {graph6_str(g)} (restart {restart})",
                                   "local search", minimize=True)

    def run(self) -> SearchResult:
        try:
            for stage in (self.catalog, self.scan, self.local):
                found = stage()
                if found is not None:
                    return found
        except _Exhausted:
            pass
        self.budget.spent = min(self.budget.spent, self.budget.limit)
        return self.result(Status.NOT_FOUND, None, "", "")


def _random_connected(rng: random.Random, n: int, m: int) -> Graph:
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    missing = [(u, v) for v in range(n) for u in range(v) if (u, v) not in edges]
    rng.shuffle(missing)
    edges |= set(missing[: m - len(edges)])
    return Graph.from_edge_list(n, sorted(edges))


def _rewire(rng: random.Random, g: Graph) -> Optional[Graph]:
    edges = g.edges()
    u, v = edges[rng.randrange(len(edges))]
    x = rng.randrange(g.n)
    y = rng.randrange(g.n)
    if x == y or g.has_edge(x, y):
        return None
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    adj[x] |= 1 << y
    adj[y] |= 1 << x
    h = Graph._trusted(g.n, tuple(adj))
    return h if h.is_connected() else None


def search(nu: int, q: int, budget: int = DEFAULT_BUDGET, seed: int = 0,
           cap: int = DEFAULT_CAP) -> SearchResult:
    """Look for a connected graph with cyclomatic number ``nu`` and
    ``I(G;-1) = q``; deterministic for fixed arguments."""
    if nu < 0:
        raise GraphError("nu must be non-negative")
    if abs(q) > 1 << nu:
        raise GraphError(f"|q| = {abs(q)} exceeds the bound 2^nu = {1 << nu}")
    return _Search(nu, q, budget, seed, cap).run()


def coverage_table(nu: int, budget: int = DEFAULT_BUDGET, seed: int = 0) -> dict[int, SearchResult]:
    """Search every ``q`` with ``|q| <= 2^nu``."""
    bound = 1 << nu
    return {q: search(nu, q, budget, seed) for q in range(-bound, bound + 1)}


def render_coverage(nu: int, table: dict[int, SearchResult]) -> str:
    found = [q for q, r in table.items() if r.found]
    missing = [q for q, r in table.items() if not r.found]
    lines = [r.render() for r in table.values()]
    lines.append(f"nu={nu}: {len(found)} of {len(table)} values realised")
    lines.append("missing: " + (" ".join(str(q) for q in missing) if missing else "none"))
    return "\n".join(lines)
