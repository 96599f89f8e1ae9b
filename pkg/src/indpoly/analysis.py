"""Structural analysis: cyclomatic number, girth, well-coveredness, coronas."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .engine import ORACLE_MAX_N, OracleTooLargeError, even_odd_counts, stability_number
from .graph import INFINITY, Graph, GraphError, iter_bits, popcount


def cyclomatic_number(g: Graph) -> int:
    """``|E| - |V| + components``."""
    return g.edge_count - g.n + len(g.component_masks())


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = INFINITY
    adj = g.adj
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in iter_bits(adj[v]):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif u != parent[v]:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def _check_enumerable(g: Graph) -> None:
    if g.n > ORACLE_MAX_N:
        raise OracleTooLargeError(
            f"maximal stable set enumeration limited to n <= {ORACLE_MAX_N}, got {g.n}"
        )


def _maximal_stable_masks(g: Graph):
    # Bron-Kerbosch with pivoting on the complement graph: cliques of the
    # complement are stable sets of g.
    full = g.vertex_mask
    comp = [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)]

    def rec(r: int, p: int, x: int):
        if not p and not x:
            yield r
            return
        pivot_pool = p | x
        pivot = max(iter_bits(pivot_pool), key=lambda u: popcount(comp[u] & p))
        for v in iter_bits(p & ~comp[pivot]):
            yield from rec(r | (1 << v), p & comp[v], x & comp[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n == 0:
        yield 0
        return
    yield from rec(0, full, 0)


def maximal_stable_sets(g: Graph) -> list[frozenset[int]]:
    """All inclusion-maximal stable sets, sorted by their sorted vertex tuples."""
    _check_enumerable(g)
    sets = [tuple(iter_bits(m)) for m in _maximal_stable_masks(g)]
    sets.sort()
    return [frozenset(s) for s in sets]


def maximal_stable_sizes(g: Graph) -> set[int]:
    _check_enumerable(g)
    return {popcount(m) for m in _maximal_stable_masks(g)}


def is_well_covered(g: Graph) -> bool:
    """All maximal stable sets have the same size."""
    _check_enumerable(g)
    first = None
    for m in _maximal_stable_masks(g):
        size = popcount(m)
        if first is None:
            first = size
        elif size != first:
            return False
    return True


def is_very_well_covered(g: Graph) -> bool:
    """Well-covered, no isolated vertices, and ``n = 2 alpha``."""
    if any(row == 0 for row in g.adj):
        return False
    if g.n % 2 or stability_number(g) * 2 != g.n:
        return False
    return is_well_covered(g)


def corona_decompose(g: Graph) -> Optional[Graph]:
    """Return ``H`` with ``g == corona_k1(H)`` up to labelling, else ``None``.

    ``H`` is induced on the non-pendant vertices in their original order; in
    a ``K2`` component the lower label is taken as the ``H`` vertex.
    """
    if g.n == 0:
        return Graph.empty(0)
    adj = g.adj
    base = 0
    for comp in g.component_masks():
        if popcount(comp) == 2:
            base |= comp & -comp
            continue
        pendants = 0
        for v in iter_bits(comp):
            row = adj[v]
            if row == 0:
                return None
            if not row & (row - 1):
                pendants |= 1 << v
        inner = comp & ~pendants
        if popcount(inner) != popcount(pendants):
            return None
        for v in iter_bits(inner):
            if popcount(adj[v] & pendants) != 1:
                return None
        for p in iter_bits(pendants):
            if not adj[p] & inner:
                return None
        base |= inner
    return g.induced(base)


def well_covered_residual_check(g: Graph, v: int) -> bool:
    """Whether ``G - N[v]`` is well-covered, for a non-complete well-covered ``G``."""
    if g.edge_count == g.n * (g.n - 1) // 2:
        raise GraphError("graph is complete")
    if not is_well_covered(g):
        raise GraphError("graph is not well-covered")
    return is_well_covered(g.delete_closed_neighborhood(v))


def dependent_set_balance(g: Graph) -> tuple[int, int]:
    """Numbers of dependent (non-stable) vertex subsets of even and odd size."""
    f0, f1 = even_odd_counts(g)
    if g.n == 0:
        even_subsets, odd_subsets = 1, 0
    else:
        even_subsets = odd_subsets = 1 << (g.n - 1)
    return even_subsets - f0, odd_subsets - f1


@dataclass
class GraphProfile:
    n: int
    edge_count: int
    component_count: int
    cyclomatic: int
    girth: float
    alpha: int
    well_covered: Optional[bool]
    very_well_covered: Optional[bool]
    corona_base: Optional[Graph]

    def render(self) -> str:
        def flag(value: Optional[bool]) -> str:
            return "unknown" if value is None else ("yes" if value else "no")

        girth_text = "inf" if self.girth == INFINITY else str(int(self.girth))
        if self.corona_base is None:
            corona = "none"
        else:
            corona = f"H on {self.corona_base.n} vertices, edges {self.corona_base.edges()}"
        lines = [
            f"vertices: {self.n}",
            f"edges: {self.edge_count}",
            f"components: {self.component_count}",
            f"cyclomatic: {self.cyclomatic}",
            f"girth: {girth_text}",
            f"alpha: {self.alpha}",
            f"well-covered: {flag(self.well_covered)}",
            f"very-well-covered: {flag(self.very_well_covered)}",
            f"corona-base: {corona}",
        ]
        return "\n".join(lines)


def profile(g: Graph) -> GraphProfile:
    comps = len(g.component_masks())
    enumerable = g.n <= ORACLE_MAX_N
    wc = is_well_covered(g) if enumerable else None
    vwc = is_very_well_covered(g) if enumerable else None
    return GraphProfile(
        n=g.n,
        edge_count=g.edge_count,
        component_count=comps,
        cyclomatic=g.edge_count - g.n + comps,
        girth=girth(g),
        alpha=stability_number(g),
        well_covered=wc,
        very_well_covered=vwc,
        corona_base=corona_decompose(g),
    )
