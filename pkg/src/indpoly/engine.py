"""Exact independence polynomials.

The recursive engine splits into connected components, recognises paths and
cycles, memoises small components by canonical form and otherwise applies
either the vertex identity ``I(G) = I(G-w) + x I(G-N[w])`` or the edge identity
``I(G) = I(G-uv) - x^2 I(G - N(u) - N(v))``.  :func:`brute_force_poly` is an
independent oracle that simply enumerates stable sets.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import MutableMapping, Optional

from . import kernels
from .enumeration import CANONICAL_THRESHOLD, canonical_form
from .graph import Graph, GraphTooLargeError, iter_bits, popcount
from .poly import ONE, Polynomial, cycle_poly, eval_int, linear, path_poly

ORACLE_MAX_N = 28

_ONE_PLUS_X = linear(1, 1)
_K2_POLY = linear(1, 2)


class Strategy(enum.Enum):
    VERTEX_MAX_DEGREE = "max-degree"
    VERTEX_MIN_DEGREE = "min-degree"
    PENDANT_NEIGHBOR_FIRST = "pendant-first"
    EDGE_RECURSION = "edge"
    AUTO = "auto"


CONCRETE_STRATEGIES = (
    Strategy.VERTEX_MAX_DEGREE,
    Strategy.VERTEX_MIN_DEGREE,
    Strategy.PENDANT_NEIGHBOR_FIRST,
    Strategy.EDGE_RECURSION,
)


@dataclass
class ComputationStats:
    strategy: Strategy
    recursion_nodes: int = 0
    memo_hits: int = 0
    closed_form_hits: int = 0
    max_depth: int = 0

    def render(self) -> str:
        return (
            f"strategy={self.strategy.value} nodes={self.recursion_nodes} "
            f"memo_hits={self.memo_hits} closed_form_hits={self.closed_form_hits} "
            f"max_depth={self.max_depth}"
        )


class OracleTooLargeError(GraphTooLargeError):
    pass


def brute_force_poly(g: Graph) -> Polynomial:
    """Count stable sets of every size by exhaustive backtracking."""
    if g.n > ORACLE_MAX_N:
        raise OracleTooLargeError(
            f"brute force limited to n <= {ORACLE_MAX_N}, got {g.n}"
        )
    return Polynomial(kernels.stable_set_counts(g.n, g.adj))


def _min_degree_vertex(g: Graph) -> int:
    best, best_deg = -1, g.n + 1
    for v, row in enumerate(g.adj):
        d = popcount(row)
        if d < best_deg:
            best, best_deg = v, d
    return best


def _max_degree_vertex(g: Graph) -> int:
    best, best_deg = -1, -1
    for v, row in enumerate(g.adj):
        d = popcount(row)
        if d > best_deg:
            best, best_deg = v, d
    return best


def _cycle_edge(g: Graph) -> Optional[tuple[int, int]]:
    """First non-tree edge of the BFS tree from vertex 0, if any.

    A non-tree edge closes a fundamental cycle, so deleting it lowers the
    cyclomatic number by one.
    """
    parent = [-1] * g.n
    seen = 1
    order = [0]
    for v in order:
        for u in iter_bits(g.adj[v]):
            if not seen >> u & 1:
                seen |= 1 << u
                parent[u] = v
                order.append(u)
            elif u != parent[v]:
                return (min(u, v), max(u, v))
    return None


class _Solver:
    def __init__(
        self,
        strategy: Strategy,
        memo: MutableMapping,
        closed_forms: bool,
        memo_threshold: int,
    ):
        self.strategy = strategy
        self.memo = memo
        self.closed_forms = closed_forms
        self.memo_threshold = memo_threshold
        self.stats = ComputationStats(strategy)

    def solve(self, g: Graph, depth: int = 0) -> Polynomial:
        if g.n == 0:
            return ONE
        masks = g.component_masks()
        if len(masks) == 1:
            return self.component(g, depth)
        result = ONE
        for m in masks:
            result = result * self.component(g.induced(m), depth)
        return result

    def _key(self, g: Graph):
        if g.n <= self.memo_threshold:
            return canonical_form(g, threshold=None)
        return (g.n, g.adj)

    def component(self, g: Graph, depth: int) -> Polynomial:
        stats = self.stats
        stats.recursion_nodes += 1
        if depth > stats.max_depth:
            stats.max_depth = depth
        n = g.n
        if n == 1:
            stats.closed_form_hits += 1
            return _ONE_PLUS_X
        if n == 2:
            stats.closed_form_hits += 1
            return _K2_POLY
        if self.closed_forms:
            degs = g.degree_sequence()
            if max(degs) <= 2:
                stats.closed_form_hits += 1
                if min(degs) == 2:
                    return cycle_poly(n)
                return path_poly(n)
        key = self._key(g)
        hit = self.memo.get(key)
        if hit is not None:
            stats.memo_hits += 1
            return hit
        result = self.branch(g, depth + 1)
        self.memo[key] = result
        return result

    def branch(self, g: Graph, depth: int) -> Polynomial:
        strategy = self.strategy
        if strategy is Strategy.EDGE_RECURSION:
            edge = _cycle_edge(g)
            if edge is None:
                # a tree: take a pendant edge so G - uv splits off K1
                u = next(iter_bits(g.pendant_mask()))
                edge = (u, next(iter_bits(g.adj[u])))
            u, v = edge
            without = self.solve(g.delete_edge(u, v), depth)
            rest = self.solve(g.delete_edge_neighborhoods(u, v), depth)
            return without - rest.shift(2)

        if strategy in (Strategy.PENDANT_NEIGHBOR_FIRST, Strategy.AUTO):
            pendants = g.pendant_mask()
            if pendants:
                u = (pendants & -pendants).bit_length() - 1
                v = (g.adj[u] & -g.adj[u]).bit_length() - 1
                both = g.induced(g.vertex_mask & ~((1 << u) | (1 << v)))
                left = self.solve(both, depth) * _ONE_PLUS_X
                right = self.solve(g.delete_closed_neighborhood(v), depth)
                return left + right.shift(1)
            w = _max_degree_vertex(g)
        elif strategy is Strategy.VERTEX_MIN_DEGREE:
            w = _min_degree_vertex(g)
        else:
            w = _max_degree_vertex(g)
        left = self.solve(g.delete_vertices((w,)), depth)
        right = self.solve(g.delete_closed_neighborhood(w), depth)
        return left + right.shift(1)


def _check_independence_poly(g: Graph, p: Polynomial) -> None:
    if p[0] != 1 or (g.n and p[1] != g.n) or any(c < 0 for c in p.coeffs):
        raise RuntimeError(f"engine produced an invalid independence polynomial {p!r}")


def independence_poly(
    g: Graph,
    strategy: Strategy = Strategy.AUTO,
    *,
    memo: Optional[MutableMapping] = None,
    closed_forms: bool = True,
    memo_threshold: int = CANONICAL_THRESHOLD,
) -> tuple[Polynomial, ComputationStats]:
    """Compute ``I(G;x)`` exactly.

    ``memo`` may be shared between calls; keys are canonical forms for
    components with at most ``memo_threshold`` vertices and labelled
    adjacency otherwise, so entries are valid for every strategy.  With
    ``closed_forms=False`` paths and cycles are recursed on like any other
    component.
    """
    solver = _Solver(strategy, {} if memo is None else memo, closed_forms, memo_threshold)
    p = solver.solve(g)
    _check_independence_poly(g, p)
    return p, solver.stats


def poly(g: Graph, strategy: Strategy = Strategy.AUTO, **kwargs) -> Polynomial:
    return independence_poly(g, strategy, **kwargs)[0]


def alternating_number(g: Graph, strategy: Strategy = Strategy.AUTO, **kwargs) -> int:
    """``I(G;-1)``: even-size minus odd-size stable set counts."""
    return eval_int(poly(g, strategy, **kwargs), -1)


def value_at(g: Graph, t: int, strategy: Strategy = Strategy.AUTO, **kwargs) -> int:
    return eval_int(poly(g, strategy, **kwargs), t)


def even_odd_counts(g: Graph, **kwargs) -> tuple[int, int]:
    p = poly(g, **kwargs)
    return sum(p.coeffs[0::2]), sum(p.coeffs[1::2])


def stability_number(g: Graph) -> int:
    """Maximum stable set size by branch and bound, without the polynomial."""
    adj = g.adj
    best = 0

    def rec(cand: int, size: int) -> None:
        nonlocal best
        # vertices of degree <= 1 inside cand can always be taken
        changed = True
        while changed and cand:
            changed = False
            for v in iter_bits(cand):
                if popcount(adj[v] & cand) <= 1:
                    cand &= ~(adj[v] | (1 << v))
                    size += 1
                    changed = True
                    break
        if size + popcount(cand) <= best:
            return
        if not cand:
            best = size
            return
        v = max(iter_bits(cand), key=lambda u: popcount(adj[u] & cand))
        rec(cand & ~(adj[v] | (1 << v)), size + 1)
        rec(cand & ~(1 << v), size)

    rec(g.vertex_mask, 0)
    return best
