"""Canonical forms and exhaustive generators for small graphs."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Optional

from . import kernels
from .graph import Graph, GraphError

CANONICAL_THRESHOLD = 10

MAX_TREE_ORDER = 16
MAX_CONNECTED_ORDER = 8

# Known totals, used to cross-check the generators.
FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320)
CONNECTED_GRAPH_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117)

CanonicalForm = bytes


def canonical_form(g: Graph, threshold: Optional[int] = CANONICAL_THRESHOLD) -> CanonicalForm:
    """Isomorphism-invariant key: ``n`` as one byte followed by the minimum
    upper-triangle adjacency code, big-endian.

    Two graphs get equal keys exactly when they are isomorphic.
    """
    if threshold is not None and g.n > threshold:
        raise GraphError(f"canonical form limited to n <= {threshold}, got {g.n}")
    code, _ = kernels.canonical_code(g.n, g.adj)
    nbytes = (g.n * (g.n - 1) // 2 + 7) // 8
    return bytes((g.n,)) + code.to_bytes(nbytes, "big")


def canonical_relabel(g: Graph) -> Graph:
    """The representative of ``g``'s isomorphism class whose code is minimal."""
    _, order = kernels.canonical_code(g.n, g.adj)
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    return Graph.from_edge_list(g.n, [(pos[u], pos[v]) for u, v in g.edges()])


# -- free trees ---------------------------------------------------------------
# Wright, Richmond, Odlyzko and McKay's constant-time generator over
# canonical level sequences.

def _next_rooted_tree(levels: list[int], p: Optional[int] = None) -> Optional[list[int]]:
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split_tree(levels: list[int]) -> tuple[list[int], list[int]]:
    # left = subtree of the first child of the root, rest = root + the others
    m = len(levels)
    seen_one = False
    for i, lv in enumerate(levels):
        if lv == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    left = [levels[i] - 1 for i in range(1, m)]
    rest = [0] + levels[m:]
    return left, rest


def _next_tree(candidate: list[int]) -> Optional[list[int]]:
    left, rest = _split_tree(candidate)
    left_height, rest_height = max(left), max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest):
            valid = False
        elif len(left) == len(rest) and left > rest:
            valid = False
    if valid:
        return candidate
    p = len(left)
    new = _next_rooted_tree(candidate, p)
    if new is not None and candidate[p] > 2:
        new_left, _ = _split_tree(new)
        suffix = list(range(1, max(new_left) + 2))
        new[-len(suffix):] = suffix
    return new


def _levels_to_graph(levels: list[int]) -> Graph:
    last_at = {}
    edges = []
    for v, lv in enumerate(levels):
        if lv > 0:
            edges.append((last_at[lv - 1], v))
        last_at[lv] = v
    return Graph.from_edge_list(len(levels), edges)


def free_trees(n: int) -> Iterator[Graph]:
    """Every free tree on ``n`` vertices exactly once (``1 <= n <= 16``)."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise GraphError(f"free_trees supports 1 <= n <= {MAX_TREE_ORDER}, got {n}")
    if n <= 2:
        yield _levels_to_graph(list(range(n)))
        return
    levels: Optional[list[int]] = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_tree(levels)
        if levels is None:
            break
        yield _levels_to_graph(levels)
        levels = _next_rooted_tree(levels)


# -- connected graphs ---------------------------------------------------------

@lru_cache(maxsize=None)
def _connected_catalog(n: int) -> tuple[Graph, ...]:
    return tuple(_augment(n))


def _augment(n: int) -> Iterator[Graph]:
    # Every connected graph has a non-cut vertex, so each one arises from a
    # connected graph on n-1 vertices plus a vertex with a nonempty
    # neighbourhood.
    if n == 1:
        yield Graph.empty(1)
        return
    seen = set()
    for parent in _connected_catalog(n - 1):
        m = parent.n
        for nbrs in range(1, 1 << m):
            adj = list(parent.adj)
            for u in range(m):
                if nbrs >> u & 1:
                    adj[u] |= 1 << m
            adj.append(nbrs)
            g = Graph._trusted(n, tuple(adj))
            key = canonical_form(g, threshold=None)
            if key not in seen:
                seen.add(key)
                yield g


def connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected graph on ``n`` vertices exactly once (``1 <= n <= 8``)."""
    if not 1 <= n <= MAX_CONNECTED_ORDER:
        raise GraphError(
            f"connected_graphs supports 1 <= n <= {MAX_CONNECTED_ORDER}, got {n}"
        )
    return iter(_connected_catalog(n))


def connected_graphs_with_nu(n: int, nu: int) -> Iterator[Graph]:
    """Connected graphs on ``n`` vertices with cyclomatic number ``nu``."""
    target_edges = nu + n - 1
    for g in connected_graphs(n):
        if g.edge_count == target_edges:
            yield g
