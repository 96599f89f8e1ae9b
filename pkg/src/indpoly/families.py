"""Graph families and transforms with known values of ``I(G;-1)``.

Gluing conventions: a constructor that combines graphs places its inputs
side by side in argument order and appends any new vertices after them, so
vertex labels of the first input are preserved.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .graph import DEFAULT_CAP, Graph, GraphError, GraphTooLargeError, complete_graph

K1 = Graph.empty(1)
K2 = complete_graph(2)
K3 = complete_graph(3)


def _check_cap(n: int, cap: int = DEFAULT_CAP) -> None:
    if n > cap:
        raise GraphTooLargeError(f"construction needs {n} vertices, cap is {cap}")


def _build(n: int, edges: Iterable[tuple[int, int]], cap: int = DEFAULT_CAP) -> Graph:
    _check_cap(n, cap)
    return Graph.from_edge_list(n, edges, cap=cap)


def disjoint_union(graphs: Sequence[Graph], cap: int = DEFAULT_CAP) -> Graph:
    total = sum(g.n for g in graphs)
    _check_cap(total, cap)
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edge_list(total, edges, cap=cap)


def zykov_sum(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    base = disjoint_union([g1, g2])
    cross = [(u, g1.n + v) for u in range(g1.n) for v in range(g2.n)]
    return Graph.from_edge_list(base.n, base.edges() + cross)


def corona_k1(h: Graph) -> Graph:
    """Attach one pendant vertex ``n + i`` to every vertex ``i`` of ``h``."""
    n = h.n
    return _build(2 * n, h.edges() + [(i, n + i) for i in range(n)])


def join_vertex(children: Sequence[tuple[Graph, int]], cap: int = DEFAULT_CAP) -> Graph:
    """Place the children side by side and add a vertex (the last one)
    adjacent to exactly the given anchor of each child."""
    if len(children) < 2:
        raise GraphError("join_vertex needs at least two children")
    for g, anchor in children:
        if not 0 <= anchor < g.n:
            raise GraphError(f"anchor {anchor} out of range for a child with {g.n} vertices")
    base = disjoint_union([g for g, _ in children], cap)
    v = base.n
    _check_cap(v + 1, cap)
    edges = base.edges()
    offset = 0
    for g, anchor in children:
        edges.append((offset + anchor, v))
        offset += g.n
    return Graph.from_edge_list(v + 1, edges, cap=cap)


def l_chain(s: int, cap: int = DEFAULT_CAP) -> Graph:
    """``s`` triangles in a row, consecutive ones linked by a single edge.

    Triangle ``i`` (0-based) is ``3i`` (left bottom), ``3i+1`` (apex) and
    ``3i+2`` (right bottom); the link runs from ``3i+2`` to ``3i+3``.
    ``l_chain(0)`` is ``K1``.
    """
    if s < 0:
        raise GraphError("s must be non-negative")
    if s == 0:
        return K1
    edges = []
    for i in range(s):
        a, b, c = 3 * i, 3 * i + 1, 3 * i + 2
        edges += [(a, b), (b, c), (a, c)]
        if i + 1 < s:
            edges.append((c, c + 1))
    return _build(3 * s, edges, cap)


def l_chain_anchor(s: int) -> int:
    """Rightmost bottom vertex of :func:`l_chain`."""
    return 0 if s == 0 else 3 * s - 1


def w_star(q: int) -> Graph:
    """Star ``K_{1,q}`` (centre 0, leaves ``1..q``) with each leaf also joined
    to both ends of its own extra edge."""
    if q < 2:
        raise GraphError("w_star needs q >= 2")
    n = 3 * q + 1
    edges = []
    for i in range(q):
        leaf = 1 + i
        a, b = q + 1 + 2 * i, q + 2 + 2 * i
        edges += [(0, leaf), (leaf, a), (leaf, b), (a, b)]
    return _build(n, edges)


def lemma4_g1(nu: int, q: int) -> Graph:
    """Path ``u-v-w`` (vertices 0, 1, 2); ``v`` closes a triangle with each of
    ``nu - q`` extra edges and ``w`` is joined to one vertex of each of ``q``
    triangles.  Cyclomatic number ``nu``, value ``(-1)^(q+1) 2^q``."""
    if not 0 <= q <= nu:
        raise GraphError("need 0 <= q <= nu")
    edges = [(0, 1), (1, 2)]
    nxt = 3
    for _ in range(nu - q):
        a, b = nxt, nxt + 1
        edges += [(1, a), (1, b), (a, b)]
        nxt += 2
    for _ in range(q):
        a, b, c = nxt, nxt + 1, nxt + 2
        edges += [(a, b), (b, c), (a, c), (2, a)]
        nxt += 3
    return _build(nxt, edges)


def h2_gadget() -> tuple[Graph, int]:
    """Triangle ``0,1,2`` with the path ``2-3-4`` hanging off it; anchor 3.

    ``I = 1 + 5x + 5x^2`` and deleting the anchor leaves ``K3 + K1``, so the
    gadget contributes value 1 while its anchor-deleted term vanishes at -1.
    """
    g = Graph.from_edge_list(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    return g, 3


def transform_h1(g: Graph, anchor: int = 0, cap: int = DEFAULT_CAP) -> Graph:
    """Negates ``I(G;-1)``, keeps the cyclomatic number."""
    return join_vertex([(g, anchor), (K2, 0)], cap)


def transform_h2(g: Graph, anchor: int = 0) -> Graph:
    """Keeps ``I(G;-1)``, raises the cyclomatic number by one."""
    gadget, gadget_anchor = h2_gadget()
    return join_vertex([(g, anchor), (gadget, gadget_anchor)])


def transform_h3(
    g: Graph,
    anchor: int = 0,
    k: int = 1,
    extra: Sequence[tuple[Graph, int]] = (),
) -> Graph:
    """Multiplies ``I(G;-1)`` by ``(-1)^k k``; cyclomatic number grows by ``k-1``.

    ``extra`` children are joined to the same new vertex, which multiplies
    the value by each child's own value.  For ``k = 1`` the chain child is
    left out (``K1`` would contribute a zero factor), which is ``transform_h1``
    with the extra children.
    """
    if k < 1:
        raise GraphError("k must be >= 1")
    children = [(g, anchor), *extra]
    if k > 1:
        children.append((l_chain(k - 1), l_chain_anchor(k - 1)))
    children.append((K2, 0))
    return join_vertex(children)


def chain_product(attach: Sequence[int], cap: int = DEFAULT_CAP) -> Graph:
    """Path ``u-v-w`` (0, 1, 2) with ``w`` joined to the anchor of
    ``l_chain(s)`` for each ``s`` in ``attach``.

    Value ``-prod((-1)^s (s+1))``, cyclomatic number ``sum(attach)``.
    """
    if any(s < 1 for s in attach):
        raise GraphError("chain lengths must be >= 1")
    edges = [(0, 1), (1, 2)]
    offset = 3
    for s in attach:
        chain = l_chain(s, cap)
        edges += [(u + offset, v + offset) for u, v in chain.edges()]
        edges.append((2, offset + l_chain_anchor(s)))
        offset += chain.n
    return _build(offset, edges, cap)


def prime_factors(q: int) -> list[int]:
    if q < 1:
        raise ValueError("q must be positive")
    out = []
    p = 2
    while p * p <= q:
        while q % p == 0:
            out.append(p)
            q //= p
        p += 1
    if q > 1:
        out.append(q)
    return out


def prime_factor(q: int, signed: bool = True, cap: int = DEFAULT_CAP) -> Graph:
    """Connected graph with ``|I(G;-1)| = q`` and cyclomatic number
    ``sum(p - 1)`` over the prime factors of ``q`` with multiplicity.

    With ``signed`` the value is made exactly ``q`` by one sign-flipping
    transform, which leaves the cyclomatic number unchanged.  Large prime
    factors need more than the default vertex cap (``3p`` vertices for the
    chain of a prime ``p``); pass a larger ``cap`` for those.
    """
    factors = prime_factors(q)
    g = chain_product([p - 1 for p in factors], cap)
    if signed:
        sign = -1
        for p in factors:
            sign *= (-1) ** (p - 1)
        if sign < 0:
            g = transform_h1(g, 0, cap)
    return g


def lemma4_g2(nu: int, q: int) -> Graph:
    """Connected graph with cyclomatic number ``nu`` and value
    ``(-1)^q (2^q - 1)``: a ``w_star(q)`` (or ``K2``/``K1`` for ``q`` = 1/0)
    lifted to cyclomatic number ``nu`` by value-preserving transforms."""
    if not 0 <= q <= nu:
        raise GraphError("need 0 <= q <= nu")
    if q >= 2:
        g, base_nu = w_star(q), q
    elif q == 1:
        g, base_nu = K2, 0
    else:
        g, base_nu = K1, 0
    for _ in range(nu - base_nu):
        g = transform_h2(g, 0)
    return g


def cycle_with_tail(n: int) -> Graph:
    """Cycle ``0..n-1`` plus the path ``n+2 - n+1 - n`` with ``n`` joined to
    cycle vertex 0.  Value ``-I(C_n;-1)``."""
    if n < 4:
        raise GraphError("cycle_with_tail needs n >= 4")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(0, n), (n, n + 1), (n + 1, n + 2)]
    return _build(n + 3, edges)


FIG22_G_EDGES = (
    (0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (2, 6), (6, 7),
    (2, 7), (2, 8), (8, 10), (8, 11), (10, 11), (3, 9), (4, 9),
)
FIG22_G_PIVOT = 2


def fig22_g() -> Graph:
    """12 vertices, 14 edges, cyclomatic number 3 and ``I(G;-1) = 5``.

    Deleting vertex 2 leaves ``P3``, ``K2`` and two triangles; deleting its
    closed neighbourhood leaves three disjoint edges.
    """
    return Graph.from_edge_list(12, FIG22_G_EDGES)


def q_triangles(q: int) -> Graph:
    return disjoint_union([K3] * q)
