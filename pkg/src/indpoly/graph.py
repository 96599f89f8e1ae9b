"""Immutable simple graphs stored as bit-set adjacency rows.

Row ``adj[v]`` is an ``int`` whose set bits are the open neighbourhood of
``v``.  Every deletion returns a fresh graph whose surviving vertices are
relabelled ``0..n'-1`` in their original order.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional, Sequence, Tuple

DEFAULT_CAP = 64

INFINITY = float("inf")


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class GraphTooLargeError(GraphError):
    """Vertex count exceeds the configured cap."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Use :meth:`from_edge_list` to build one from user data; the plain
    constructor validates its rows as well but is meant for internal use.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int], cap: int = DEFAULT_CAP):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        if n > cap:
            raise GraphTooLargeError(f"{n} vertices exceeds cap {cap}")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= {n}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = tuple(adj)
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, adj: Tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        g._hash = None
        return g

    @classmethod
    def from_edge_list(
        cls, n: int, edges: Iterable[Tuple[int, int]], cap: int = DEFAULT_CAP
    ) -> "Graph":
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        if n > cap:
            raise GraphTooLargeError(f"{n} vertices exceeds cap {cap}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop edge at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, tuple(adj))

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls._trusted(n, (0,) * n)

    # -- value semantics -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph._trusted, (self.n, self.adj))

    # -- basic queries ---------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[Tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return popcount(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    # -- deletions -------------------------------------------------------

    def induced(self, keep: int) -> "Graph":
        """Subgraph induced by the vertex mask ``keep``, relabelled in order."""
        keep &= self.vertex_mask
        if keep == self.vertex_mask:
            return self
        index = {}
        for i, v in enumerate(iter_bits(keep)):
            index[v] = i
        rows = []
        adj = self.adj
        for v in index:
            row = 0
            for u in iter_bits(adj[v] & keep):
                row |= 1 << index[u]
            rows.append(row)
        return Graph._trusted(len(rows), tuple(rows))

    def delete_vertices(self, vertices: Iterable[int]) -> "Graph":
        drop = 0
        for v in vertices:
            self._check_vertex(v)
            drop |= 1 << v
        return self.induced(self.vertex_mask & ~drop)

    def delete_closed_neighborhood(self, v: int) -> "Graph":
        """``G - N[v]``."""
        self._check_vertex(v)
        return self.induced(self.vertex_mask & ~self.closed_neighborhood(v))

    def delete_edge(self, u: int, v: int) -> "Graph":
        """``G - uv``; the vertex set is unchanged."""
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._trusted(self.n, tuple(adj))

    def delete_edge_neighborhoods(self, u: int, v: int) -> "Graph":
        """``G - (N(u) | N(v))``; removes ``u`` and ``v`` as well."""
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        return self.induced(self.vertex_mask & ~(self.adj[u] | self.adj[v]))

    # -- connectivity ----------------------------------------------------

    def component_masks(self) -> list[int]:
        """Vertex masks of connected components, ordered by smallest vertex."""
        remaining = self.vertex_mask
        adj = self.adj
        comps = []
        while remaining:
            frontier = remaining & -remaining
            comp = frontier
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            comps.append(comp)
            remaining &= ~comp
        return comps

    def connected_components(self) -> list["Graph"]:
        return [self.induced(m) for m in self.component_masks()]

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.component_masks()) == 1

    # -- structural queries ---------------------------------------------

    def pendant_mask(self) -> int:
        mask = 0
        for v, row in enumerate(self.adj):
            if row and not row & (row - 1):
                mask |= 1 << v
        return mask

    def pendant_vertices(self) -> frozenset[int]:
        return frozenset(iter_bits(self.pendant_mask()))

    def bfs_distances(self, source: int) -> list[Optional[int]]:
        self._check_vertex(source)
        dist: list[Optional[int]] = [None] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for u in iter_bits(self.adj[v]):
                if dist[u] is None:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return dist

    def distance(self, u: int, v: int) -> float:
        """Shortest-path edge count, ``math.inf`` across components."""
        self._check_vertex(v)
        d = self.bfs_distances(u)[v]
        return INFINITY if d is None else d

    def degree_sequence(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def is_path(self) -> Optional[int]:
        """Return ``n`` if the graph is exactly ``P_n``, else ``None``."""
        if self.n == 0 or not self.is_connected():
            return None
        if self.edge_count != self.n - 1:
            return None
        if self.n <= 2 or all(d <= 2 for d in self.degree_sequence()):
            return self.n
        return None

    def is_cycle(self) -> Optional[int]:
        """Return ``n`` if the graph is exactly ``C_n`` (``n >= 3``), else ``None``."""
        if self.n < 3 or not self.is_connected():
            return None
        if all(d == 2 for d in self.degree_sequence()):
            return self.n
        return None


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return Graph.from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    edges = []
    start = 0
    bounds = []
    for s in sizes:
        bounds.append((start, start + s))
        start += s
    for i, (a0, a1) in enumerate(bounds):
        for b0, b1 in bounds[i + 1:]:
            edges.extend((u, v) for u in range(a0, a1) for v in range(b0, b1))
    return Graph.from_edge_list(start, edges)
