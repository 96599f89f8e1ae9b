"""graph6 and edge-list encodings."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .graph import DEFAULT_CAP, Graph, GraphError, GraphTooLargeError

HEADER = b">>graph6<<"


class FormatError(GraphError):
    pass


def _as_bytes(data: Union[str, bytes]) -> bytes:
    if isinstance(data, str):
        try:
            return data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise FormatError(f"non-ASCII character at offset {exc.start}") from None
    return bytes(data)


def _decode_n(data: bytes, cap: int) -> tuple[int, int]:
    if not data:
        raise FormatError("empty graph6 string")
    first = data[0]
    if first < 63 or first > 126:
        raise FormatError(f"malformed byte {first!r} at offset 0")
    if first != 126:
        n, pos = first - 63, 1
    else:
        if len(data) >= 2 and data[1] == 126:
            width, pos = 6, 2
        else:
            width, pos = 3, 1
        if len(data) < pos + width:
            raise FormatError("truncated vertex count")
        n = 0
        for i in range(pos, pos + width):
            b = data[i]
            if b < 63 or b > 126:
                raise FormatError(f"malformed byte {b!r} at offset {i}")
            n = (n << 6) | (b - 63)
        pos += width
    if n > cap:
        raise GraphTooLargeError(f"graph6 string has {n} vertices, cap is {cap}")
    return n, pos


def parse_graph6(line: Union[str, bytes], cap: int = DEFAULT_CAP) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` header is skipped)."""
    data = _as_bytes(line).strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    n, pos = _decode_n(data, cap)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise FormatError(f"truncated payload: need {nbytes} bytes, got {len(body)}")
    if len(body) > nbytes:
        raise FormatError(f"trailing data at offset {pos + nbytes}")
    bits = 0
    for i, b in enumerate(body):
        if b < 63 or b > 126:
            raise FormatError(f"malformed byte {b!r} at offset {pos + i}")
        bits = (bits << 6) | (b - 63)
    pad = nbytes * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits")
    bits >>= pad
    adj = [0] * n
    k = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if bits >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k -= 1
    return Graph._trusted(n, tuple(adj))


def write_graph6(g: Graph) -> bytes:
    n = g.n
    if n <= 62:
        out = bytearray((n + 63,))
    elif n <= 258047:
        out = bytearray((126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)))
    else:
        raise FormatError("graph too large for graph6")
    bits = 0
    nbits = 0
    adj = g.adj
    for v in range(1, n):
        row = adj[v]
        for u in range(v):
            bits = (bits << 1) | (row >> u & 1)
            nbits += 1
    pad = -nbits % 6
    bits <<= pad
    nbytes = (nbits + pad) // 6
    for i in range(nbytes - 1, -1, -1):
        out.append(63 + (bits >> (6 * i) & 63))
    return bytes(out)


def graph6_str(g: Graph) -> str:
    return write_graph6(g).decode("ascii")


def iter_graph6(lines: Iterable[Union[str, bytes]], cap: int = DEFAULT_CAP) -> Iterator[Graph]:
    for line in lines:
        stripped = _as_bytes(line).strip()
        if stripped:
            yield parse_graph6(stripped, cap)


def parse_edge_list(text: str, cap: int = DEFAULT_CAP) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line (0-based).

    Blank lines and ``#`` comments are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise FormatError("empty edge list")
    lineno, head = rows[0]
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
        raise FormatError(f"line {lineno}: expected 'n <count>'")
    n = int(head[1])
    edges = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: vertices must be integers") from None
        edges.append((u, v))
    try:
        return Graph.from_edge_list(n, edges, cap=cap)
    except GraphTooLargeError:
        raise
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GraphDocument:
    source_format: str
    graph: Graph

    def serialize(self) -> str:
        if self.source_format == "graph6":
            return graph6_str(self.graph) + "\n"
        return write_edge_list(self.graph)


def parse_graphs(text: str, cap: int = DEFAULT_CAP) -> list[GraphDocument]:
    """Read either one edge list (first token ``n``) or graph6 lines."""
    stripped = text.lstrip()
    if stripped.startswith("n ") or stripped.startswith("n\t"):
        return [GraphDocument("edge-list", parse_edge_list(text, cap))]
    return [GraphDocument("graph6", g) for g in iter_graph6(text.splitlines(), cap)]
