"""Immutable simple undirected connected graphs plus edge-list / graph6 I/O.

Vertices are always the contiguous integers 0..n-1.  Disconnected input and
graphs with fewer than two vertices are rejected everywhere: every invariant
downstream assumes a connected graph of order >= 2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    Disconnected,
    InvalidGraph6,
    MalformedLine,
    OrderTooSmall,
    SelfLoop,
    VertexOutOfRange,
)

GRAPH6_HEADER = ">>graph6<<"
_GRAPH6_MAX_N = 62  # short form only


@dataclass(frozen=True)
class Graph:
    """Connected simple graph on vertices 0..n-1 with per-vertex neighbor sets.

    Instances are validated on construction (symmetry, no loops, connectivity)
    and immutable afterwards, so they can be shared freely across workers.
    Use :meth:`from_edges` rather than the raw constructor.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise OrderTooSmall(f"graph order {self.n} < 2")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise SelfLoop(f"vertex {v} is adjacent to itself")
            for u in nbrs:
                if not (0 <= u < self.n):
                    raise VertexOutOfRange(f"neighbor {u} of vertex {v} outside 0..{self.n - 1}")
                if v not in self.adj[u]:
                    raise ValueError(f"adjacency not symmetric for edge ({u}, {v})")
        if not self._is_connected():
            raise Disconnected("graph is not connected")

    def _is_connected(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for u in self.adj[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == self.n

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge iterable; duplicate edges collapse."""
        if n < 2:
            raise OrderTooSmall(f"graph order {n} < 2")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v)

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def check_vertices(self, vertices: Iterable[int]) -> None:
        for v in vertices:
            if not (0 <= v < self.n):
                raise VertexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")


def parse_edgelist(text: str) -> Graph:
    """Parse the line-oriented edge-list format.

    The first non-comment line must be "n <count>"; every following
    non-empty, non-comment line holds one edge "u v".  Lines starting with
    '#' are comments.  Duplicate edges collapse silently.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise MalformedLine(f"expected header 'n <count>', got {line!r}")
            try:
                n = int(tokens[1])
            except ValueError:
                raise MalformedLine(f"bad vertex count in header {line!r}") from None
            continue
        if len(tokens) != 2:
            raise MalformedLine(f"expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise MalformedLine(f"non-integer vertex label in {line!r}") from None
        edges.append((u, v))
    if n is None:
        raise MalformedLine("no 'n <count>' header found")
    return Graph.from_edges(n, edges)


def _pair_order(n: int) -> Iterator[tuple[int, int]]:
    # graph6 bit order: upper triangle, column major
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(line: str) -> Graph:
    """Decode one short-form graph6 string (n <= 62) into a Graph."""
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise InvalidGraph6("empty graph6 string")
    for ch in s:
        if not (63 <= ord(ch) <= 126):
            raise InvalidGraph6(f"character {ch!r} outside graph6 alphabet")
    first = ord(s[0]) - 63
    if first == 63:
        # 126 introduces the long form (n > 62)
        raise InvalidGraph6("long-form graph6 (n > 62) is not supported")
    n = first
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = s[1:]
    if len(body) != nbytes:
        raise InvalidGraph6(f"expected {nbytes} data characters for n={n}, got {len(body)}")
    bits: list[int] = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[npairs:]):
        raise InvalidGraph6("nonzero padding bits")
    edges = [(i, j) for (i, j), bit in zip(_pair_order(n), bits) if bit]
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode a Graph as a short-form graph6 string (inverse of parse_graph6)."""
    if g.n > _GRAPH6_MAX_N:
        raise InvalidGraph6(f"short-form graph6 supports n <= {_GRAPH6_MAX_N}, got {g.n}")
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _pair_order(g.n)]
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for bit in bits[k:k + 6]:
            val = (val << 1) | bit
        chars.append(chr(63 + val))
    return "".join(chars)
