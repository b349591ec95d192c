"""Simple undirected graphs stored as adjacency bitmasks.

Vertices are ``0..n-1``; ``adj[u]`` is an int whose bit ``v`` is set when
``uv`` is an edge.  Graphs are immutable and hashable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 62


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input.

    ``location`` is a byte offset (graph6) or a 1-based line number
    (edge lists).
    """

    def __init__(self, message: str, location: int | None = None):
        self.location = location
        if location is not None:
            message = f"{message} (at {location})"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {u} has a neighbor outside the graph")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in iter_bits(row):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Graph with vertex ``u`` renamed to ``perm[u]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


# graph6 -------------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (short form only, n <= 62)."""
    line = text.strip()
    offset = 0
    if line.startswith(">>graph6<<"):
        offset = len(">>graph6<<")
    data = line[offset:]
    if not data:
        raise GraphFormatError("empty graph6 string", offset)
    for k, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {ch!r} outside graph6 range", offset + k)
    if data[0] == "~":
        raise GraphFormatError("long-form size field (n > 62) is not supported", offset)
    n = ord(data[0]) - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"truncated body: need {nbytes} bytes for n={n}, got {len(body)}",
            offset + 1 + len(body),
        )
    if len(body) > nbytes:
        raise GraphFormatError("trailing garbage after graph6 body", offset + 1 + nbytes)

    bits = 0
    for ch in body:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = 6 * nbytes - nbits
    if bits & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits", offset + nbytes)
    bits >>= pad

    adj = [0] * n
    k = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if bits >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k -= 1
    return Graph(n, tuple(adj))


def write_graph6(g: Graph) -> str:
    if g.n > MAX_VERTICES:
        raise ValueError(f"graph6 short form supports n <= {MAX_VERTICES}")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(g.adj[u] >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except GraphFormatError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from exc


# edge lists ---------------------------------------------------------------

_HEADER = re.compile(r"^n\s+(\d+)$")
_EDGE = re.compile(r"^(\d+)\s+(\d+)$")


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``u v`` lines; ``#`` starts a comment."""
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = _HEADER.match(line)
            if not m:
                raise GraphFormatError("expected header 'n <count>'", lineno)
            n = int(m.group(1))
            if n > MAX_VERTICES:
                raise GraphFormatError(f"n={n} exceeds {MAX_VERTICES}", lineno)
            continue
        m = _EDGE.match(line)
        if not m:
            raise GraphFormatError(f"unparsable line {raw!r}", lineno)
        u, v = int(m.group(1)), int(m.group(2))
        if u >= n or v >= n:
            raise GraphFormatError(f"vertex index out of range for n={n}", lineno)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", lineno)
        edges.add((min(u, v), max(u, v)))
    if n is None:
        raise GraphFormatError("missing header 'n <count>'", 1)
    return Graph.from_edges(n, sorted(edges))


# operations ---------------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, w: int) -> Graph:
    """Subgraph on the vertex set ``w``, re-indexed in ascending original order."""
    keep = list(iter_bits(w & g.vertex_mask))
    index = {v: k for k, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in iter_bits(g.adj[v] & w):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(keep), tuple(adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, g.vertex_mask & ~(1 << v))


def enumerate_path_monomials(g: Graph, t: int) -> set[int]:
    """Vertex sets (as bitmasks) of simple paths with ``t`` vertices.

    A path and every other traversal covering the same vertices collapse to
    one entry.  Only paths starting at their smaller endpoint are grown, which
    halves the DFS without losing any vertex set.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    found: set[int] = set()
    if t > g.n:
        return found
    adj = g.adj

    def grow(start: int, last: int, used: int, length: int):
        if length == t:
            if last > start:
                found.add(used)
            return
        for v in iter_bits(adj[last] & ~used):
            grow(start, v, used | (1 << v), length + 1)

    for s in range(g.n):
        grow(s, s, 1 << s, 1)
    return found


# common named graphs, handy in tests and the CLI ---------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(k, k + 1) for k in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(k, (k + 1) % n) for k in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph.from_edges(leaves + 1, [(0, k) for k in range(1, leaves + 1)])


def cricket_graph() -> Graph:
    """Triangle 2-3-4 with two pendant vertices 0, 1 on vertex 2."""
    return Graph.from_edges(5, [(0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def disjoint_edges(k: int) -> Graph:
    return Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])
