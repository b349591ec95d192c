"""Exhaustive generation of small graphs up to isomorphism, and graph6 corpus I/O."""

from __future__ import annotations

from pathlib import Path
from typing import Callable, Iterable, Iterator

from .graph import Graph, iter_bits, read_graph6_lines, write_graph6

MAX_BUILTIN_N = 7


def vertex_invariant(g: Graph, v: int) -> tuple:
    nb = g.adj[v]
    triangles = sum((g.adj[u] & nb).bit_count() for u in iter_bits(nb)) // 2
    return (g.degree(v), triangles, tuple(sorted(g.degree(u) for u in iter_bits(nb))))


def graph_invariant(g: Graph) -> tuple:
    return (g.n, g.edge_count(), tuple(sorted(vertex_invariant(g, v) for v in range(g.n))))


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A bijection ``perm`` with ``g.relabel(perm) == h``, or None.

    Backtracking that only pairs vertices with equal local invariants and
    checks adjacency against every vertex already placed.
    """
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    inv_g = [vertex_invariant(g, v) for v in range(g.n)]
    inv_h = [vertex_invariant(h, v) for v in range(h.n)]
    if sorted(inv_g) != sorted(inv_h):
        return None
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    perm = [-1] * g.n
    used = 0

    def place(k: int) -> bool:
        nonlocal used
        if k == g.n:
            return True
        v = order[k]
        for w in range(h.n):
            if used >> w & 1 or inv_h[w] != inv_g[v]:
                continue
            if any(
                g.has_edge(v, u) != h.has_edge(w, perm[u])
                for u in order[:k]
            ):
                continue
            perm[v] = w
            used |= 1 << w
            if place(k + 1):
                return True
            used &= ~(1 << w)
            perm[v] = -1
        return False

    return list(perm) if place(0) else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


class IsoClassSet:
    """Representatives of isomorphism classes, bucketed by invariant."""

    def __init__(self):
        self._buckets: dict[tuple, list[Graph]] = {}
        self.graphs: list[Graph] = []

    def add(self, g: Graph) -> bool:
        bucket = self._buckets.setdefault(graph_invariant(g), [])
        if any(is_isomorphic(g, h) for h in bucket):
            return False
        bucket.append(g)
        self.graphs.append(g)
        return True

    def __len__(self):
        return len(self.graphs)


def one_vertex_extensions(g: Graph) -> Iterator[Graph]:
    """Every graph obtained by adding vertex ``g.n`` with any neighbor set."""
    n = g.n
    for nbrs in range(1 << n):
        adj = [row | ((nbrs >> u & 1) << n) for u, row in enumerate(g.adj)]
        adj.append(nbrs)
        yield Graph(n + 1, tuple(adj))


def extend_classes(
    graphs: Iterable[Graph], keep: Callable[[Graph], bool] | None = None
) -> list[Graph]:
    """Isomorphism classes on ``n + 1`` vertices reachable by adding one vertex.

    When every class on ``n`` vertices is supplied this is every class on
    ``n + 1`` vertices.  ``keep`` filters candidates; for a property closed
    under induced subgraphs, feeding only the classes with that property
    still reaches all of them.
    """
    classes = IsoClassSet()
    for g in graphs:
        for h in one_vertex_extensions(g):
            if keep is None or keep(h):
                classes.add(h)
    return classes.graphs


def generate_all_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of simple graphs on ``n`` vertices."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_BUILTIN_N:
        raise ValueError(
            f"built-in generation is capped at n = {MAX_BUILTIN_N}; ingest a graph6 file instead"
        )
    graphs = [Graph.empty(0)]
    for _ in range(n):
        graphs = extend_classes(graphs)
    return graphs


def generate_up_to(n: int) -> list[Graph]:
    out = []
    for k in range(n + 1):
        out.extend(generate_all_graphs(k))
    return out


def read_graph6_file(path: str | Path) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return list(read_graph6_lines(fh))


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(write_graph6(g) + "\n")
            count += 1
    return count
