"""Graph classes used as hypotheses: gap-, claw- and cricket-freeness,
chordality, and induced-cycle spectra."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from itertools import combinations

from .graph import Graph, complement, iter_bits

INF = math.inf


@dataclass(frozen=True)
class PropertyFlags:
    gap_free: bool
    claw_free: bool
    cricket_free: bool
    chordal: bool
    complement_chordal: bool

    def as_dict(self) -> dict:
        return asdict(self)


def property_flags(g: Graph) -> PropertyFlags:
    return PropertyFlags(
        gap_free=is_gap_free(g),
        claw_free=is_claw_free(g),
        cricket_free=is_cricket_free(g),
        chordal=is_chordal(g),
        complement_chordal=is_chordal(complement(g)),
    )


def find_gap(g: Graph) -> tuple[tuple[int, int], tuple[int, int]] | None:
    edges = g.edges()
    for k, (a, b) in enumerate(edges):
        near = g.adj[a] | g.adj[b] | (1 << a) | (1 << b)
        for c, d in edges[k + 1:]:
            if not near >> c & 1 and not near >> d & 1:
                return (a, b), (c, d)
    return None


def is_gap_free(g: Graph) -> bool:
    return find_gap(g) is None


def has_induced_c4(g: Graph) -> bool:
    """Brute-force scan of all 4-subsets for an induced 4-cycle."""
    for quad in combinations(range(g.n), 4):
        mask = sum(1 << v for v in quad)
        if all((g.adj[v] & mask).bit_count() == 2 for v in quad):
            # 2-regular on 4 vertices is C4 (the only alternative, 2K2, has degree 1)
            return True
    return False


def is_gap_free_via_complement(g: Graph) -> bool:
    return not has_induced_c4(complement(g))


def _independent_triple(g: Graph, candidates: int) -> bool:
    verts = list(iter_bits(candidates))
    for i, a in enumerate(verts):
        rest = candidates & ~g.adj[a]
        for b in verts[i + 1:]:
            if not rest >> b & 1:
                continue
            if rest & ~g.adj[b] & ~((1 << (b + 1)) - 1):
                return True
    return False


def is_claw_free(g: Graph) -> bool:
    return not any(
        g.degree(c) >= 3 and _independent_triple(g, g.adj[c]) for c in range(g.n)
    )


def is_cricket_free(g: Graph) -> bool:
    # center c, triangle c-a-b, two pendants p, q in N(c) adjacent to none of a, b, each other
    for c in range(g.n):
        nbrs = g.adj[c]
        if nbrs.bit_count() < 4:
            continue
        for a in iter_bits(nbrs):
            for b in iter_bits(nbrs & g.adj[a]):
                if b < a:
                    continue
                pend = nbrs & ~g.adj[a] & ~g.adj[b] & ~(1 << a) & ~(1 << b)
                for p in iter_bits(pend):
                    if pend & ~g.adj[p] & ~((1 << (p + 1)) - 1):
                        return False
    return True


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search; returns vertices in visit order."""
    weight = [0] * g.n
    unvisited = g.vertex_mask
    order = []
    while unvisited:
        v = max(iter_bits(unvisited), key=lambda u: (weight[u], -u))
        order.append(v)
        unvisited &= ~(1 << v)
        for u in iter_bits(g.adj[v] & unvisited):
            weight[u] += 1
    return order


def is_perfect_elimination(g: Graph, elimination: list[int]) -> bool:
    """Each vertex's later neighbors must form a clique."""
    later = g.vertex_mask
    for v in elimination:
        later &= ~(1 << v)
        nb = g.adj[v] & later
        for u in iter_bits(nb):
            if nb & ~g.adj[u] & ~(1 << u):
                return False
    return True


def is_chordal(g: Graph) -> bool:
    # reverse MCS visit order is a perfect elimination ordering iff g is chordal
    return is_perfect_elimination(g, mcs_order(g)[::-1])


def induced_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All induced cycles, each once, as canonical vertex sequences.

    A cycle is reported starting from its smallest vertex, in the direction
    whose second vertex is smaller.  Induced paths are grown from that
    smallest vertex over larger vertices only; a new vertex may touch the
    path only at its tail (and at the start, which closes the cycle).
    """
    cycles = []
    adj = g.adj
    for s in range(g.n):
        above = g.vertex_mask & ~((1 << (s + 1)) - 1)

        def extend(path: list[int], interior: int):
            last = path[-1]
            for v in iter_bits(adj[last] & above):
                if interior >> v & 1 or v in path:
                    continue
                touch = adj[v] & interior
                if touch:
                    continue
                if len(path) >= 2 and adj[v] >> s & 1:
                    if path[1] < v:
                        cycles.append(tuple(path) + (v,))
                    continue
                # path[1:] vertices other than the tail become forbidden neighbors
                extend(path + [v], interior | (1 << last if len(path) > 1 else 0))

        extend([s], 0)
    return sorted(cycles, key=lambda c: (len(c), c))


def induced_cycle_lengths(g: Graph) -> list[int]:
    return [len(c) for c in induced_cycles(g)]


def predicted_linearity_steps(g: Graph) -> float | int:
    """Steps of linearity of the edge ideal predicted from the complement's
    induced cycles: INF when the complement is chordal, else the shortest
    non-triangle induced cycle length minus 3."""
    if g.edge_count() == 0:
        raise ValueError("edge ideal of an edgeless graph is zero")
    long_cycles = [k for k in induced_cycle_lengths(complement(g)) if k >= 4]
    if not long_cycles:
        return INF
    return min(long_cycles) - 3
