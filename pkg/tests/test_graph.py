import random
from itertools import combinations, permutations

import networkx as nx
import pytest

from pathreg.graph import (
    Graph,
    GraphFormatError,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_edges,
    enumerate_path_monomials,
    induced_subgraph,
    parse_edge_list,
    parse_graph6,
    path_graph,
    star_graph,
    write_graph6,
)

from .conftest import random_graph


def brute_force_paths(g: Graph, t: int) -> set[int]:
    """Vertex sets of t-vertex sequences with consecutive adjacency."""
    out = set()
    for verts in combinations(range(g.n), t):
        for order in permutations(verts):
            if all(g.has_edge(a, b) for a, b in zip(order, order[1:])):
                out.add(sum(1 << v for v in verts))
                break
    return out


class TestGraph6:
    @pytest.mark.parametrize(
        "text, graph",
        [
            ("A_", complete_graph(2)),
            ("A?", Graph.empty(2)),
            ("Bw", complete_graph(3)),
            ("?", Graph.empty(0)),
        ],
    )
    def test_known_encodings(self, text, graph):
        assert parse_graph6(text) == graph
        assert write_graph6(graph) == text

    def test_header_is_stripped(self):
        assert parse_graph6(">>graph6<<Bw") == complete_graph(3)

    def test_agrees_with_networkx(self):
        rng = random.Random(7)
        for _ in range(100):
            g = random_graph(rng.randint(0, 20), rng.random(), rng)
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(g.edges())
            ours = write_graph6(g)
            assert ours == nx.to_graph6_bytes(h, header=False).decode().strip()
            back = nx.from_graph6_bytes(ours.encode())
            assert sorted(tuple(sorted(e)) for e in back.edges()) == g.edges()

    def test_round_trip(self):
        rng = random.Random(3)
        for n in list(range(0, 12)) + [62]:
            g = random_graph(n, 0.4, rng)
            assert parse_graph6(write_graph6(g)) == g

    @pytest.mark.parametrize(
        "text, offset",
        [
            ("B", 1),  # truncated body
            ("Bww", 2),  # trailing garbage
            ("~?", 0),  # long form
            ("B\x07", 1),  # byte outside range
            ("", 0),
        ],
    )
    def test_errors_carry_offsets(self, text, offset):
        with pytest.raises(GraphFormatError) as exc:
            parse_graph6(text)
        assert exc.value.location == offset

    def test_rejects_large_n(self):
        with pytest.raises(ValueError):
            Graph.empty(63)


class TestEdgeList:
    def test_path(self):
        assert parse_edge_list("n 3\n0 1\n1 2") == path_graph(3)

    def test_comment_only(self):
        assert parse_edge_list("n 2\n# none") == Graph.empty(2)

    def test_duplicates_collapse(self):
        assert parse_edge_list("# header next\nn 3\n0 1\n1 0  # again\n1 2\n") == path_graph(3)

    @pytest.mark.parametrize(
        "text, line",
        [("n 2\n0 0", 2), ("n 2\n0 5", 2), ("n 2\n0 1\nfoo", 3), ("0 1", 1)],
    )
    def test_errors(self, text, line):
        with pytest.raises(GraphFormatError) as exc:
            parse_edge_list(text)
        assert exc.value.location == line


class TestOperations:
    def test_complement_of_c4_is_two_edges(self):
        assert complement(cycle_graph(4)) == disjoint_edges(2).relabel([0, 2, 1, 3])

    def test_c5_self_complementary(self):
        c = complement(cycle_graph(5))
        assert any(cycle_graph(5).relabel(p) == c for p in permutations(range(5)))

    def test_complement_involution_exhaustive_small(self):
        for n in range(6):
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            for mask in range(1 << len(pairs)):
                g = Graph.from_edges(n, [e for k, e in enumerate(pairs) if mask >> k & 1])
                assert complement(complement(g)) == g

    def test_complement_involution_random(self):
        rng = random.Random(11)
        for _ in range(200):
            g = random_graph(rng.randint(6, 10), rng.random(), rng)
            assert complement(complement(g)) == g

    def test_induced_subgraph(self):
        assert induced_subgraph(cycle_graph(5), 0b111) == path_graph(3)
        assert induced_subgraph(complete_graph(4), 0b11) == complete_graph(2)
        g = cycle_graph(6)
        assert induced_subgraph(g, g.vertex_mask) == g

    def test_induced_subgraph_reindexes_in_order(self):
        g = Graph.from_edges(5, [(1, 4), (3, 4)])
        assert induced_subgraph(g, 0b11010).edges() == [(0, 2), (1, 2)]


class TestPathMonomials:
    def test_p4(self):
        assert enumerate_path_monomials(path_graph(4), 3) == {0b0111, 0b1110}

    def test_triangle_has_one_monomial(self):
        assert enumerate_path_monomials(complete_graph(3), 3) == {0b111}

    def test_star_has_no_four_paths(self):
        assert enumerate_path_monomials(star_graph(3), 4) == set()

    def test_t_larger_than_n(self):
        assert enumerate_path_monomials(path_graph(3), 4) == set()

    def test_t_two_gives_edges(self):
        rng = random.Random(5)
        for _ in range(50):
            g = random_graph(rng.randint(2, 9), rng.random(), rng)
            assert enumerate_path_monomials(g, 2) == {(1 << u) | (1 << v) for u, v in g.edges()}

    @pytest.mark.parametrize("n", range(3, 8))
    def test_complete_graph_gives_all_subsets(self, n):
        g = complete_graph(n)
        for t in range(2, n + 1):
            assert enumerate_path_monomials(g, t) == {
                sum(1 << v for v in c) for c in combinations(range(n), t)
            }

    def test_matches_brute_force(self):
        rng = random.Random(13)
        for _ in range(60):
            g = random_graph(rng.randint(2, 7), rng.random(), rng)
            for t in range(2, g.n + 1):
                assert enumerate_path_monomials(g, t) == brute_force_paths(g, t)

    def test_relabeling_maps_monomials(self):
        rng = random.Random(17)
        for _ in range(40):
            g = random_graph(rng.randint(3, 8), 0.5, rng)
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = g.relabel(perm)
            for t in range(2, g.n + 1):
                mapped = {
                    sum(1 << perm[v] for v in range(g.n) if m >> v & 1)
                    for m in enumerate_path_monomials(g, t)
                }
                assert mapped == enumerate_path_monomials(h, t)

    def test_rejects_small_t(self):
        with pytest.raises(ValueError):
            enumerate_path_monomials(path_graph(3), 1)


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))
