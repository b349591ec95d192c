import random
from math import comb

import pytest

from pathreg.betti import (
    GF2,
    INF,
    QQ,
    BettiTable,
    EngineCapError,
    FieldSpec,
    SimplicialComplex,
    betti_hochster,
    betti_table,
    betti_upper_koszul,
    compare_fields,
    hilbert_numerator,
    linearity_steps,
    numerator_from_table,
    reduced_homology_dims,
    regularity,
    stanley_reisner,
)
from pathreg.graph import complete_graph, cycle_graph, disjoint_edges, path_graph
from pathreg.ideal import MonomialIdeal, add_monomial, colon, edge_ideal, path_ideal, zero_ideal

from .conftest import random_ideal

a, b, c, d = (1 << k for k in range(4))
FIELDS = [GF2, QQ, FieldSpec(3)]


def ideal(*gens, n=4):
    return MonomialIdeal(n, frozenset(gens))


def numerator_from_faces(i: MonomialIdeal) -> list[int]:
    """Hilbert numerator of S/I as sum over faces F of t^|F| (1 - t)^(n - |F|)."""
    n = i.ambient_n
    coeffs = [0] * (n + 1)
    for f in stanley_reisner(i).faces:
        k = f.bit_count()
        for r in range(n - k + 1):
            coeffs[k + r] += (-1) ** r * comb(n - k, r)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class TestFieldSpec:
    def test_parse(self):
        assert FieldSpec.parse("GF(2)") == GF2
        assert FieldSpec.parse("qq") == QQ
        assert FieldSpec.parse("gf(5)") == FieldSpec(5)
        with pytest.raises(ValueError):
            FieldSpec.parse("GF(4)")
        with pytest.raises(ValueError):
            FieldSpec.parse("reals")


class TestStanleyReisner:
    def test_single_edge(self):
        assert stanley_reisner(ideal(a | b, n=2)).faces == {0, a, b}

    def test_triangle_edge_ideal(self):
        sr = stanley_reisner(edge_ideal(complete_graph(3)))
        assert sr.faces == {0, 1, 2, 4}

    def test_zero_ideal_is_full_simplex(self):
        assert stanley_reisner(zero_ideal(2)).faces == {0, 1, 2, 3}

    def test_minimal_non_faces_are_generators(self):
        rng = random.Random(0)
        for _ in range(50):
            i = random_ideal(rng)
            faces = stanley_reisner(i).faces
            non_faces = [m for m in range(1 << i.ambient_n) if m not in faces]
            minimal = {m for m in non_faces if not any(f != m and f & ~m == 0 for f in non_faces)}
            assert minimal == i.gens

    def test_unit_ideal_rejected(self):
        with pytest.raises(ValueError):
            stanley_reisner(ideal(0))


class TestHomology:
    @pytest.mark.parametrize("field", FIELDS)
    def test_conventions(self, field):
        assert reduced_homology_dims(SimplicialComplex(3, frozenset()), field) == {}
        assert reduced_homology_dims(SimplicialComplex(3, frozenset([0])), field) == {-1: 1}
        assert reduced_homology_dims(SimplicialComplex(2, frozenset([0, 1, 2])), field) == {0: 1}
        hollow = SimplicialComplex(3, frozenset([0, 1, 2, 4, 3, 5, 6]))
        assert reduced_homology_dims(hollow, field) == {1: 1}
        full = SimplicialComplex(3, frozenset(range(8)))
        assert reduced_homology_dims(full, field) == {}

    def test_projective_plane_is_field_sensitive(self):
        # 6-vertex triangulation of RP^2: H1 = Z/2, so GF(2) sees H1 and H2, QQ sees nothing
        tris = [
            (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
            (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3),
        ]
        faces = set()
        for tri in tris:
            m = sum(1 << v for v in tri)
            sub = m
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & m
        rp2 = SimplicialComplex(6, frozenset(faces))
        assert reduced_homology_dims(rp2, GF2) == {1: 1, 2: 1}
        assert reduced_homology_dims(rp2, QQ) == {}
        assert reduced_homology_dims(rp2, FieldSpec(3)) == {}


class TestBettiExamples:
    @pytest.mark.parametrize("field", FIELDS)
    @pytest.mark.parametrize(
        "i, expected",
        [
            (ideal(a | b), {(0, 2): 1}),
            (ideal(a | b, b | c), {(0, 2): 2, (1, 3): 1}),
            (ideal(a | b, c | d), {(0, 2): 2, (1, 4): 1}),
            (edge_ideal(disjoint_edges(2)), {(0, 2): 2, (1, 4): 1}),
            (edge_ideal(cycle_graph(5)), {(0, 2): 5, (1, 3): 5, (2, 5): 1}),
            (path_ideal(path_graph(4), 3), {(0, 3): 2, (1, 4): 1}),
        ],
    )
    def test_both_routes(self, i, expected, field):
        assert betti_hochster(i, field).entries == expected
        assert betti_upper_koszul(i, field).entries == expected

    def test_regularity_examples(self):
        assert regularity(ideal(a | b)) == 2
        assert regularity(edge_ideal(disjoint_edges(2))) == 3
        assert regularity(path_ideal(path_graph(4), 3)) == 3
        assert regularity(edge_ideal(path_graph(4))) == 2
        assert regularity(edge_ideal(cycle_graph(5))) == 3

    def test_linearity_step_examples(self):
        assert linearity_steps(ideal(a | b, b | c)) == INF
        assert linearity_steps(edge_ideal(disjoint_edges(2))) == 0
        # fails first at homological degree 2, j = 5
        assert linearity_steps(edge_ideal(cycle_graph(5))) == 1
        with pytest.raises(ValueError):
            linearity_steps(ideal(a, b | c))

    def test_hilbert_numerator_examples(self):
        assert hilbert_numerator(ideal(a | b)) == [1, 0, -1]
        assert hilbert_numerator(ideal(a | b, b | c)) == [1, 0, -2, 1]
        assert hilbert_numerator(zero_ideal(3)) == [1]

    def test_hilbert_numerator_cap(self):
        big = MonomialIdeal(7, frozenset((1 << u) | (1 << v) for u in range(7) for v in range(u + 1, 7)))
        with pytest.raises(ValueError):
            hilbert_numerator(big, max_generators=20)
        assert hilbert_numerator(big, max_generators=None) == numerator_from_faces(big)

    def test_errors(self):
        with pytest.raises(ValueError):
            betti_hochster(zero_ideal(3))
        with pytest.raises(ValueError):
            betti_upper_koszul(ideal(0))
        with pytest.raises(EngineCapError):
            betti_hochster(MonomialIdeal(17, frozenset([3])))
        assert betti_hochster(MonomialIdeal(17, frozenset([3])), cap=None).entries == {(0, 2): 1}


class TestBettiProperties:
    def test_random_ideals_all_routes(self):
        rng = random.Random(42)
        for _ in range(120):
            i = random_ideal(rng, max_vars=7)
            field = rng.choice(FIELDS)
            h = betti_hochster(i, field)
            assert h == betti_upper_koszul(i, field)
            assert h == betti_hochster(i, field, prune=False)
            assert numerator_from_table(h) == hilbert_numerator(i) == numerator_from_faces(i)

    def test_table_invariants(self):
        rng = random.Random(8)
        for _ in range(100):
            i = random_ideal(rng)
            t = betti_table(i)
            degrees = [g.bit_count() for g in i.gens]
            assert t.initial_degree() == min(degrees)
            for deg in set(degrees):
                assert t[(0, deg)] == degrees.count(deg)
            assert t.regularity() >= max(degrees)
            if len(set(degrees)) == 1:
                assert (t.regularity() == degrees[0]) == (t.linearity_steps() == INF)

    def test_isolated_variables_do_not_change_tables(self):
        rng = random.Random(5)
        for _ in range(60):
            i = random_ideal(rng, max_vars=6)
            wider = MonomialIdeal(i.ambient_n + 3, i.gens)
            assert betti_hochster(i).entries == betti_hochster(wider).entries
            assert betti_upper_koszul(i).entries == betti_upper_koszul(wider).entries

    def test_regularity_never_grows_when_adding_a_variable(self):
        rng = random.Random(28)
        for _ in range(100):
            i = random_ideal(rng)
            r = regularity(i)
            for x in range(i.ambient_n):
                bigger = add_monomial(i, 1 << x)
                assert regularity(bigger) <= r

    def test_colon_bound(self):
        rng = random.Random(29)
        checked = 0
        for _ in range(200):
            i = random_ideal(rng)
            m = rng.randrange(1, 1 << i.ambient_n)
            q = colon(i, m)
            if q.is_zero or q.is_unit:
                continue
            checked += 1
            r, rq, rs = regularity(i), regularity(q), regularity(add_monomial(i, m))
            assert r <= max(rq + m.bit_count(), rs)
            if m.bit_count() == 1:
                assert r in (rq + 1, rs)
        assert checked > 50

    def test_compare_fields_reports_no_discrepancy_on_graph_ideals(self):
        out = compare_fields(edge_ideal(cycle_graph(6)))
        assert out["discrepancies"] == []
        assert set(out["tables"]) == {"GF(2)", "QQ"}


class TestBettiTable:
    def test_triples_and_quotient(self):
        t = BettiTable({(1, 3): 1, (0, 2): 2})
        assert t.triples() == [[0, 2, 2], [1, 3, 1]]
        assert t.quotient_triples() == [[0, 0, 1], [1, 2, 2], [2, 3, 1]]
        assert BettiTable.from_triples(t.triples()) == t

    def test_zero_entries_dropped(self):
        assert BettiTable({(0, 2): 1, (1, 3): 0}).entries == {(0, 2): 1}
