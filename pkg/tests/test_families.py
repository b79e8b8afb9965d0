import pytest

from cutwiener import families as fam
from cutwiener.graph import has_triangle, vertex_distance, vertex_distances, wiener_index
from cutwiener.structure import count_cut_vertices, decompose
from cutwiener.verify import dumbbell_max_vertex_distance


class TestBuild:
    def test_lollipop_8_6(self):
        g = fam.build(fam.lollipop(8, 6))
        assert (g.n, g.num_edges, count_cut_vertices(g)) == (8, 8, 2)

    def test_dumbbell_4_4_9(self):
        g = fam.build(fam.dumbbell(4, 4, 9))
        assert g.n == 9 and count_cut_vertices(g) == 3

    def test_dumbbell_shared_vertex(self):
        g = fam.build(fam.dumbbell(3, 3, 5))
        dec = decompose(g)
        assert dec.cut_vertices == {0}
        assert sorted(len(b) for b in dec.blocks) == [3, 3]
        assert has_triangle(g)

    def test_forked(self):
        g = fam.build(fam.forked(8, 4))
        assert g.n == 8 and count_cut_vertices(g) == 3
        assert sorted(g.degree(v) for v in range(8)) == [1, 1, 2, 2, 2, 2, 3, 3]

    @pytest.mark.parametrize("n", range(5, 30))
    def test_cut_vertex_counts(self, n):
        for g in range(3, n + 1):
            assert count_cut_vertices(fam.build(fam.lollipop(n, g))) == n - g
        for m1 in range(3, n):
            for m2 in range(3, n + 2 - m1):
                spec = fam.dumbbell(m1, m2, n)
                assert count_cut_vertices(fam.build(spec)) == n + 2 - m1 - m2

    @pytest.mark.parametrize("kind, params", [
        ("path", (0,)), ("cycle", (2,)), ("star", (1,)), ("lollipop", (5, 2)), ("lollipop", (4, 5)),
        ("dumbbell", (2, 4, 9)), ("dumbbell", (4, 4, 6)), ("forked", (6, 4)), ("torus", (3,)), ("path", (3, 4)),
    ])
    def test_invalid_parameters(self, kind, params):
        with pytest.raises(fam.FamilyParameterError):
            fam.FamilySpec(kind, params)

    def test_too_large_to_build(self):
        spec = fam.cycle(80)
        assert fam.formula_wiener_cycle(80) == 80**3 // 8
        with pytest.raises(fam.FamilyParameterError):
            fam.build(spec)

    def test_labels(self):
        assert fam.lollipop(8, 6).label() == "L_8,6"
        assert fam.dumbbell(4, 5, 10).label() == "C^10_4,5"


class TestFormulaExamples:
    def test_path_vertex_distance(self):
        assert fam.formula_path_vertex_distance(5, 1) == 10
        assert fam.formula_path_vertex_distance(5, 3) == 6
        assert fam.formula_path_vertex_distance(1, 1) == 0

    def test_lollipop_wiener(self):
        assert fam.formula_wiener_lollipop(8, 6) == 64
        assert fam.formula_wiener_lollipop(6, 5) == 26
        assert fam.formula_wiener_lollipop(9, 9) == 90 == fam.formula_wiener_cycle(9)

    def test_pendant_distance(self):
        assert fam.formula_lollipop_pendant_distance(5, 4) == 8
        assert fam.formula_lollipop_pendant_distance(8, 6) == 22
        assert fam.formula_lollipop_pendant_distance(4, 3) == 5

    def test_dumbbell_wiener(self):
        assert fam.formula_wiener_dumbbell(4, 4, 8) == 64
        assert fam.formula_wiener_dumbbell(4, 4, 9) == 96
        assert fam.formula_wiener_dumbbell(4, 5, 10) == 126

    def test_lollipop_special(self):
        assert fam.formula_wiener_Lnk_special(6, 1) == 26
        assert fam.formula_wiener_Lnk_special(8, 2) == 64
        assert fam.formula_wiener_Lnk_special(13, 3) == 264

    def test_forked(self):
        assert [fam.formula_wiener_forked(n) for n in (8, 10, 12)] == [69, 126, 209]

    def test_domain_errors(self):
        with pytest.raises(fam.FamilyParameterError):
            fam.formula_lollipop_pendant_distance(5, 5)
        with pytest.raises(fam.FamilyParameterError):
            fam.formula_wiener_Lnk_special(10, 4)
        with pytest.raises(fam.FamilyParameterError):
            fam.formula_path_vertex_distance(4, 5)


class TestOracle:
    """Closed forms against BFS on the built graphs."""

    @pytest.mark.parametrize("n", range(1, 61))
    def test_path(self, n):
        g = fam.build(fam.path(n))
        d = vertex_distances(g)
        assert [fam.formula_path_vertex_distance(n, i) for i in range(1, n + 1)] == d
        assert fam.formula_wiener_path(n) == wiener_index(g)

    @pytest.mark.parametrize("n", range(3, 61))
    def test_cycle(self, n):
        g = fam.build(fam.cycle(n))
        assert fam.formula_cycle_vertex_distance(n) == vertex_distance(g, 0)
        assert fam.formula_wiener_cycle(n) == wiener_index(g)

    @pytest.mark.parametrize("n", range(3, 41))
    def test_lollipop(self, n):
        for g in range(3, n + 1):
            built = fam.build(fam.lollipop(n, g))
            assert fam.formula_wiener_lollipop(n, g) == wiener_index(built)
            if g < n:
                assert fam.formula_lollipop_pendant_distance(n, g) == vertex_distance(built, n - 1)

    def test_dumbbell_all_parities(self):
        seen = set()
        for m1 in range(3, 12):
            for m2 in range(3, 12):
                for n in range(m1 + m2 - 1, 26):
                    assert fam.formula_wiener_dumbbell(m1, m2, n) == wiener_index(fam.build(fam.dumbbell(m1, m2, n)))
                    seen.add((m1 % 2, m2 % 2, n + 2 - m1 - m2 == 1))
        assert len(seen) == 8

    def test_forked_general(self):
        for n in range(6, 30):
            for g in range(3, n - 2):
                assert fam.formula_wiener_forked_any(n, g) == wiener_index(fam.build(fam.forked(n, g)))

    def test_special_matches_general(self):
        for n in range(4, 201):
            for k in (1, 2, 3):
                if n >= k + 3:
                    assert fam.formula_wiener_Lnk_special(n, k) == fam.formula_wiener_lollipop(n, n - k)

    def test_dumbbell_max_distance_against_bfs(self):
        for m1 in range(3, 13):
            for m2 in range(3, 13):
                for k in range(1, 7):
                    n = m1 + m2 + k - 2
                    dm = max(vertex_distances(fam.build(fam.dumbbell(m1, m2, n))))
                    assert dumbbell_max_vertex_distance(m1, m2, n) == dm
                    assert fam.formula_lollipop_pendant_distance(n, n - k) > dm
