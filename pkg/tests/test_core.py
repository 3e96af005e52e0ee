import pytest
from hypothesis import given, strategies as st

import oracles
from helpers import tournaments
from tourmod.core import (Arc, TournamentError, dual, from_rows, invert_arcs, invert_vertices,
                          is_transitive, is_transitive_relation, make_tournament, relabel,
                          subtournament)
from tourmod.generators import counterexample_tn, cycle3, transitive
from tourmod.modtree import all_nontrivial_modules


def assert_tournament(t):
    for x in range(t.n):
        for y in range(x + 1, t.n):
            assert t.adj(x, y) ^ t.adj(y, x) == 1


class TestMakeTournament:
    def test_three_cycle(self):
        t = make_tournament(3, [(0, 1), (1, 2), (2, 0)])
        assert t == cycle3()
        assert t.adj(2, 0) == 1 and t.adj(0, 2) == 0

    def test_single_vertex(self):
        t = make_tournament(1, [])
        assert t.n == 1 and t.arcs() == []

    def test_contradictory_pair(self):
        with pytest.raises(TournamentError, match=r"contradictory pair \(0,1\)"):
            make_tournament(2, [(0, 1), (1, 0)])

    def test_missing_pair(self):
        with pytest.raises(TournamentError, match=r"missing pair \(1,2\)"):
            make_tournament(3, [(0, 1), (0, 2)])

    def test_duplicate_and_loop(self):
        with pytest.raises(TournamentError, match="duplicate"):
            make_tournament(2, [(0, 1), (0, 1)])
        with pytest.raises(TournamentError, match="self-loop"):
            make_tournament(2, [(0, 0)])

    def test_from_rows_rejects_asymmetric(self):
        with pytest.raises(TournamentError):
            from_rows([[0, 1], [1, 0]])


def test_arc_reverse_and_vertices():
    a = Arc(2, 5)
    assert a.reverse == Arc(5, 2)
    assert a.vertices == {2, 5}


class TestInvertArcs:
    def test_single_flip(self):
        t = invert_arcs(transitive(3), [(0, 1)])
        assert set(t.arcs()) == {(1, 0), (0, 2), (1, 2)}

    def test_full_reversal_is_dual(self):
        c3 = cycle3()
        assert invert_arcs(c3, c3.arcs()) == dual(c3)

    def test_backbone_of_t6(self):
        t = invert_arcs(transitive(5), [(0, 1), (1, 2), (2, 3), (3, 4)])
        t6_minus_5, _ = subtournament(counterexample_tn(6), range(5))
        assert t == t6_minus_5

    def test_missing_arc_is_named(self):
        with pytest.raises(TournamentError, match=r"\(1,0\)"):
            invert_arcs(transitive(3), [(1, 0)])

    @given(tournaments(2, 7), st.data())
    def test_involution(self, t, data):
        b = data.draw(st.sets(st.sampled_from(t.arcs())))
        back = invert_arcs(invert_arcs(t, b), [a.reverse for a in map(Arc._make, b)])
        assert back == t


class TestInvertVertices:
    @pytest.mark.parametrize("x", [set(), {0}, {3}])
    def test_small_sets_are_noops(self, x):
        t = counterexample_tn(6)
        assert invert_vertices(t, x) == t

    def test_transitive5_even_positions(self):
        t = invert_vertices(transitive(5), {0, 2, 4})
        assert oracles.indecomposable(t)

    def test_tn_counterexample(self):
        t = invert_vertices(counterexample_tn(6), {1, 5})
        assert oracles.is_module(t, {0, 5})

    def test_out_of_range(self):
        with pytest.raises(TournamentError):
            invert_vertices(transitive(3), {3})

    @given(tournaments(0, 8), st.data())
    def test_pointwise_rule_and_involution(self, t, data):
        r = data.draw(st.sets(st.integers(0, max(t.n - 1, 0)))) if t.n else set()
        inv = invert_vertices(t, r)
        assert_tournament(inv)
        for x in range(t.n):
            for y in range(t.n):
                if x != y:
                    assert inv.adj(x, y) == t.adj(x, y) ^ (x in r and y in r)
        assert invert_vertices(inv, r) == t


class TestDual:
    def test_cycle(self):
        d = dual(cycle3())
        assert set(d.arcs()) == {(1, 0), (2, 1), (0, 2)}

    @pytest.mark.parametrize("n", [1, 4, 7])
    def test_transitive_self_dual_under_flip(self, n):
        assert relabel(dual(transitive(n)), [n - 1 - i for i in range(n)]) == transitive(n)

    @given(tournaments(0, 8))
    def test_involution_and_shared_modules(self, t):
        assert dual(dual(t)) == t
        assert all_nontrivial_modules(dual(t)) == all_nontrivial_modules(t)


def test_subtournament_relabels_in_order():
    s, index = subtournament(transitive(5), {1, 3, 4})
    assert s == transitive(3)
    assert index == {1: 0, 3: 1, 4: 2}
    s, _ = subtournament(cycle3(), {0, 1})
    assert s.arcs() == [(0, 1)]


class TestTransitive:
    def test_examples(self):
        assert is_transitive(transitive(6))
        assert not is_transitive(cycle3())
        assert not is_transitive(counterexample_tn(8))

    @given(tournaments(0, 7))
    def test_score_and_relation_checks_agree(self, t):
        assert is_transitive(t) == is_transitive_relation(t) == oracles.is_transitive(t)
