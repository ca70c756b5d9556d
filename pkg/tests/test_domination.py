from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import graphs
from updom.domination import (
    CapExceeded,
    brute_alpha,
    brute_Gamma,
    brute_gamma,
    enumerate_maximal_independent,
    enumerate_minimal_dominating,
    invariant_report,
    is_dominating,
    is_independent_set,
    is_maximal_independent,
    is_minimal_dominating,
    maximum_independent_set,
    minimalize,
    normalize_minimal_dominating,
    private_neighbours,
    vertices_without_private,
)
from updom.graph import (
    GraphError,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
)

C4 = cycle_graph(4)
C5 = cycle_graph(5)
K3 = complete_graph(3)


def subsets(n):
    for k in range(n + 1):
        yield from (frozenset(c) for c in combinations(range(n), k))


def naive_minimal_dominating(g):
    return [s for s in subsets(g.n) if is_minimal_dominating(g, s)]


class TestPredicates:
    def test_dominating(self):
        assert is_dominating(C4, {0, 2})
        assert not is_dominating(C4, {0})
        assert is_dominating(C5, range(5))

    def test_minimal_dominating(self):
        assert is_minimal_dominating(C4, {0, 1})
        assert not is_minimal_dominating(path_graph(4), {0, 1, 3})
        assert is_minimal_dominating(K3, {0})

    def test_private_neighbours(self):
        claw = star_graph(3)
        assert private_neighbours(claw, {0}, 0) == {1, 2, 3}
        assert private_neighbours(C4, {0, 1}, 0) == {3}
        assert private_neighbours(K3, {0, 1}, 0) == frozenset()

    def test_private_neighbours_requires_member(self):
        with pytest.raises(GraphError):
            private_neighbours(C4, {0}, 1)

    def test_maximal_independent(self):
        assert is_maximal_independent(C4, {0, 2})
        assert is_maximal_independent(C5, {0, 2})
        assert not is_maximal_independent(C4, {0})
        assert not is_maximal_independent(C4, {0, 1})

    def test_foreign_vertex(self):
        with pytest.raises(GraphError):
            is_dominating(C4, {9})

    def test_minimalize(self):
        d = minimalize(path_graph(4), {0, 1, 3})
        assert d == {1, 3} and is_minimal_dominating(path_graph(4), d)
        with pytest.raises(GraphError):
            minimalize(C4, {0})


class TestNormalize:
    def test_claw_leaves(self):
        assert normalize_minimal_dominating(star_graph(3), {1, 2, 3}) == {0}

    def test_c4_unchanged(self):
        assert normalize_minimal_dominating(C4, {0, 1}) == {0, 1}

    def test_k2(self):
        assert normalize_minimal_dominating(path_graph(2), {0}) == {0}

    def test_rejects_non_minimal(self):
        with pytest.raises(GraphError):
            normalize_minimal_dominating(C4, {0, 1, 2})

    def test_isolated_vertex_kept(self):
        g = disjoint_union(star_graph(3), empty_graph(1))
        out = normalize_minimal_dominating(g, {1, 2, 3, 4})
        assert out == {0, 4}
        assert vertices_without_private(g, out) == [4]

    @settings(max_examples=150, deadline=None)
    @given(graphs(min_n=2, max_n=9))
    def test_postconditions(self, g):
        # one component at a time; singleton components are exempt
        d = minimalize(g, range(g.n))
        out = normalize_minimal_dominating(g, d)
        assert is_minimal_dominating(g, out)
        assert len(out) <= len(d)
        isolated = {v for v in range(g.n) if g.degree(v) == 0}
        assert set(vertices_without_private(g, out)) <= isolated


class TestOracles:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_gamma_upper_complete(self, n):
        assert brute_Gamma(complete_graph(n))[0] == 1

    def test_small_values(self):
        assert brute_Gamma(C4) == (2, {0, 1})
        assert brute_Gamma(path_graph(4))[0] == 2
        assert brute_gamma(path_graph(6))[0] == 2
        assert brute_alpha(C5) == (2, {0, 2})

    def test_empty_graph(self):
        assert brute_Gamma(empty_graph(0)) == (0, frozenset())
        assert brute_gamma(empty_graph(3)) == (3, {0, 1, 2})

    def test_cap(self):
        with pytest.raises(CapExceeded, match="capped at 5"):
            brute_gamma(path_graph(6), cap=5)

    def test_cap_env(self, monkeypatch):
        monkeypatch.setenv("UPDOM_MAX_N", "4")
        with pytest.raises(CapExceeded):
            brute_alpha(C5)

    def test_report(self):
        rep = invariant_report(C5)
        assert (rep.alpha, rep.gamma_lower, rep.gamma_upper) == (2, 2, 2)

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=8))
    def test_against_subset_filter(self, g):
        minimal = naive_minimal_dominating(g)
        dominating = [s for s in subsets(g.n) if is_dominating(g, s)]
        independent = [s for s in subsets(g.n) if is_independent_set(g, s)]
        gamma_upper, w_up = brute_Gamma(g)
        gamma, w_lo = brute_gamma(g)
        alpha, w_a = brute_alpha(g)
        assert gamma_upper == max(map(len, minimal))
        assert gamma == min(map(len, dominating))
        assert alpha == max(map(len, independent))
        assert is_minimal_dominating(g, w_up) and len(w_up) == gamma_upper
        assert is_dominating(g, w_lo) and len(w_lo) == gamma
        assert is_independent_set(g, w_a) and len(w_a) == alpha
        assert gamma <= gamma_upper and alpha <= gamma_upper
        assert sorted(w_up) == min(sorted(s) for s in minimal if len(s) == gamma_upper)


class TestEnumeration:
    def test_minimal_dominating_small(self):
        assert list(enumerate_minimal_dominating(K3)) == [{0}, {1}, {2}]
        assert list(enumerate_minimal_dominating(path_graph(2))) == [{0}, {1}]
        assert len(list(enumerate_minimal_dominating(C4))) == 6

    def test_maximal_independent_small(self):
        assert sorted(map(sorted, enumerate_maximal_independent(K3))) == [[0], [1], [2]]
        assert sorted(map(sorted, enumerate_maximal_independent(C4))) == [[0, 2], [1, 3]]
        assert sorted(map(sorted, enumerate_maximal_independent(path_graph(4)))) == [[0, 2], [0, 3], [1, 3]]
        assert list(enumerate_maximal_independent(empty_graph(0))) == [frozenset()]

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=8))
    def test_minimal_dominating_matches_filter(self, g):
        assert set(enumerate_minimal_dominating(g)) == set(naive_minimal_dominating(g))

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=8))
    def test_maximal_independent_matches_filter(self, g):
        found = list(enumerate_maximal_independent(g))
        want = {s for s in subsets(g.n) if is_maximal_independent(g, s)}
        assert len(found) == len(set(found)) and set(found) == want
        # every maximal independent set is minimal dominating
        assert all(is_minimal_dominating(g, s) for s in found)
        assert len(maximum_independent_set(g)) == brute_alpha(g)[0]
