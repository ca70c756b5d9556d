import math

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs
from updom.formats import (
    FormatError,
    from_edge_list,
    from_graph6,
    parse_graph,
    read_graph,
    read_graph6_lines,
    to_edge_list,
    to_graph6,
)
from updom.graph import (
    Graph,
    GraphError,
    clique_bipartition,
    complement,
    complete_graph,
    connected_components,
    contains_induced,
    cycle_graph,
    disjoint_union,
    empty_graph,
    girth,
    induced_subgraph,
    is_bipartite,
    is_cobipartite,
    is_connected,
    is_free,
    make_graph,
    max_degree,
    path_graph,
    prism_graph,
    shortest_cycle,
    star_graph,
    two_coloring,
    verify_embedding,
)
from updom.constructions import q_construct
from updom.recognition import is_cobipartite_by_anticycles

K3 = complete_graph(3)
C4 = cycle_graph(4)
TWO_K2 = make_graph(4, [(0, 1), (2, 3)])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


class TestMakeGraph:
    def test_triangle(self):
        g = make_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g == K3 and g.m == 3

    def test_c4(self):
        g = make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match="self-loop"):
            make_graph(2, [(0, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphError):
            make_graph(2, [(0, 2)])

    def test_asymmetric_rows_rejected(self):
        with pytest.raises(GraphError, match="asymmetric"):
            Graph(2, (0b10, 0))

    def test_duplicates_merge(self):
        assert make_graph(2, [(0, 1), (1, 0)]).m == 1


class TestComplement:
    def test_k3(self):
        c = complement(K3)
        assert c.n == 3 and c.m == 0

    def test_c5_self_complementary(self):
        assert contains_induced(complement(cycle_graph(5)), cycle_graph(5)) is not None

    def test_involution_random(self, rng):
        for _ in range(100):
            n = rng.randint(0, 10)
            g = make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
            assert complement(complement(g)) == g

    @given(graphs())
    def test_involution_property(self, g):
        assert complement(complement(g)) == g


class TestGirth:
    def test_c5(self):
        assert girth(cycle_graph(5)) == 5

    def test_tree_is_infinite(self):
        assert girth(star_graph(4)) == math.inf
        assert girth(path_graph(7)) == math.inf
        assert girth(empty_graph(0)) == math.inf

    def test_q_of_c3(self):
        assert girth(q_construct(K3).graph) == 3

    @given(graphs(max_n=9))
    def test_matches_networkx(self, g):
        want = nx.girth(to_nx(g))
        assert girth(g) == want

    def test_shortest_cycle(self):
        cyc = shortest_cycle(prism_graph())
        assert len(cyc) == 3
        assert shortest_cycle(path_graph(5)) is None


class TestInducedSubgraph:
    def test_c4_minus_vertex_is_p3(self):
        h, relabel = induced_subgraph(C4, {0, 1, 2})
        assert h == path_graph(3)
        assert relabel == {0: 0, 1: 1, 2: 2}

    def test_empty(self):
        h, relabel = induced_subgraph(prism_graph(), set())
        assert h.n == 0 and relabel == {}

    def test_k5_triple(self):
        h, _ = induced_subgraph(complete_graph(5), {1, 3, 4})
        assert h == K3

    def test_rejects_foreign_vertex(self):
        with pytest.raises(GraphError):
            induced_subgraph(C4, {7})


class TestContainsInduced:
    def test_p3_in_p4(self):
        emb = contains_induced(path_graph(4), path_graph(3))
        assert emb is not None and verify_embedding(path_graph(4), path_graph(3), emb)

    def test_no_2k2_in_c4(self):
        assert contains_induced(C4, TWO_K2) is None

    def test_2k2_in_c6(self):
        emb = contains_induced(cycle_graph(6), TWO_K2)
        assert emb is not None and verify_embedding(cycle_graph(6), TWO_K2, emb)

    def test_pattern_larger_than_host(self):
        assert contains_induced(K3, C4) is None

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=7), graphs(max_n=4))
    def test_agrees_with_networkx(self, g, h):
        emb = contains_induced(g, h)
        matcher = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(h))
        assert (emb is not None) == matcher.subgraph_is_isomorphic()
        if emb is not None:
            assert verify_embedding(g, h, emb)


class TestIsFree:
    def test_c5_free_of_short_cycles(self):
        ok, witness = is_free(cycle_graph(5), [K3, C4])
        assert ok and witness is None

    def test_k4_has_triangle(self):
        ok, (index, emb) = is_free(complete_graph(4), [K3])
        assert not ok and index == 0 and len(set(emb.values())) == 3

    def test_prism_2k2_free(self):
        assert is_free(prism_graph(), [TWO_K2])[0]


class TestComponentsAndColouring:
    def test_2k2_components(self):
        assert sorted(map(sorted, connected_components(TWO_K2))) == [[0, 1], [2, 3]]

    def test_connected(self):
        assert connected_components(prism_graph()) == [frozenset(range(6))]
        assert is_connected(prism_graph())

    def test_empty_singletons(self):
        assert len(connected_components(empty_graph(3))) == 3

    def test_max_degree(self):
        assert max_degree(star_graph(5)) == 5
        assert max_degree(empty_graph(0)) == 0

    def test_bipartite(self):
        assert is_bipartite(C4) and not is_bipartite(cycle_graph(5))
        colours = two_coloring(path_graph(4))
        assert colours == [0, 1, 0, 1]

    def test_cobipartite(self):
        assert is_cobipartite(complete_graph(5))
        assert not is_cobipartite(empty_graph(3))
        a, b = clique_bipartition(complete_graph(5))
        assert a | b == frozenset(range(5))

    def test_q_graphs_cobipartite(self, rng):
        for _ in range(50):
            n = rng.randint(1, 7)
            g = make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
            assert is_cobipartite(q_construct(g).graph)

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=7))
    def test_cobipartite_iff_odd_anticycle_free(self, g):
        assert is_cobipartite(g) == is_cobipartite_by_anticycles(g)

    def test_disjoint_union(self):
        g = disjoint_union(K3, path_graph(2))
        assert g.n == 5 and g.edges() == [(0, 1), (0, 2), (1, 2), (3, 4)]


class TestGraph6:
    @given(graphs(max_n=12))
    def test_bit_exact_with_networkx(self, g):
        ours = to_graph6(g)
        theirs = nx.to_graph6_bytes(to_nx(g), header=False).strip().decode()
        assert ours == theirs
        assert from_graph6(theirs) == g

    def test_large_n_header(self):
        g = path_graph(70)
        text = to_graph6(g)
        assert text[0] == "~"
        assert text == nx.to_graph6_bytes(to_nx(g), header=False).strip().decode()
        assert from_graph6(text) == g

    def test_known_strings(self):
        assert to_graph6(K3) == "Bw"
        assert to_graph6(cycle_graph(5)) == "Dhc"
        assert from_graph6(">>graph6<<Bw") == K3

    def test_bad_byte_offset(self):
        with pytest.raises(FormatError) as err:
            from_graph6(b"Bz!")
        assert err.value.offset == 2

    def test_wrong_length(self):
        with pytest.raises(FormatError, match="too short"):
            from_graph6("D")
        with pytest.raises(FormatError, match="trailing"):
            from_graph6("Bww")

    def test_nonzero_padding(self):
        with pytest.raises(FormatError, match="padding"):
            from_graph6("B~")

    def test_empty(self):
        with pytest.raises(FormatError):
            from_graph6("")


class TestEdgeList:
    @given(graphs())
    def test_round_trip(self, g):
        assert from_edge_list(to_edge_list(g)) == g

    def test_comments_and_blank_lines(self):
        g = from_edge_list("# triangle\n3 3\n0 1\n\n1 2\n2 0  # closing edge\n")
        assert g == K3

    def test_count_mismatch(self):
        with pytest.raises(FormatError, match="announces"):
            from_edge_list("3 2\n0 1\n")

    def test_garbage(self):
        with pytest.raises(FormatError):
            from_edge_list("three 3\n")

    def test_self_loop(self):
        with pytest.raises(GraphError):
            from_edge_list("2 1\n1 1\n")


def test_file_readers(tmp_path):
    (tmp_path / "a.g6").write_text("Bw\n")
    (tmp_path / "a.txt").write_text(to_edge_list(C4))
    (tmp_path / "many.g6").write_text("Bw\nDhc\n\n")
    assert read_graph(tmp_path / "a.g6") == K3
    assert read_graph(tmp_path / "a.txt") == C4
    assert read_graph6_lines(tmp_path / "many.g6") == [K3, cycle_graph(5)]
    assert parse_graph(b"Bw") == K3
