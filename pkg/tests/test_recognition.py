import random

import pytest
from hypothesis import given, settings

from conftest import graphs
from updom.constructions import complete_to_q, h_graph, q_construct, tripod
from updom.corpus import random_graph
from updom.forbidden import FORBIDDEN_N, G4
from updom.graph import (
    GraphError,
    complement,
    complete_graph,
    contains_induced,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    make_graph,
    path_graph,
    prism_graph,
    star_graph,
)
from updom.recognition import (
    TWO_K2,
    NicePartition,
    extract_base,
    find_nice_partition,
    forbidden_self_test,
    forbidden_witness,
    in_class_S,
    in_q_star,
    in_Z_k,
    is_2k2_free,
    is_nice_partition,
    partition_violation,
)

# two hubs joined by an edge, each with two leaves
DOUBLE_CLAW = make_graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


def random_graphs(seed, count, lo, hi):
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(lo, hi), rng.uniform(0.2, 0.8)) for _ in range(count)]


class Test2K2:
    def test_c4(self):
        assert is_2k2_free(cycle_graph(4)) == (True, None)

    def test_c6(self):
        ok, emb = is_2k2_free(cycle_graph(6))
        assert not ok
        assert {frozenset((emb[0], emb[1])), frozenset((emb[2], emb[3]))} == {
            frozenset((0, 1)), frozenset((3, 4))}

    def test_prism(self):
        assert is_2k2_free(prism_graph())[0]

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=8))
    def test_matches_embedding_search(self, g):
        ok, _ = is_2k2_free(g)
        assert ok == (contains_induced(g, TWO_K2) is None)

    def test_split_graphs(self):
        rng = random.Random(5)
        for _ in range(50):
            k, s = rng.randint(1, 5), rng.randint(0, 5)
            edges = [(a, b) for a in range(k) for b in range(a + 1, k)]
            edges += [(a, b) for a in range(k) for b in range(k, k + s) if rng.random() < 0.5]
            g = make_graph(k + s, edges)
            assert is_2k2_free(g)[0]


class TestNicePartition:
    def test_k3(self):
        assert find_nice_partition(complete_graph(3)) == NicePartition(frozenset(), frozenset({0, 1, 2}))

    def test_3k1(self):
        assert find_nice_partition(empty_graph(3)) is None

    @pytest.mark.parametrize("name", list(FORBIDDEN_N))
    def test_forbidden_graphs_have_none(self, name):
        assert find_nice_partition(FORBIDDEN_N[name]) is None

    def test_violations(self):
        g = complete_graph(4)
        assert partition_violation(g, {0, 1, 2}, {3}) is not None
        assert partition_violation(g, {0, 1}, {2, 3}) is not None
        assert partition_violation(g, {0, 1}, {2}) is not None
        assert is_nice_partition(g, NicePartition(frozenset({0}), frozenset({1, 2, 3})))

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=7))
    def test_found_partitions_are_nice(self, g):
        p = find_nice_partition(g)
        if p is not None:
            assert is_nice_partition(g, p)


class TestQStar:
    def test_q_graphs_are_members(self):
        for g in random_graphs(1, 50, 1, 7):
            qg = q_construct(g).graph
            assert in_q_star(qg, "partition") and in_q_star(qg, "forbidden")

    def test_g4_not_member(self):
        assert not in_q_star(G4, "partition") and not in_q_star(G4, "forbidden")
        assert forbidden_witness(G4)[0] == "G4"

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            in_q_star(G4, "magic")

    @settings(max_examples=300, deadline=None)
    @given(graphs(max_n=8))
    def test_methods_agree(self, g):
        assert in_q_star(g, "partition") == in_q_star(g, "forbidden")

    def test_self_tests(self):
        results = forbidden_self_test()
        assert len(results) == 6 and all(results.values()), results

    def test_forbidden_set_shape(self):
        assert len(FORBIDDEN_N) == 11
        assert FORBIDDEN_N["co-C5"].m == 5 and FORBIDDEN_N["co-C3"].m == 0

    def test_vertex_deletion_minimality(self):
        for name, h in FORBIDDEN_N.items():
            for v in range(h.n):
                sub, _ = induced_subgraph(h, set(range(h.n)) - {v})
                assert find_nice_partition(sub) is not None, (name, v)


class TestExtractBase:
    def test_c5(self):
        qg = q_construct(cycle_graph(5))
        assert extract_base(qg.graph, qg.partition) == cycle_graph(5)

    def test_round_trip_random(self):
        for g in random_graphs(2, 100, 1, 7):
            qg = q_construct(g)
            assert extract_base(qg.graph, qg.partition) == g

    def test_deleted_old_vertex(self):
        qg = q_construct(cycle_graph(5))
        keep = set(range(qg.graph.n)) - {0}
        h, relabel = induced_subgraph(qg.graph, keep)
        p = NicePartition(frozenset(relabel[v] for v in qg.old - {0}), frozenset(relabel[v] for v in qg.new))
        with pytest.raises(GraphError, match="not an exact Q-graph"):
            extract_base(h, p)

    def test_completion_round_trip(self):
        for g in random_graphs(3, 150, 1, 8):
            p = find_nice_partition(g)
            if p is None:
                continue
            qg, emb = complete_to_q(g, p)
            base = extract_base(qg.graph, qg.partition)
            assert q_construct(base).graph == qg.graph
            assert contains_induced(qg.graph, g) is not None


class TestTripods:
    def test_claw(self):
        assert in_class_S(star_graph(3)) == (True, [(1, 1, 1)])

    def test_p7(self):
        ok, legs = in_class_S(path_graph(7))
        assert ok and legs == [(6, 0, 0)]

    def test_non_members(self):
        assert not in_class_S(cycle_graph(4))[0]
        assert not in_class_S(DOUBLE_CLAW)[0]
        assert not in_class_S(star_graph(4))[0]

    def test_forest(self):
        g = make_graph(7, [(0, 1), (0, 2), (0, 3), (4, 5)])
        ok, legs = in_class_S(g)
        assert ok and sorted(legs) == [(0, 0, 0), (1, 0, 0), (1, 1, 1)]

    @pytest.mark.parametrize("legs", [(1, 1, 1), (2, 3, 4), (5, 0, 0), (3, 2, 1)])
    def test_tripod_generator(self, legs):
        ok, found = in_class_S(tripod(*legs))
        assert ok and found == [tuple(sorted(legs, reverse=True))]


class TestZk:
    @pytest.mark.parametrize("k", [3, 4, 6, 9])
    def test_tripods_in_every_zk(self, k):
        assert in_Z_k(tripod(2, 3, 4), k)

    def test_c5(self):
        assert in_Z_k(cycle_graph(5), 3)
        assert not in_Z_k(cycle_graph(5), 5)

    def test_h2(self):
        assert not in_Z_k(h_graph(2), 3)

    def test_degree_bound(self):
        assert not in_Z_k(star_graph(4), 3)

    def test_k_below_three(self):
        with pytest.raises(GraphError):
            in_Z_k(path_graph(3), 2)

    def test_double_claw_depends_on_convention(self):
        # adjacent hubs are H_1 only when the path is counted in edges
        assert in_Z_k(DOUBLE_CLAW, 8, "vertices")
        assert not in_Z_k(DOUBLE_CLAW, 3, "edges")

    def test_cobipartite_complement_c9_family(self):
        assert contains_induced(complement(cycle_graph(9)), FORBIDDEN_N["G1"]) is not None
