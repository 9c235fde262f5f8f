import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import cycle_graph, path_graph
from mmisr.graph import (Graph, Instance, alpha_bruteforce,
                         all_independent_sets, balanced_biclique_bruteforce,
                         bfs_layers, dedup_consecutive, degeneracy_ordering,
                         disjoint_union, is_independent, sequence_value,
                         strip_redundant, trim_to_size, validate_sequence)


def small_graphs(max_n=8):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        return Graph(n, chosen)

    return build()


class TestGraphConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(3, [(2, 2)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(2, [(1, 3)])

    def test_collapses_duplicate_edges(self):
        g = Graph(3, [(1, 2), (2, 1), (1, 2)])
        assert g.m == 1

    def test_bipartition_checked(self):
        Graph(2, [(1, 2)], bipartition=([1], [2]))
        with pytest.raises(ValueError):
            Graph(2, [(1, 2)], bipartition=([1, 2], []))
        with pytest.raises(ValueError):
            Graph(3, [(1, 2)], bipartition=([1], [2]))  # does not cover 3

    def test_subgraph_relabels(self):
        g = path_graph(4)
        sub, old_ids = g.subgraph({2, 3, 4})
        assert sub.n == 3 and sub.edges == frozenset({(1, 2), (2, 3)})
        assert old_ids == [0, 2, 3, 4]

    def test_disjoint_union_shifts(self):
        h = disjoint_union(path_graph(2), path_graph(2))
        assert h.n == 4 and h.edges == frozenset({(1, 2), (3, 4)})


class TestIsIndependent:
    def test_edge_endpoints_not_independent(self):
        assert not is_independent(Graph(2, [(1, 2)]), frozenset({1, 2}))

    def test_empty_set_vacuous(self):
        assert is_independent(Graph(3, [(1, 2)]), frozenset())

    def test_path_endpoints(self):
        assert is_independent(path_graph(3), frozenset({1, 3}))

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            is_independent(Graph(2), frozenset({5}))

    @settings(max_examples=60, deadline=None)
    @given(small_graphs(6), st.sets(st.integers(min_value=1, max_value=6)))
    def test_matches_edge_scan(self, g, raw):
        s = frozenset(v for v in raw if v <= g.n)
        by_scan = all(not (u in s and v in s) for u, v in g.edges)
        assert is_independent(g, s) == by_scan


class TestSequenceValue:
    def test_single_step(self):
        assert sequence_value([frozenset({1, 3})]) == 2

    def test_contains_empty(self):
        assert sequence_value([frozenset({1, 3}), frozenset(), frozenset({2, 4})]) == 0

    def test_min_of_sizes(self):
        seq = [frozenset(s) for s in ({1, 3}, {1}, {1, 4}, {4}, {2, 4})]
        assert sequence_value(seq) == 1

    def test_empty_sequence_rejected(self):
        with pytest.raises(ValueError):
            sequence_value([])

    def test_bounded_by_endpoints(self):
        seq = [frozenset({1, 2}), frozenset({1}), frozenset({1, 3})]
        assert sequence_value(seq) <= len(seq[0])
        assert sequence_value(seq) <= len(seq[-1])


class TestValidateSequence:
    def setup_method(self):
        self.inst = Instance(path_graph(4), frozenset({1, 3}), frozenset({2, 4}))

    def test_valid_p4_route(self):
        seq = [frozenset(s) for s in ({1, 3}, {1}, {1, 4}, {4}, {2, 4})]
        assert validate_sequence(self.inst, seq).ok

    def test_not_nested(self):
        inst = Instance(path_graph(4), frozenset({1}), frozenset({4}))
        report = validate_sequence(inst, [frozenset({1}), frozenset({4})])
        assert report.first_violation == (1, "NotNested")

    def test_not_independent(self):
        inst = Instance(Graph(2, [(1, 2)]), frozenset({1}), frozenset({2}))
        seq = [frozenset({1}), frozenset({1, 2}), frozenset({2})]
        report = validate_sequence(inst, seq)
        assert report.first_violation == (1, "NotIndependent")

    def test_wrong_endpoints(self):
        report = validate_sequence(self.inst, [frozenset({1}), frozenset({2, 4})])
        assert report.first_violation == (0, "WrongEndpoints")
        report = validate_sequence(
            self.inst, [frozenset({1, 3}), frozenset({3})])
        assert report.first_violation == (1, "WrongEndpoints")


class TestDegeneracyOrdering:
    def test_tree_is_one_degenerate(self):
        tree = Graph(5, [(1, 2), (1, 3), (2, 4), (2, 5)])
        assert degeneracy_ordering(tree)[1] == 1

    def test_cycle(self):
        assert degeneracy_ordering(cycle_graph(4))[1] == 2

    def test_clique(self):
        k4 = Graph(4, list(itertools.combinations(range(1, 5), 2)))
        assert degeneracy_ordering(k4)[1] == 3

    def test_order_is_permutation(self):
        order, _ = degeneracy_ordering(path_graph(6))
        assert sorted(order) == list(range(1, 7))

    @settings(max_examples=50, deadline=None)
    @given(small_graphs(8))
    def test_matches_exhaustive_subgraph_min_degree(self, g):
        best = 0
        vertices = list(g.vertices())
        for r in range(1, g.n + 1):
            for subset in itertools.combinations(vertices, r):
                inside = frozenset(subset)
                best = max(best, min(len(g.adj[v] & inside) for v in subset))
        assert degeneracy_ordering(g)[1] == best


class TestAlphaBruteforce:
    def test_triangle(self):
        k3 = Graph(3, [(1, 2), (1, 3), (2, 3)])
        assert alpha_bruteforce(k3)[0] == 1

    def test_edgeless(self):
        assert alpha_bruteforce(Graph(5))[0] == 5

    def test_five_cycle(self):
        assert alpha_bruteforce(cycle_graph(5))[0] == 2

    def test_witness_is_independent(self):
        size, witness = alpha_bruteforce(cycle_graph(7))
        assert len(witness) == size and is_independent(cycle_graph(7), witness)

    def test_limit_refusal(self):
        with pytest.raises(ValueError):
            alpha_bruteforce(Graph(6), limit=5)

    @settings(max_examples=40, deadline=None)
    @given(small_graphs(8))
    def test_matches_full_enumeration(self, g):
        expected = max(len(s) for s in all_independent_sets(g))
        assert alpha_bruteforce(g)[0] == expected


class TestBalancedBiclique:
    def test_complete_bipartite(self):
        from mmisr.gadgets import complete_bipartite

        assert balanced_biclique_bruteforce(complete_bipartite(3, 3)) == 3

    def test_perfect_matching(self):
        g = Graph(6, [(1, 4), (2, 5), (3, 6)], bipartition=([1, 2, 3], [4, 5, 6]))
        assert balanced_biclique_bruteforce(g) == 1

    def test_edgeless(self):
        g = Graph(4, [], bipartition=([1, 2], [3, 4]))
        assert balanced_biclique_bruteforce(g) == 0

    def test_requires_bipartite_tag(self):
        with pytest.raises(ValueError):
            balanced_biclique_bruteforce(Graph(4, [(1, 2)]))


class TestBfsLayers:
    def test_path(self):
        assert bfs_layers(path_graph(3))[1:] == [0, 1, 2]

    def test_isolated(self):
        assert bfs_layers(Graph(2))[1:] == [0, 0]

    def test_cycle(self):
        assert bfs_layers(cycle_graph(4))[1:] == [0, 1, 2, 1]


class TestSequenceUtils:
    def test_dedup_consecutive(self):
        a, b = frozenset({1}), frozenset({2})
        assert dedup_consecutive([a, a, b, b, a]) == [a, b, a]

    def test_strip_redundant(self):
        a, b, c = frozenset({1}), frozenset({2}), frozenset({3})
        assert strip_redundant([a, b, a, c]) == [a, c]
        assert strip_redundant([a, b, c]) == [a, b, c]

    def test_trim_to_size(self):
        assert trim_to_size(frozenset({5, 2, 9}), 2) == frozenset({2, 5})
        assert trim_to_size(frozenset({1}), 5) == frozenset({1})
