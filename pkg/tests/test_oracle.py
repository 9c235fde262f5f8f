import random

import pytest

from helpers import FullStateOpt, cycle_graph, path_graph, random_family
from mmisr.gadgets import complete_bipartite, complete_graph
from mmisr.graph import (Graph, Instance, all_independent_sets, disjoint_union,
                         sequence_value, validate_sequence)
from mmisr.oracle import (CapacityError, OracleLimits, isr_tj_decide,
                          opt_exact, reachable_at_threshold)


def p4_instance():
    return Instance(path_graph(4), frozenset({1, 3}), frozenset({2, 4}))


class TestReachableAtThreshold:
    def test_p4_blocked_at_two(self):
        assert reachable_at_threshold(p4_instance(), 2) is None

    def test_p4_open_at_one(self):
        inst = p4_instance()
        seq = reachable_at_threshold(inst, 1)
        assert seq is not None
        assert validate_sequence(inst, seq).ok
        assert sequence_value(seq) >= 1

    def test_always_open_at_zero(self):
        inst = p4_instance()
        seq = reachable_at_threshold(inst, 0)
        assert seq is not None and validate_sequence(inst, seq).ok

    def test_single_step_granularity(self):
        seq = reachable_at_threshold(p4_instance(), 1)
        for a, b in zip(seq, seq[1:]):
            assert len(a ^ b) == 1

    def test_gamma_range_checked(self):
        with pytest.raises(ValueError):
            reachable_at_threshold(p4_instance(), 3)


class TestOptExact:
    def test_p4(self):
        assert opt_exact(p4_instance())[0] == 1

    def test_edgeless_disjoint(self):
        inst = Instance(Graph(4), frozenset({1, 2}), frozenset({3, 4}))
        assert opt_exact(inst)[0] == 2

    def test_triangle_plus_biclique(self):
        h = disjoint_union(complete_graph(3), complete_bipartite(2, 2))
        inst = Instance(h, frozenset({4, 5}), frozenset({6, 7}))
        assert opt_exact(inst)[0] == 1

    def test_same_endpoints(self):
        inst = Instance(path_graph(4), frozenset({1, 3}), frozenset({1, 3}))
        value, witness = opt_exact(inst)
        assert value == 2 and witness == [frozenset({1, 3})]

    def test_witness_matches_value(self):
        for inst in random_family(60, 10, seed=7):
            value, witness = opt_exact(inst)
            assert validate_sequence(inst, witness).ok
            assert sequence_value(witness) == value
            assert 0 <= value <= min(len(inst.ini), len(inst.tar))

    def test_matches_level_sweep(self):
        for inst in random_family(40, 8, seed=11):
            table = FullStateOpt(inst.graph)
            assert opt_exact(inst)[0] == table.opt(inst.ini, inst.tar)


class TestIsrTjDecide:
    def test_single_jump(self):
        g = Graph(2, [(1, 2)])
        assert isr_tj_decide(g, frozenset({1}), frozenset({2})) == [
            frozenset({1}), frozenset({2})]

    def test_p4_route(self):
        g = path_graph(4)
        seq = isr_tj_decide(g, frozenset({1, 3}), frozenset({2, 4}))
        assert seq is not None
        for a, b in zip(seq, seq[1:]):
            assert len(a - b) == 1 and len(b - a) == 1

    def test_c4_blocked(self):
        assert isr_tj_decide(cycle_graph(4), frozenset({1, 3}),
                             frozenset({2, 4})) is None

    def test_size_mismatch_rejected(self):
        with pytest.raises(ValueError):
            isr_tj_decide(Graph(3), frozenset({1}), frozenset({2, 3}))

    def test_dependent_input_rejected(self):
        with pytest.raises(ValueError):
            isr_tj_decide(Graph(2, [(1, 2)]), frozenset({1, 2}), frozenset({1, 2}))


class TestEquivalence:
    def test_tj_iff_opt_at_least_size_minus_one(self, atlas_with_sets):
        # Light version on n <= 5; the full n <= 6 sweep runs in acceptance.
        for g, sets in atlas_with_sets:
            if g.n > 5:
                continue
            table = FullStateOpt(g)
            by_size = {}
            for s in sets:
                by_size.setdefault(len(s), []).append(s)
            for phi, group in by_size.items():
                if phi == 0:
                    continue
                for a in group:
                    for b in group:
                        present = isr_tj_decide(g, a, b) is not None
                        assert present == (table.opt(a, b) >= phi - 1)

    def test_subset_endpoints_lemma(self):
        rng = random.Random(5)
        for inst in random_family(40, 10, seed=23):
            big_i, big_j = inst.ini, inst.tar
            small_i = frozenset(v for v in big_i if rng.random() < 0.6)
            small_j = frozenset(v for v in big_j if rng.random() < 0.6)
            outer = opt_exact(inst)[0]
            inner = opt_exact(Instance(inst.graph, small_i, small_j))[0]
            assert inner == min(len(small_i), len(small_j), outer)


class TestCapacity:
    def test_too_many_vertices(self):
        inst = Instance(Graph(21), frozenset({1}), frozenset({2}))
        with pytest.raises(CapacityError):
            opt_exact(inst)

    def test_state_cap(self):
        inst = Instance(Graph(12), frozenset(range(1, 7)), frozenset(range(7, 13)))
        with pytest.raises(CapacityError):
            opt_exact(inst, OracleLimits(max_vertices=20, max_states=10))

    def test_custom_limits_allow_more(self):
        inst = Instance(Graph(21), frozenset({1}), frozenset({2}))
        value, _ = opt_exact(inst, OracleLimits(max_vertices=22))
        assert value == 1

    def test_limits_validated(self):
        with pytest.raises(ValueError):
            OracleLimits(max_vertices=0)
