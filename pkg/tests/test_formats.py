import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mmisr.formats import (ParseError, format_graph, format_instance,
                           format_sequence, format_td, parse_graph,
                           parse_instance, parse_sequence, parse_td)
from mmisr.graph import Graph, Instance
from mmisr.treewidth import TreeDecomposition

P4_TEXT = """c a comment
p misr 4 3
e 1 2
e 2 3
e 3 4
ini 1 3
tar 2 4
"""


class TestInstanceCodec:
    def test_parse_basic(self):
        inst = parse_instance(P4_TEXT)
        assert inst.graph.n == 4 and inst.graph.m == 3
        assert inst.ini == frozenset({1, 3}) and inst.tar == frozenset({2, 4})

    def test_round_trip_is_identity_on_canonical(self):
        canonical = format_instance(parse_instance(P4_TEXT))
        assert format_instance(parse_instance(canonical)) == canonical

    def test_vertex_out_of_range_reports_line(self):
        bad = "p misr 2 1\ne 1 3\nini 1\ntar 2\n"
        with pytest.raises(ParseError) as err:
            parse_instance(bad)
        assert "line 2" in str(err.value)

    def test_empty_ini_line_is_empty_set(self):
        text = "p misr 2 0\nini\ntar 1\n"
        inst = parse_instance(text)
        assert inst.ini == frozenset()

    def test_missing_sets_rejected(self):
        with pytest.raises(ParseError):
            parse_instance("p misr 2 0\nini 1\n")

    def test_bip_line(self):
        text = "p misr 4 2\nbip 2\ne 1 3\ne 2 4\nini 1 2\ntar 3 4\n"
        inst = parse_instance(text)
        assert inst.graph.bipartition == ((1, 2), (3, 4))
        assert "bip 2" in format_instance(inst)

    def test_edge_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_instance("p misr 2 2\ne 1 2\nini\ntar\n")

    def test_dependent_ini_rejected(self):
        with pytest.raises(ParseError):
            parse_instance("p misr 2 1\ne 1 2\nini 1 2\ntar\n")


class TestGraphCodec:
    def test_round_trip(self):
        g = Graph(3, [(1, 2), (2, 3)])
        assert parse_graph(format_graph(g)) == g

    def test_header_required(self):
        with pytest.raises(ParseError):
            parse_graph("e 1 2\n")

    def test_unknown_line(self):
        with pytest.raises(ParseError) as err:
            parse_graph("p gr 2 0\nq 1\n")
        assert "line 2" in str(err.value)


class TestTdCodec:
    def test_parse_pace_style(self):
        text = "s td 3 2 4\nb 1 1 2\nb 2 2 3\nb 3 3 4\n1 2\n2 3\n"
        td = parse_td(text)
        assert td.bags == (frozenset({1, 2}), frozenset({2, 3}), frozenset({3, 4}))
        assert td.tree_edges == ((0, 1), (1, 2))
        assert td.width == 1

    def test_round_trip(self):
        text = "s td 3 2 4\nb 1 1 2\nb 2 2 3\nb 3 3 4\n1 2\n2 3\n"
        td = parse_td(text)
        assert format_td(parse_td(format_td(td, 4)), 4) == format_td(td, 4)

    def test_empty_bag_allowed(self):
        td = parse_td("s td 1 0 0\nb 1\n")
        assert td.bags == (frozenset(),)

    def test_bad_bag_id(self):
        with pytest.raises(ParseError):
            parse_td("s td 1 1 2\nb 5 1\n")

    def test_bag_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_td("s td 2 1 2\nb 1 1\n")


class TestSequenceCodec:
    def test_parse_steps(self):
        seq = parse_sequence("step 1 3\nstep 1\nstep 1 4\n")
        assert seq == [frozenset({1, 3}), frozenset({1}), frozenset({1, 4})]

    def test_bare_step_is_empty(self):
        assert parse_sequence("step 1\nstep\n")[1] == frozenset()

    def test_round_trip(self):
        text = "step 1 3\nstep\nstep 2 4\n"
        assert format_sequence(parse_sequence(text)) == text

    def test_junk_line(self):
        with pytest.raises(ParseError) as err:
            parse_sequence("step 1\nmove 2\n")
        assert "line 2" in str(err.value)


@st.composite
def instances(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph(n, edges)
    from mmisr.graph import all_independent_sets

    sets = all_independent_sets(g)
    ini = draw(st.sampled_from(sets))
    tar = draw(st.sampled_from(sets))
    return Instance(g, ini, tar)


@settings(max_examples=50, deadline=None)
@given(instances())
def test_instance_codec_round_trip(inst):
    back = parse_instance(format_instance(inst))
    assert back.graph == inst.graph
    assert back.ini == inst.ini and back.tar == inst.tar
