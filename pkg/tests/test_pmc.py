from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gndiag.families import cycle_graph, path_graph
from gndiag.graph import GraphError, VertexSet
from gndiag.pmc import (
    Syndrome,
    TestAssignment,
    distinguishable_criterion,
    distinguishable_oracle,
    indistinguishable_relation,
    is_consistent,
)

from .strategies import connected_graphs, graphs


def syn(g, outcomes):
    return Syndrome.from_outcomes(TestAssignment.of(g), outcomes)


def test_assignment_has_both_directions():
    g = cycle_graph(5)
    ta = TestAssignment.of(g)
    assert len(ta) == 2 * g.m
    assert all((v, u) in ta.index for u, v in ta.arcs)


def test_consistency_examples():
    p2 = path_graph(2)
    assert is_consistent(p2, syn(p2, {(0, 1): 0, (1, 0): 0}), p2.vset([]))
    assert not is_consistent(p2, syn(p2, {(0, 1): 0, (1, 0): 0}), p2.vset([1]))


def test_p3_single_fault_has_four_syndromes():
    g = path_graph(3)
    ta = TestAssignment.of(g)
    f = g.vset([1])
    count = sum(is_consistent(g, Syndrome(ta, bits), f) for bits in range(1 << len(ta)))
    assert count == 4


def test_syndrome_must_be_total():
    g = path_graph(3)
    with pytest.raises(GraphError):
        syn(g, {(0, 1): 0})
    with pytest.raises(GraphError):
        syn(g, {(0, 1): 0, (1, 0): 0, (1, 2): 0, (2, 1): 0, (0, 2): 1})


def test_criterion_examples():
    p3 = path_graph(3)
    assert distinguishable_criterion(p3, p3.vset([0]), p3.vset([2]))
    assert not distinguishable_criterion(p3, p3.vset([0, 1]), p3.vset([1, 2]))
    c4 = cycle_graph(4)
    assert distinguishable_criterion(c4, c4.vset([0]), c4.vset([0, 2]))


def test_oracle_examples():
    p3 = path_graph(3)
    assert not distinguishable_oracle(p3, p3.vset([0, 1]), p3.vset([1, 2]))
    assert distinguishable_oracle(p3, p3.vset([0]), p3.vset([2]))
    p2 = path_graph(2)
    assert not distinguishable_oracle(p2, p2.vset([0]), p2.vset([1]))


def test_equal_sets_rejected():
    g = path_graph(3)
    with pytest.raises(GraphError):
        distinguishable_criterion(g, g.vset([1]), g.vset([1]))
    with pytest.raises(GraphError):
        distinguishable_oracle(g, g.vset([1]), g.vset([1]))


def test_oracle_guard():
    g = cycle_graph(16)  # 32 arcs
    with pytest.raises(GraphError):
        distinguishable_oracle(g, g.vset([0]), g.vset([1]))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5), st.data())
def test_criterion_matches_oracle(g, data):
    a = data.draw(st.integers(0, (1 << g.n) - 1))
    b = data.draw(st.integers(0, (1 << g.n) - 1).filter(lambda x: x != a))
    f1, f2 = VertexSet(g.n, a), VertexSet(g.n, b)
    assert distinguishable_criterion(g, f1, f2) == distinguishable_oracle(g, f1, f2)


@settings(max_examples=30, deadline=None)
@given(connected_graphs(max_n=4))
def test_relation_matches_pairwise_oracle(g):
    rel = indistinguishable_relation(g)
    for a, b in product(range(1 << g.n), repeat=2):
        if a != b:
            assert rel[a, b] == (not distinguishable_oracle(g, VertexSet(g.n, a), VertexSet(g.n, b)))


@given(graphs(max_n=6), st.data())
def test_criterion_symmetric(g, data):
    a = data.draw(st.integers(0, (1 << g.n) - 1))
    b = data.draw(st.integers(0, (1 << g.n) - 1).filter(lambda x: x != a))
    f1, f2 = VertexSet(g.n, a), VertexSet(g.n, b)
    assert distinguishable_criterion(g, f1, f2) == distinguishable_criterion(g, f2, f1)


@given(graphs(max_n=5), st.data())
def test_all_faulty_is_consistent_with_everything(g, data):
    ta = TestAssignment.of(g)
    bits = data.draw(st.integers(0, (1 << len(ta)) - 1))
    assert is_consistent(g, Syndrome(ta, bits), g.vertices())
