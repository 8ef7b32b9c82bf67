import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gndiag.families import complete_graph, cycle_graph, family, path_graph
from gndiag.graph import (
    EMPTY,
    Graph,
    GraphError,
    VertexSet,
    components_after_removal,
    format_edge_list,
    has_edge_between,
    induced_min_degree,
    parse_edge_list,
)

from .strategies import graphs, subsets, to_nx


def vs(g, ids):
    return g.vset(ids)


def test_components_path_interior_vertex():
    g = path_graph(4)
    comps = components_after_removal(g, vs(g, [1]))
    assert [c.to_list() for c in comps] == [[0], [2, 3]]


def test_components_clique_stays_connected():
    g = complete_graph(5)
    assert [c.to_list() for c in components_after_removal(g, vs(g, [0, 1]))] == [[2, 3, 4]]


def test_components_grid_corner_isolated():
    g = family("grid 5 5")
    x = vs(g, [g.index_of((0, 1)), g.index_of((1, 0))])
    comps = components_after_removal(g, x)
    assert len(comps) == 2
    assert comps[0].to_list() == [g.index_of((0, 0))]


def test_components_of_everything_is_empty():
    g = cycle_graph(5)
    assert components_after_removal(g, g.vertices()) == []


def test_induced_min_degree_examples():
    assert induced_min_degree(complete_graph(4), complete_graph(4).vertices()) == 3
    c6 = cycle_graph(6)
    assert induced_min_degree(c6, vs(c6, [0, 1, 2])) == 1
    assert induced_min_degree(c6, vs(c6, [])) == EMPTY


def test_has_edge_between_examples():
    p4 = path_graph(4)
    assert has_edge_between(p4, vs(p4, [0]), vs(p4, [1]))
    assert not has_edge_between(p4, vs(p4, [0]), vs(p4, [3]))
    c6 = cycle_graph(6)
    assert not has_edge_between(c6, vs(c6, [0, 1]), vs(c6, [3, 4]))


def test_width_mismatch_is_an_error():
    g = path_graph(4)
    with pytest.raises(GraphError):
        components_after_removal(g, VertexSet.of(5, [1]))
    with pytest.raises(GraphError):
        VertexSet.of(3, [0]) | VertexSet.of(4, [0])


def test_invalid_graphs_rejected():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))  # asymmetric rows
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 1)], labels=[(0,), (0,)])


def test_edge_list_format():
    g = path_graph(3)
    assert format_edge_list(g) == "3 2\n0 1\n1 2\n"
    h = parse_edge_list("# a comment\n3 2\n0 1\n# another\n1 2\n")
    assert h.edges() == g.edges()


@pytest.mark.parametrize(
    "text",
    [
        "3 2\n0 1\n",  # count mismatch
        "3 1\n1 0\n",  # u >= v
        "3 2\n0 1\n0 1\n",  # duplicate
        "3 1\n0 3\n",  # out of range
        "3 1\n0 x\n",  # not a number
        "",  # no header
    ],
)
def test_edge_list_rejects(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)


@given(graphs())
def test_adjacency_symmetric_and_loop_free(g):
    for u in range(g.n):
        assert not g.has_edge(u, u)
        for v in g.neighbors(u):
            assert g.has_edge(v, u)


@given(graphs(max_n=8), st.data())
def test_component_sizes_sum(g, data):
    x = data.draw(subsets(g))
    comps = components_after_removal(g, x)
    assert sum(len(c) for c in comps) == g.n - len(x)
    union = 0
    for c in comps:
        assert not union & c.bits
        union |= c.bits
    assert union == g.full & ~x.bits
    keys = [(len(c), min(c)) for c in comps]
    assert keys == sorted(keys)
    expected = sorted(len(c) for c in nx.connected_components(to_nx(g).subgraph(set(range(g.n)) - set(x))))
    assert sorted(len(c) for c in comps) == expected


@given(graphs(min_n=1))
def test_single_component_iff_connected(g):
    comps = components_after_removal(g, VertexSet(g.n, 0))
    assert (len(comps) == 1) == nx.is_connected(to_nx(g))


@given(graphs(min_n=1))
def test_induced_min_degree_of_everything(g):
    assert induced_min_degree(g, g.vertices()) == g.min_degree()


@given(graphs(max_n=8), st.data())
def test_has_edge_between_symmetric(g, data):
    a, b = data.draw(subsets(g)), data.draw(subsets(g))
    assert has_edge_between(g, a, b) == has_edge_between(g, b, a)


@given(graphs(max_n=9))
def test_edge_list_round_trip(g):
    text = format_edge_list(g)
    assert format_edge_list(parse_edge_list(text)) == text
