from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gndiag.families import (
    FamilySpec,
    cartesian_product,
    complete_graph,
    cycle_graph,
    family,
    label_product,
    make_family,
    path_graph,
)
from gndiag.graph import GraphError, format_edge_list

from .strategies import connected_graphs, graphs, to_nx


def test_p2_square_is_c4():
    g = cartesian_product(path_graph(2), path_graph(2))
    assert nx.is_isomorphic(to_nx(g), nx.cycle_graph(4))


def test_grid_counts():
    g = family("grid 5 5")
    assert (g.n, g.m) == (25, 40)
    assert format_edge_list(g).startswith("25 40\n")


def test_product_degree_identity_k3_c4():
    a, b = complete_graph(3), cycle_graph(4)
    g = cartesian_product(a, b)
    for v in range(g.n):
        u, w = g.label(v)
        assert g.degree(v) == a.degree(u) + b.degree(w)


def test_product_row_major_labels():
    g = cartesian_product(path_graph(2), path_graph(3))
    assert [g.label(i) for i in range(g.n)] == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]


def test_product_cap():
    with pytest.raises(GraphError):
        cartesian_product(path_graph(70), path_graph(70))
    assert family("grid 70 70", cap=5000).n == 4900


def test_d_graph():
    g = family("D 4")
    assert g.n == 9
    assert g.degree(0) == 2
    rest = nx.connected_components(to_nx(g).subgraph(range(1, 9)))
    blocks = sorted(sorted(c) for c in rest)
    assert blocks == [[1, 2, 3, 4], [5, 6, 7, 8]]
    assert all(nx.density(to_nx(g).subgraph(b)) == 1 for b in blocks)


def test_f_graph():
    g = family("F 7 2")
    assert (g.n, g.m) == (7, 10)
    assert g.has_edge(0, 3)


def test_h_graph_hub_degree():
    g = family("H 20 2 4")
    assert g.n == 20
    assert [g.degree(v) for v in range(2)] == [2, 2]
    blocks = to_nx(g).subgraph(range(2, 20))
    assert sorted(len(c) for c in nx.connected_components(blocks)) == [9, 9]
    assert all(d == 4 for _, d in blocks.degree())


def test_h_graph_infeasible_regular_part():
    # a 3-regular graph on 9 vertices does not exist
    with pytest.raises(GraphError):
        family("H 20 2 3")


@pytest.mark.parametrize("text", ["cycle 2", "F 6 2", "H 20 0 3", "H 20 2 2", "path", "grid 3", "blob 3", "path 3 *"])
def test_bad_specs(text):
    with pytest.raises(GraphError):
        family(text)


def test_spec_parse_and_str():
    spec = FamilySpec.parse("D 4 * (path 2 * cycle 3)")
    assert spec.kind == "product"
    assert str(spec) == "D 4 * (path 2 * cycle 3)"
    assert FamilySpec.parse(str(spec)) == spec
    assert make_family(spec).n == 9 * 6


def test_named_products_match_explicit_ones():
    assert family("torus 4 5").edges() == family("cycle 4 * cycle 5").edges()
    assert family("gen-hypercube 3 4").edges() == family("clique 3 * clique 4").edges()


@settings(max_examples=40)
@given(connected_graphs(max_n=5), connected_graphs(max_n=5))
def test_product_counts(a, b):
    g = cartesian_product(a, b)
    assert g.n == a.n * b.n
    assert g.m == a.n * b.m + b.n * a.m


@settings(max_examples=40)
@given(graphs(max_n=5), graphs(max_n=5))
def test_product_commutes_up_to_degrees(a, b):
    ab, ba = cartesian_product(a, b), cartesian_product(b, a)
    assert Counter(map(ab.degree, range(ab.n))) == Counter(map(ba.degree, range(ba.n)))
    assert nx.is_isomorphic(to_nx(ab), to_nx(ba))


@given(st.data())
def test_label_decomposition(data):
    xs = data.draw(st.lists(st.integers(0, 9), unique=True))
    ys = data.draw(st.lists(st.integers(0, 9), unique=True))
    i = data.draw(st.integers(0, len(xs)))
    j = data.draw(st.integers(0, len(ys)))
    x1, x2, y1, y2 = xs[:i], xs[i:], ys[:j], ys[j:]
    blocks = label_product(x1, y1) | label_product(x1, y2) | label_product(x2, y1) | label_product(x2, y2)
    assert label_product(x1 + x2, y1 + y2) == blocks
    g = cartesian_product(path_graph(10), path_graph(10))
    assert blocks <= {g.label(v) for v in range(g.n)}
