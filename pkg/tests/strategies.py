"""Hypothesis strategies for small graphs."""

import networkx as nx
from hypothesis import strategies as st

from gndiag.graph import Graph, VertexSet


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # a random spanning tree keeps the graph connected
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            if (u, v) not in chosen:
                chosen.append((u, v))
    return Graph.from_edges(n, chosen)


def connected_graphs(min_n=1, max_n=7):
    return graphs(min_n=min_n, max_n=max_n, connected=True)


def subsets(g: Graph):
    return st.integers(0, (1 << g.n) - 1).map(lambda b: VertexSet(g.n, b))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
