import networkx as nx

from gndiag.corpus import atlas_graphs, random_corpus, small_corpus, tree_corpus

from .strategies import to_nx


def test_atlas_counts():
    # connected graphs on 1..6 vertices: 1 + 1 + 2 + 6 + 21 + 112
    assert len(atlas_graphs(6)) == 143


def test_small_corpus_size():
    corpus = small_corpus()
    assert len(corpus) >= 200
    assert all(c.graph.n <= 6 and c.graph.is_connected() for c in corpus)


def test_random_corpus_deterministic():
    a = random_corpus(3, 20)
    b = random_corpus(3, 20)
    assert [(c.gid, c.graph.edges()) for c in a] == [(c.gid, c.graph.edges()) for c in b]
    assert all(c.graph.is_connected() and 4 <= c.graph.n <= 10 for c in a)


def test_trees():
    for c in tree_corpus(1, 15):
        h = to_nx(c.graph)
        assert nx.is_tree(h)
        assert 4 <= c.graph.n <= 10
