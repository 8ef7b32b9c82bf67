"""Seeded verification corpus: small atlas graphs, random connected graphs, trees."""

from __future__ import annotations

import random
from dataclasses import dataclass

import networkx as nx

from .graph import Graph

PROBABILITIES = (0.2, 0.35, 0.5, 0.7, 0.9)


@dataclass(frozen=True)
class CorpusGraph:
    gid: str
    graph: Graph


def _from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph.from_edges(h.number_of_nodes(), sorted(tuple(sorted(e)) for e in h.edges()))


def atlas_graphs(max_n: int = 6) -> list[CorpusGraph]:
    """Every connected graph on 1..max_n vertices (up to isomorphism, max_n <= 7)."""
    out = []
    for i, h in enumerate(nx.graph_atlas_g()):
        if 0 < h.number_of_nodes() <= max_n and nx.is_connected(h):
            out.append(CorpusGraph(f"atlas-{i}", _from_nx(h)))
    return out


def random_connected(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) conditioned on connectivity, by rejection."""
    while True:
        h = nx.gnp_random_graph(n, p, seed=rng.randrange(2**32))
        if nx.is_connected(h):
            return _from_nx(h)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n < 3:
        return _from_nx(nx.path_graph(n))
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    return _from_nx(nx.from_prufer_sequence(prufer))


def random_corpus(seed: int, count: int, min_n: int = 4, max_n: int = 10) -> list[CorpusGraph]:
    """``count`` connected graphs sweeping n and the edge probability."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = min_n + i % (max_n - min_n + 1)
        p = PROBABILITIES[(i // (max_n - min_n + 1)) % len(PROBABILITIES)]
        out.append(CorpusGraph(f"rand-s{seed}-{i}-n{n}-p{p}", random_connected(n, p, rng)))
    return out


def tree_corpus(seed: int, count: int, min_n: int = 4, max_n: int = 10) -> list[CorpusGraph]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(min_n, max_n)
        out.append(CorpusGraph(f"tree-s{seed}-{i}-n{n}", random_tree(n, rng)))
    return out


def small_corpus(seed: int = 0, extra: int = 80) -> list[CorpusGraph]:
    """Graphs with n <= 6 for exhaustive syndrome checks: the atlas plus random ones."""
    return atlas_graphs(6) + random_corpus(seed, extra, min_n=3, max_n=6)
