"""Explicit cuts for the named families.

Each builder returns the cut ``X`` for a product graph built by
:mod:`gndiag.families` (row-major ids, ``(u, v) -> u * |H| + v``).
:func:`certify` turns a cut into a checked certificate, which gives an
upper bound on c^g without any search.
"""

from __future__ import annotations

from .connectivity import _is_cut
from .gc import GcCertificate, best_at_cut
from .graph import Graph, GraphError, VertexSet, neighborhood


def _ids(m: int, cells) -> list[int]:
    return [u * m + v for u, v in cells]


def _block_boundary(g: Graph, block: list[int]) -> VertexSet:
    mask = sum(1 << v for v in block)
    return VertexSet(g.n, neighborhood(g, mask) & ~mask)


def grid_cut(g: Graph, n: int, m: int, gg: int) -> VertexSet:
    """Boundary of a corner block: one vertex, an edge, or a 2x2 square."""
    shape = {0: [(0, 0)], 1: [(0, 0), (0, 1)], 2: [(0, 0), (0, 1), (1, 0), (1, 1)]}
    if gg not in shape:
        raise GraphError("grid construction covers g in {0, 1, 2}")
    return _block_boundary(g, _ids(m, shape[gg]))


def torus_cut(g: Graph, n: int, m: int, gg: int) -> VertexSet:
    """Boundary of a vertex, an edge, or a 2x2 square; for g=3 two full rows."""
    if gg == 3:
        rows = [2, n - 1]
        return VertexSet.of(g.n, _ids(m, [(u, v) for u in rows for v in range(m)]))
    shape = {0: [(0, 0)], 1: [(0, 0), (0, 1)], 2: [(0, 0), (0, 1), (1, 0), (1, 1)]}
    if gg not in shape:
        raise GraphError("torus construction covers g in {0, 1, 2, 3}")
    return _block_boundary(g, _ids(m, shape[gg]))


def d_path_cut(g: Graph, k: int, n: int) -> VertexSet:
    """Cut of ``D_k □ P_n`` for g=3: the center at the first two path
    positions plus the second clique at the second position."""
    center, second = 0, range(k + 1, 2 * k + 1)
    cells = [(center, 0), (center, 1)] + [(u, 1) for u in second]
    return VertexSet.of(g.n, _ids(n, cells))


def clique_product_cut(g: Graph, n: int, m: int, gg: int) -> VertexSet:
    """Cut of ``K_n □ K_m`` isolating ``K_{g+1} × {v_0}``."""
    if gg + 1 > n:
        raise GraphError("need g+1 <= n")
    keep = range(gg + 1)
    cells = [(u, 0) for u in range(gg + 1, n)]
    cells += [(u, v) for u in keep for v in range(1, m)]
    return VertexSet.of(g.n, _ids(m, cells))


def certify(g: Graph, gg: int, x: VertexSet) -> GcCertificate:
    """Best certificate at a fixed cut: the component with the smallest score."""
    if not _is_cut(g, x.bits, gg):
        raise GraphError("construction is not a g-good-neighbor cut")
    score, kind, part, part_b = best_at_cut(g, gg, x.bits)
    n = g.n
    return GcCertificate(
        x, kind, VertexSet(n, part), None if part_b is None else VertexSet(n, part_b), len(x) + score
    )
