"""g-good-neighbor faulty sets, cuts, and the g-good-neighbor connectivity."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional

from .graph import (
    Graph,
    GraphError,
    VertexSet,
    _check_width,
    component_of,
    core_mask,
    has_min_degree,
    iter_bits,
)

EXACT = "exact"
NONEXISTENT = "nonexistent"
UNDETERMINED = "undetermined-above-cap"


def is_gn_faulty_set(g: Graph, f: VertexSet, gg: int) -> bool:
    _check_width(g, f)
    return _is_faulty(g, f.bits, gg)


def _is_faulty(g: Graph, f: int, gg: int) -> bool:
    rest = g.full & ~f
    if not rest:
        return False
    if gg <= 0:
        return True
    rows = g.rows
    return all((rows[v] & rest).bit_count() >= gg for v in iter_bits(rest))


def is_gn_cut(g: Graph, x: VertexSet, gg: int) -> bool:
    _check_width(g, x)
    return _is_cut(g, x.bits, gg)


def _is_cut(g: Graph, x: int, gg: int) -> bool:
    if not _is_faulty(g, x, gg):
        return False
    rest = g.full & ~x
    start = (rest & -rest).bit_length() - 1
    return component_of(g, start, rest) != rest


def feasible_by_degree_range(g: Graph, gg: int) -> bool:
    """Necessary condition for a g-good-neighbor cut to exist.

    A cut leaves two components of at least ``gg+1`` vertices each, which
    forces ``gg <= min(Δ, floor((n-3)/2))`` and at least ``(gg+1)**2``
    missing edges.
    """
    n = g.n
    if gg < 0 or n < 3:
        return False
    if gg > min(g.max_degree(), (n - 3) // 2):
        return False
    return g.m <= comb(n, 2) - (gg + 1) ** 2


@dataclass(frozen=True)
class GnCutResult:
    """Outcome of a κ^g search.

    ``value`` is κ^g when ``status == "exact"``; ``lower_bound`` is always a
    certified lower bound (``cap + 1`` when the search stopped at the cap).
    """

    gg: int
    status: str
    value: Optional[int] = None
    witness: Optional[VertexSet] = None
    lower_bound: int = 0

    @property
    def exists(self) -> bool:
        return self.status == EXACT


def iter_gn_faulty_sets(
    g: Graph, gg: int, k: int, lead: Optional[int] = None
) -> Iterator[int]:
    """Yield every ``k``-subset ``X`` with δ(G - X) >= ``gg`` as a mask, in
    lexicographic order.

    A partial choice is abandoned as soon as a vertex already committed to
    stay outside ``X`` cannot keep ``gg`` outside neighbors even if every
    undecided vertex stays.  ``lead`` restricts to subsets whose smallest
    element is ``lead``.  ``X = V`` is never yielded.
    """
    n, rows = g.n, g.rows
    if k >= n or k < 0:
        return
    alive = [r.bit_count() for r in rows]

    def rec(i: int, need: int, x: int) -> Iterator[int]:
        if need == 0:
            if gg > 0:
                for v in range(i, n):
                    if alive[v] < gg:
                        return
            yield x
            return
        if n - i < need:
            return
        row = rows[i]
        if gg > 0:
            for w in iter_bits(row):
                alive[w] -= 1
            ok = True
            for w in iter_bits(row & ((1 << i) - 1) & ~x):
                if alive[w] < gg:
                    ok = False
                    break
            if ok:
                yield from rec(i + 1, need - 1, x | 1 << i)
            for w in iter_bits(row):
                alive[w] += 1
            if alive[i] >= gg and not (lead is not None and i == lead):
                yield from rec(i + 1, need, x)
        else:
            yield from rec(i + 1, need - 1, x | 1 << i)
            if not (lead is not None and i == lead):
                yield from rec(i + 1, need, x)

    if lead is None:
        yield from rec(0, k, 0)
        return
    # vertices below the lead stay outside X
    for v in range(lead):
        if alive[v] < gg:
            return
    yield from rec(lead, k, 0)


def iter_gn_cuts(g: Graph, gg: int, k: int, lead: Optional[int] = None) -> Iterator[int]:
    """g-good-neighbor cuts of size exactly ``k``, lexicographic order."""
    full = g.full
    for x in iter_gn_faulty_sets(g, gg, k, lead):
        rest = full & ~x
        start = (rest & -rest).bit_length() - 1
        if component_of(g, start, rest) != rest:
            yield x


def _cut_key(x: int) -> tuple[int, tuple[int, ...]]:
    return (x.bit_count(), tuple(iter_bits(x)))


def _anchored_min_cut(g: Graph, gg: int, bound: int, seeds) -> Optional[int]:
    """Lexicographically smallest cut of size ``<= bound`` among those whose
    smallest component has its least vertex in ``seeds``.

    Every minimum cut ``X`` equals ``N(C)`` plus the vertices peeled from the
    rest to reach its g-core, where ``C`` is a smallest component of
    ``G - X``.  So it suffices to grow ``C`` from its least vertex, sending
    each frontier vertex either into ``C`` or into ``X``.
    """
    rows, full, n = g.rows, g.full, g.n
    best: Optional[int] = None
    # sentinel: any cut of size <= bound sorts below it
    best_key = (bound, (n,))

    for s in seeds:
        lower = (1 << s) - 1

        def grow(c: int, nbr: int, xd: int, size: int) -> None:
            nonlocal best, best_key
            xc = xd.bit_count()
            # ties are kept so the lexicographic minimum can still be found
            if xc > best_key[0] or 2 * size > n - xc:
                return
            cand = nbr & ~c & ~xd
            if not cand:
                if gg > 0 and not has_min_degree(g, c, gg):
                    return
                rest = full & ~c & ~xd
                core = core_mask(g, rest, gg)
                if not core:
                    return
                x = xd | (rest & ~core)
                key = _cut_key(x)
                if key < best_key:
                    best, best_key = x, key
                return
            w = cand & -cand
            r = rows[w.bit_length() - 1]
            grow(c | w, nbr | r, xd | (r & lower), size + 1)
            grow(c, nbr, xd | w, size)

        grow(1 << s, rows[s], rows[s] & lower, 1)
    return best


def _anchored_job(args) -> Optional[int]:
    g, gg, bound, seeds = args
    return _anchored_min_cut(g, gg, bound, seeds)


def _min_cut(g: Graph, gg: int, bound: int, workers: int) -> Optional[int]:
    if workers <= 1:
        return _anchored_min_cut(g, gg, bound, range(g.n))
    chunks = [range(i, g.n, workers) for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        hits = [h for h in pool.map(_anchored_job, [(g, gg, bound, ch) for ch in chunks]) if h is not None]
    return min(hits, key=_cut_key, default=None)


def resolve_workers(workers: Optional[int] = None) -> int:
    env = os.environ.get("GND_WORKERS")
    if env:
        return max(1, int(env))
    return max(1, workers or 1)


def kappa_g(
    g: Graph, gg: int, cap: Optional[int] = None, workers: Optional[int] = None
) -> GnCutResult:
    """Exact κ^g by deepening on the cut size over anchored components.

    Sizes start at the ordinary vertex connectivity, a lower bound for
    every κ^g.  The witness is the lexicographically smallest minimum cut.
    When no cut of size ``<= cap`` exists but a larger one might, the
    result is ``undetermined-above-cap`` with ``lower_bound = cap + 1``.
    """
    if gg < 0:
        raise GraphError("g must be non-negative")
    if not g.is_connected():
        raise GraphError("κ^g is defined for connected graphs")
    n = g.n
    if not feasible_by_degree_range(g, gg):
        return GnCutResult(gg, NONEXISTENT, lower_bound=0)
    # a cut leaves two components of >= gg+1 vertices
    top = n - 2 * (gg + 1)
    bound = top if cap is None else min(cap, top)
    workers = resolve_workers(workers)
    floor = vertex_connectivity(g)
    for k in range(floor, bound + 1):
        x = _min_cut(g, gg, k, workers)
        if x is not None:
            return GnCutResult(gg, EXACT, k, VertexSet(n, x), lower_bound=k)
    if bound >= top:
        return GnCutResult(gg, NONEXISTENT, lower_bound=0)
    return GnCutResult(gg, UNDETERMINED, lower_bound=max(bound + 1, floor))


def kappa_g_enumerate(g: Graph, gg: int, cap: Optional[int] = None) -> GnCutResult:
    """κ^g by listing faulty sets of each size in lexicographic order.

    Slower than :func:`kappa_g`; kept as an independent cross-check.
    """
    if not g.is_connected():
        raise GraphError("κ^g is defined for connected graphs")
    n = g.n
    cap = n if cap is None else min(cap, n)
    if not feasible_by_degree_range(g, gg):
        return GnCutResult(gg, NONEXISTENT, lower_bound=0)
    for k in range(0, min(cap, n - 2 * (gg + 1)) + 1):
        x = next(iter_gn_cuts(g, gg, k), None)
        if x is not None:
            return GnCutResult(gg, EXACT, k, VertexSet(n, x), lower_bound=k)
    if cap >= n - 2 * (gg + 1):
        return GnCutResult(gg, NONEXISTENT, lower_bound=0)
    return GnCutResult(gg, UNDETERMINED, lower_bound=cap + 1)


def iter_minimum_cuts(g: Graph, gg: int, kappa: int) -> Iterator[VertexSet]:
    """All g-good-neighbor cuts of size ``kappa`` (lexicographic)."""
    for x in iter_gn_cuts(g, gg, kappa):
        yield VertexSet(g.n, x)


def vertex_connectivity(g: Graph) -> int:
    """Ordinary vertex connectivity κ(G) via max-flow; a lower bound for every κ^g."""
    import networkx as nx

    return nx.node_connectivity(to_networkx(g))


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
