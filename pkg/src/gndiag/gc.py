"""The g-good-neighbor cut-component (gc) number c^g.

For a g-good-neighbor cut ``X`` each component ``C`` of ``G - X`` scores
``|A|`` when it splits into ``A ∪ B`` with both sides of induced minimum
degree ``>= g`` (the most balanced such split, ``|A| >= |B|``), and ``|C|``
otherwise.  c^g is the minimum of ``|X| + score(C)`` over all cuts and
components.

The exact search deepens on the target value ``v``.  Rather than listing
cuts directly, it grows the scoring component ``C`` from its smallest
vertex and charges every rejected frontier vertex to ``X``.  For a fixed
``C`` the smallest admissible cut is ``N(C)`` plus whatever must be peeled
from the rest to reach its g-core, so the minimum over these anchored
pairs equals the minimum over all cuts.  Since ``|X| >= κ^g`` and
``score(C) >= ceil(|C|/2)``, a level only explores components of at most
``2(v - κ^g)`` vertices.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .connectivity import EXACT, NONEXISTENT, GnCutResult, _is_cut, kappa_g, resolve_workers
from .graph import (
    Graph,
    GraphError,
    VertexSet,
    _check_width,
    component_masks,
    core_mask,
    has_min_degree,
    iter_bits,
)

COMPONENT = "component"
PARTITION = "partition"
G1 = "G1"
G2 = "G2"
UNDETERMINED_BUDGET = "undetermined-above-budget"


@dataclass(frozen=True)
class GcCertificate:
    """Witness that c^g <= ``value``.

    ``part`` is the whole component ``C_r`` (kind ``component``) or the
    larger side ``A_1`` of a balanced split (kind ``partition``, with the
    other side in ``part_b``).
    """

    x: VertexSet
    kind: str
    part: VertexSet
    part_b: Optional[VertexSet]
    value: int

    def sort_key(self):
        return (
            self.value,
            0 if self.kind == COMPONENT else 1,
            len(self.x),
            self.x.sort_key(),
            self.part.sort_key(),
        )

    def to_dict(self) -> dict:
        return {
            "cut": self.x.to_list(),
            "kind": self.kind,
            "part": self.part.to_list(),
            "part_b": self.part_b.to_list() if self.part_b is not None else [],
            "value": self.value,
        }


@dataclass(frozen=True)
class GcResult:
    gg: int
    status: str
    value: Optional[int] = None
    certificate: Optional[GcCertificate] = None
    graph_class: Optional[str] = None
    kappa: Optional[GnCutResult] = None
    lower_bound: int = 0

    @property
    def exists(self) -> bool:
        return self.status == EXACT

    @property
    def budget_exhausted(self) -> bool:
        return self.status == UNDETERMINED_BUDGET

    def to_dict(self) -> dict:
        cert = self.certificate.to_dict() if self.certificate else {}
        return {
            "g": self.gg,
            "value": self.value,
            "class": self.graph_class,
            "cut": cert.get("cut", []),
            "kind": cert.get("kind"),
            "part": cert.get("part", []),
            "part_b": cert.get("part_b", []),
            "budget_exhausted": self.budget_exhausted,
            "status": self.status,
            "lower_bound": self.lower_bound,
            "kappa": self.kappa.value if self.kappa else None,
        }


# -- balanced partitions ---------------------------------------------------------


def _split_with_size(g: Graph, cmask: int, gg: int, a: int) -> Optional[int]:
    """Lexicographically smallest ``A ⊂ C`` with ``|A| = a`` such that both
    ``A`` and ``C - A`` have induced minimum degree ``>= gg``; ``None`` if none."""
    rows = g.rows
    verts = list(iter_bits(cmask))
    k = len(verts)
    b = k - a
    if a < 1 or b < 1:
        return None

    def feasible(v: int, side: int, undecided: int) -> bool:
        return (rows[v] & (side | undecided)).bit_count() >= gg

    def rec(i: int, amask: int, bmask: int, undecided: int) -> Optional[int]:
        if i == k:
            return amask
        v = verts[i]
        bit = 1 << v
        rest = undecided & ~bit
        na, nb = amask.bit_count(), bmask.bit_count()
        if na < a:
            na_mask = amask | bit
            if gg <= 0 or (
                feasible(v, na_mask, rest)
                and all(feasible(w, bmask, rest) for w in iter_bits(rows[v] & bmask))
            ):
                hit = rec(i + 1, na_mask, bmask, rest)
                if hit is not None:
                    return hit
        if nb < b:
            nb_mask = bmask | bit
            if gg <= 0 or (
                feasible(v, nb_mask, rest)
                and all(feasible(w, amask, rest) for w in iter_bits(rows[v] & amask))
            ):
                return rec(i + 1, amask, nb_mask, rest)
        return None

    return rec(0, 0, 0, cmask)


def _balanced_split(
    g: Graph, cmask: int, gg: int, max_side: Optional[int] = None
) -> Optional[tuple[int, int]]:
    """Most balanced valid split ``(A, B)`` of ``C`` with ``|A| >= |B|``.

    Minimizing ``|A| - |B|`` is the same as minimizing ``|A|``, so sizes are
    tried from ``ceil(|C|/2)`` upward; with ``max_side`` only splits whose
    larger side fits are considered.
    """
    k = cmask.bit_count()
    top = k - max(gg + 1, 1)
    if max_side is not None:
        top = min(top, max_side)
    for a in range((k + 1) // 2, top + 1):
        amask = _split_with_size(g, cmask, gg, a)
        if amask is not None:
            return amask, cmask & ~amask
    return None


def balanced_partition(g: Graph, c: VertexSet, gg: int) -> Optional[tuple[VertexSet, VertexSet]]:
    """Split ``c`` into ``(a1, b1)`` with both induced minimum degrees ``>= gg``,
    ``|a1| >= |b1|`` and ``|a1| - |b1|`` minimum; ``None`` when impossible.

    Exponential in ``|c|`` in the worst case; meant for the small components
    that matter to c^g.
    """
    _check_width(g, c)
    split = _balanced_split(g, c.bits, gg)
    if split is None:
        return None
    return VertexSet(g.n, split[0]), VertexSet(g.n, split[1])


def component_score(g: Graph, cmask: int, gg: int) -> tuple[int, str, Optional[tuple[int, int]]]:
    """``(score, kind, split)`` of one component."""
    split = _balanced_split(g, cmask, gg)
    if split is None:
        return cmask.bit_count(), COMPONENT, None
    return split[0].bit_count(), PARTITION, split


# -- anchored deepening search -------------------------------------------------


def _level_seed(g: Graph, gg: int, v: int, x_floor: int, s: int) -> Optional[tuple]:
    """Best certificate of value <= ``v`` whose scoring component has
    smallest vertex ``s``, as a sort-key tuple with raw masks."""
    rows, full = g.rows, g.full
    lower = (1 << s) - 1
    need = gg + 1
    best = None

    def leaf(c: int, xd: int, size: int):
        nonlocal best
        if gg > 0 and not has_min_degree(g, c, gg):
            return
        rest = full & ~c & ~xd
        core = core_mask(g, rest, gg)
        if not core:
            return
        x = xd | (rest & ~core)
        xs = x.bit_count()
        room = v - xs
        if room < need or 2 * room < size:
            return
        if size <= room:
            split = _balanced_split(g, c, gg)
        else:
            split = _balanced_split(g, c, gg, max_side=room)
            if split is None:
                return
        if split is None:
            key = (xs + size, 0, xs, tuple(iter_bits(x)), tuple(iter_bits(c)), x, c, None)
        else:
            a, b = split
            key = (xs + a.bit_count(), 1, xs, tuple(iter_bits(x)), tuple(iter_bits(a)), x, a, b)
        if best is None or key[:5] < best[:5]:
            best = key

    def grow(c: int, nbr: int, xd: int, size: int):
        xc = xd.bit_count()
        if max(xc, x_floor) + max(need, (size + 1) // 2) > v:
            return
        cand = nbr & ~c & ~xd
        if not cand:
            leaf(c, xd, size)
            return
        w = cand & -cand
        r = rows[w.bit_length() - 1]
        grow(c | w, nbr | r, xd | (r & lower), size + 1)
        grow(c, nbr, xd | w, size)

    grow(1 << s, rows[s], rows[s] & lower, 1)
    return best


def _level_job(args):
    g, gg, v, x_floor, seeds = args
    found = [_level_seed(g, gg, v, x_floor, s) for s in seeds]
    found = [f for f in found if f is not None]
    return min(found, key=lambda t: t[:5]) if found else None


def _search_level(g: Graph, gg: int, v: int, x_floor: int, workers: int) -> Optional[GcCertificate]:
    if workers <= 1:
        hits = [_level_job((g, gg, v, x_floor, range(g.n)))]
    else:
        chunks = [list(range(i, g.n, workers)) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = list(pool.map(_level_job, [(g, gg, v, x_floor, ch) for ch in chunks]))
    hits = [h for h in hits if h is not None]
    if not hits:
        return None
    value, rank, _, _, _, x, part, part_b = min(hits, key=lambda t: t[:5])
    n = g.n
    return GcCertificate(
        x=VertexSet(n, x),
        kind=COMPONENT if rank == 0 else PARTITION,
        part=VertexSet(n, part),
        part_b=None if part_b is None else VertexSet(n, part_b),
        value=value,
    )


def gc_number(
    g: Graph,
    gg: int,
    budget: Optional[int] = None,
    kappa: Optional[GnCutResult] = None,
    workers: Optional[int] = None,
) -> GcResult:
    """Exact c^g with a certificate, by deepening from κ^g + g + 1.

    ``budget`` caps the value searched; if it is reached without success the
    result is ``undetermined-above-budget`` with ``lower_bound = budget+1``.
    """
    if not g.is_connected():
        raise GraphError("c^g is defined for connected graphs")
    if kappa is None:
        kappa = kappa_g(g, gg, workers=workers)
    if kappa.status == NONEXISTENT:
        return GcResult(gg, NONEXISTENT, kappa=kappa)
    if kappa.status != EXACT:
        raise GraphError("gc_number needs an exact κ^g")
    workers = resolve_workers(workers)
    budget = g.n if budget is None else min(budget, g.n)
    start = kappa.value + gg + 1
    for v in range(start, budget + 1):
        cert = _search_level(g, gg, v, kappa.value, workers)
        if cert is not None:
            cls = G1 if cert.kind == COMPONENT else G2
            return GcResult(gg, EXACT, cert.value, cert, cls, kappa, lower_bound=cert.value)
    return GcResult(gg, UNDETERMINED_BUDGET, kappa=kappa, lower_bound=max(start, budget + 1))


def classify(g: Graph, gg: int, result: Optional[GcResult] = None) -> str:
    """``G1`` when some optimal certificate is a whole component, else ``G2``."""
    result = result or gc_number(g, gg)
    if result.status == NONEXISTENT:
        raise GraphError(f"c^{gg} does not exist, so the graph has no class")
    if result.status != EXACT:
        raise GraphError("class is undetermined: gc search exhausted its budget")
    return result.graph_class


# -- certificate checking ------------------------------------------------------


def certificate_problems(g: Graph, gg: int, cert: GcCertificate, check_balance: bool = True) -> list[str]:
    """Independent re-validation of a certificate; returns a list of violations."""
    problems = []
    x, part = cert.x.bits, cert.part.bits
    if not _is_cut(g, x, gg):
        problems.append("x is not a g-good-neighbor cut")
        return problems
    comps = component_masks(g, g.full & ~x)
    if cert.kind == COMPONENT:
        if part not in comps:
            problems.append("part is not a whole component of G - x")
        elif check_balance and _balanced_split(g, part, gg) is not None:
            problems.append("component admits a valid split")
        if cert.value != len(cert.x) + len(cert.part):
            problems.append("value != |x| + |C_r|")
    elif cert.kind == PARTITION:
        b = cert.part_b.bits if cert.part_b is not None else 0
        if part & b or not part or not b:
            problems.append("split sides must be disjoint and nonempty")
        if (part | b) not in comps:
            problems.append("split does not cover a whole component")
        if not has_min_degree(g, part, gg) or not has_min_degree(g, b, gg):
            problems.append("a split side has induced minimum degree < g")
        if part.bit_count() < b.bit_count():
            problems.append("|a1| < |b1|")
        if check_balance and (part | b) in comps:
            best = _balanced_split(g, part | b, gg)
            if best is None or best[0].bit_count() != part.bit_count():
                problems.append("split is not the most balanced one")
        if cert.value != len(cert.x) + part.bit_count():
            problems.append("value != |x| + |a1|")
    else:
        problems.append(f"unknown kind {cert.kind!r}")
    return problems


def best_at_cut(g: Graph, gg: int, x: int) -> tuple[int, str, int, Optional[int]]:
    """``(score, kind, part, part_b)`` of the best-scoring component of ``G - x``.

    Components are scanned smallest first; one whose balanced side
    ``ceil(|C|/2)`` cannot beat the current score is skipped, which keeps
    the split search away from large components.
    """
    best = None
    for c in component_masks(g, g.full & ~x):
        size = c.bit_count()
        if best is not None and ((size + 1) // 2, 1) > best[0][:2]:
            continue
        bound = None if best is None else best[0][0]
        split = _balanced_split(g, c, gg, max_side=bound)
        if split is not None:
            key = ((split[0].bit_count(), 1, tuple(iter_bits(split[0]))), PARTITION, split[0], split[1])
        elif bound is not None and size > bound:
            continue
        else:
            # no split within the bound and C fits, so C is not partitionable
            key = ((size, 0, tuple(iter_bits(c))), COMPONENT, c, None)
        if best is None or key[0] < best[0]:
            best = key
    (score, _, _), kind, part, part_b = best
    return score, kind, part, part_b


def min_score_at_cut(g: Graph, gg: int, x: VertexSet) -> int:
    """``min{|C_r|, |A_1|}`` over the components of ``G - x``."""
    _check_width(g, x)
    return best_at_cut(g, gg, x.bits)[0]


# -- naive reference -------------------------------------------------------------


def gc_reference(g: Graph, gg: int) -> tuple[Optional[int], Optional[str]]:
    """c^g and class by brute force over every vertex subset.

    Uses plain Python sets and networkx components, and enumerates every
    split of every component; independent of the bit-mask search.
    """
    import networkx as nx

    from .connectivity import to_networkx

    nxg = to_networkx(g)
    vertices = list(range(g.n))
    adj = {v: set(nxg[v]) for v in vertices}

    def min_deg(s):
        return min((len(adj[v] & s) for v in s), default=None)

    best, best_component = None, False
    for k in range(g.n + 1):
        for xs in combinations(vertices, k):
            x = set(xs)
            rest = set(vertices) - x
            if not rest:
                continue
            if gg > 0 and min_deg(rest) < gg:
                continue
            comps = [set(c) for c in nx.connected_components(nxg.subgraph(rest))]
            if len(comps) < 2:
                continue
            for comp in comps:
                items = sorted(comp)
                gap, a_size = None, None
                for r in range(1, len(items)):
                    for a in combinations(items, r):
                        aset = set(a)
                        bset = comp - aset
                        if len(aset) < len(bset):
                            continue
                        if min_deg(aset) < gg or min_deg(bset) < gg:
                            continue
                        if gap is None or len(aset) - len(bset) < gap:
                            gap, a_size = len(aset) - len(bset), len(aset)
                score = len(comp) if a_size is None else a_size
                val = k + score
                is_comp = a_size is None
                if best is None or val < best:
                    best, best_component = val, is_comp
                elif val == best and is_comp:
                    best_component = True
    if best is None:
        return None, None
    return best, G1 if best_component else G2
