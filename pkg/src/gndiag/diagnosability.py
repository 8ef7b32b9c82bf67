"""g-good-neighbor diagnosability t^g: exact formula, brute-force oracle,
existence test, and Cartesian-product upper bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import ceil
from typing import Optional

from .connectivity import EXACT, NONEXISTENT, _is_faulty, kappa_g
from .gc import COMPONENT, G1, G2, GcResult, gc_number
from .graph import Graph, GraphError, VertexSet, iter_bits

FORMULA = "formula"
ORACLE = "oracle"
BOUND = "bound"
BOUND_ONLY = "bound-only"
DEFAULT_ORACLE_CAP = 12


@dataclass(frozen=True)
class DiagnosabilityResult:
    """t^g as ``value`` (``status == "exact"``), ``"nonexistent"``, or an upper
    bound only (``status == "bound-only"``, bound in ``value``)."""

    gg: int
    status: str
    method: str
    value: Optional[int] = None
    witness: Optional[tuple[VertexSet, VertexSet]] = None
    gc: Optional[GcResult] = None

    def to_dict(self) -> dict:
        return {
            "g": self.gg,
            "value": self.value,
            "status": self.status,
            "method": self.method,
            "witness": [w.to_list() for w in self.witness] if self.witness else None,
            "c": self.gc.value if self.gc else None,
        }


def _faulty_sets_by_size(g: Graph, gg: int) -> list[list[int]]:
    """All g-good-neighbor faulty sets, bucketed by size, each bucket in lexicographic order."""
    buckets = []
    for k in range(g.n):
        buckets.append(
            [m for m in (sum(1 << v for v in c) for c in combinations(range(g.n), k)) if _is_faulty(g, m, gg)]
        )
    return buckets


def _neighborhood_table(g: Graph) -> list[int]:
    table = [0] * (1 << g.n)
    rows = g.rows
    for m in range(1, 1 << g.n):
        low = m & -m
        table[m] = table[m ^ low] | rows[low.bit_length() - 1]
    return table


def _check_oracle_size(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise GraphError(f"oracle enumeration limited to n <= {cap}, got n={g.n}")


def t_g_oracle(g: Graph, gg: int, cap: int = DEFAULT_ORACLE_CAP) -> DiagnosabilityResult:
    """t^g from the pair characterization, by enumerating faulty-set pairs.

    The value is ``M - 1`` where ``M`` is the least ``max(|F1|, |F2|)`` over
    indistinguishable pairs of distinct g-good-neighbor faulty sets; the
    witness is the lexicographically smallest such pair with ``|F1| >= |F2|``.
    """
    _check_oracle_size(g, cap)
    buckets = _faulty_sets_by_size(g, gg)
    nbr = _neighborhood_table(g)
    full = g.full
    smaller: list[int] = []
    for size, bucket in enumerate(buckets):
        pool = smaller + bucket
        pool_sorted = sorted(pool, key=lambda m: tuple(iter_bits(m)))
        for f1 in bucket:
            for f2 in pool_sorted:
                if f2 == f1:
                    continue
                if not nbr[f1 ^ f2] & full & ~(f1 | f2):
                    n = g.n
                    return DiagnosabilityResult(
                        gg, EXACT, ORACLE, size - 1, (VertexSet(n, f1), VertexSet(n, f2))
                    )
        smaller = pool
    return DiagnosabilityResult(gg, NONEXISTENT, ORACLE)


def _cover_pair(g: Graph, gg: int, cap: int) -> Optional[tuple[int, int]]:
    _check_oracle_size(g, cap)
    sets = [m for bucket in _faulty_sets_by_size(g, gg) for m in bucket]
    full = g.full
    for f1 in sets:
        need = full & ~f1
        for f2 in sets:
            if f2 != f1 and f2 & need == need:
                return f1, f2
    return None


def t_g_exists(g: Graph, gg: int, cap: int = DEFAULT_ORACLE_CAP, kappa=None) -> bool:
    """t^g exists iff κ^g exists or two distinct faulty sets cover V."""
    if not g.is_connected():
        raise GraphError("t^g is defined for connected graphs")
    kappa = kappa or kappa_g(g, gg)
    if kappa.status == EXACT:
        return True
    return _cover_pair(g, gg, cap) is not None


def _witness_from_certificate(g: Graph, gc: GcResult) -> tuple[VertexSet, VertexSet]:
    cert = gc.certificate
    if cert.kind == COMPONENT:
        return cert.x | cert.part, cert.x
    return cert.x | cert.part, cert.x | cert.part_b


def t_g_formula(
    g: Graph,
    gg: int,
    budget: Optional[int] = None,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
    gc: Optional[GcResult] = None,
) -> DiagnosabilityResult:
    """t^g = c^g - 1 when c^g <= ceil(n/2); otherwise an upper bound.

    Without a g-good-neighbor cut the existence test decides; if t^g still
    exists the oracle is used (small graphs only).
    """
    if not g.is_connected():
        raise GraphError("t^g is defined for connected graphs")
    gc = gc or gc_number(g, gg, budget=budget)
    n = g.n
    if gc.status == NONEXISTENT:
        if not t_g_exists(g, gg, oracle_cap, kappa=gc.kappa):
            return DiagnosabilityResult(gg, NONEXISTENT, FORMULA, gc=gc)
        if n <= oracle_cap:
            res = t_g_oracle(g, gg, oracle_cap)
            return DiagnosabilityResult(gg, res.status, ORACLE, res.value, res.witness, gc)
        raise GraphError("t^g exists without a g-good-neighbor cut; graph too large for the oracle")
    if gc.status != EXACT:
        # c^g > budget is unknown, but the order bound always applies
        return DiagnosabilityResult(gg, BOUND_ONLY, BOUND, n - gg - 2, gc=gc)
    if gc.value <= ceil(n / 2):
        return DiagnosabilityResult(gg, EXACT, FORMULA, gc.value - 1, _witness_from_certificate(g, gc), gc)
    return DiagnosabilityResult(gg, BOUND_ONLY, BOUND, min(gc.value - 1, n - gg - 2), gc=gc)


# -- product bounds --------------------------------------------------------------


@dataclass
class SplitBound:
    p: int
    q: int
    case: Optional[str] = None
    bound: Optional[int] = None
    hypotheses_ok: bool = False
    degree_condition_ok: bool = False
    reasons: list[str] = field(default_factory=list)
    t_p: Optional[int] = None
    t_q: Optional[int] = None
    kappa_p: Optional[int] = None
    kappa_q: Optional[int] = None
    class_p: Optional[str] = None
    class_q: Optional[str] = None

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


@dataclass
class ProductBoundReport:
    gg: int
    splits: list[SplitBound]

    def best(self) -> Optional[int]:
        """Smallest bound among splits that satisfy every hypothesis."""
        vals = [s.bound for s in self.splits if s.hypotheses_ok and s.bound is not None]
        return min(vals, default=None)

    def split(self, p: int) -> SplitBound:
        return next(s for s in self.splits if s.p == p)

    def to_dict(self) -> dict:
        return {"g": self.gg, "splits": [s.to_dict() for s in self.splits]}


def case_bound(case: str, p: int, q: int, tp: int, tq: int, kp: int, kq: int) -> int:
    """Upper bound on t^{p+q}(G □ H) for one factor-class combination."""
    if case == "i":
        return (tp + 1) * (tq + 1) - 1
    if case == "ii":
        return 2 * (tp + 1) * (tq + 1) - (tq + 1) * kp - (p + 1) * (q + 1) - 1
    if case == "iii":
        return 2 * (tp + 1) * (tq + 1) - (tp + 1) * kq - (p + 1) * (q + 1) - 1
    if case == "iv":
        return (2 * tp - kp + 2) * (2 * tq - kq + 2) - 2 * (p + 1) * (q + 1) - 1
    raise ValueError(case)


_CASES = {(G1, G1): "i", (G2, G1): "ii", (G1, G2): "iii", (G2, G2): "iv"}


def product_bounds(
    G: Graph, H: Graph, gg: int, budget: Optional[int] = None, cache: Optional[dict] = None
) -> ProductBoundReport:
    """Per-split upper bounds on t^g(G □ H) for every ``p + q = g``.

    A bound is emitted whenever both factor parameters are exactly known
    (κ exists and the t = c - 1 formula applies); ``hypotheses_ok`` also
    requires the degree-range and order conditions, and is the flag to use
    when relying on the bound.
    """
    if G.is_complete() or H.is_complete():
        raise GraphError("product bounds need non-complete factors")
    if not (G.is_connected() and H.is_connected()):
        raise GraphError("product bounds need connected factors")
    cache = {} if cache is None else cache
    n, m = G.n, H.n

    def gc_of(graph, which, k):
        key = (which, k)
        if key not in cache:
            cache[key] = gc_number(graph, k, budget=budget)
        return cache[key]

    splits = []
    for p in range(gg + 1):
        q = gg - p
        s = SplitBound(p, q)
        s.degree_condition_ok = gg <= G.min_degree() + q and gg <= H.min_degree() + p
        if not s.degree_condition_ok:
            s.reasons.append(
                f"degree range fails: need g <= δ(G)+q = {G.min_degree() + q} and g <= δ(H)+p = {H.min_degree() + p}"
            )
        orders_ok = n >= p + 1 and m >= q + 1
        if not orders_ok:
            s.reasons.append("factor orders below p+1 / q+1")
        known = True
        for graph, which, k, size, label in ((G, "G", p, n, "G"), (H, "H", q, m, "H")):
            r = gc_of(graph, which, k)
            if r.status == NONEXISTENT:
                s.reasons.append(f"κ^{k}({label}) does not exist")
                known = False
                continue
            if r.status != EXACT:
                s.reasons.append(f"c^{k}({label}) undetermined within budget")
                known = False
                continue
            if r.value > ceil(size / 2):
                s.reasons.append(f"c^{k}({label}) = {r.value} > ceil({size}/2)")
                known = False
            if label == "G":
                s.t_p, s.kappa_p, s.class_p = r.value - 1, r.kappa.value, r.graph_class
            else:
                s.t_q, s.kappa_q, s.class_q = r.value - 1, r.kappa.value, r.graph_class
        if known:
            s.case = _CASES[(s.class_p, s.class_q)]
            s.bound = case_bound(s.case, p, q, s.t_p, s.t_q, s.kappa_p, s.kappa_q)
            if s.case == "iv":
                s.reasons.append("case (iv) evaluated with t^q(H) and κ^q(H) in the second factor")
        s.hypotheses_ok = known and orders_ok and s.degree_condition_ok
        splits.append(s)
    return ProductBoundReport(gg, splits)
