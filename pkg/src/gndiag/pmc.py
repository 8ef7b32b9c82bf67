"""PMC test assignments, syndromes, and distinguishability of faulty sets.

Every edge ``uv`` contributes the two tests ``(u, v)`` and ``(v, u)``.  A
fault-free tester reports the true status of the tested vertex; a faulty
tester may report anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Union

import numpy as np

from .graph import Graph, GraphError, VertexSet, _check_width, iter_bits, neighborhood

MAX_ORACLE_ARCS = 30
_CHUNK_BITS = 20


@dataclass(frozen=True)
class TestAssignment:
    """All tests of a graph, as arcs sorted by (tester, tested)."""

    __test__ = False  # keep pytest from collecting this class

    arcs: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, g: Graph) -> "TestAssignment":
        return cls(tuple((u, v) for u in range(g.n) for v in iter_bits(g.rows[u])))

    @cached_property
    def index(self) -> dict[tuple[int, int], int]:
        return {arc: i for i, arc in enumerate(self.arcs)}

    def __len__(self) -> int:
        return len(self.arcs)

    def constraints(self, f: int) -> tuple[int, int]:
        """``(mask, target)`` over arc indices: a syndrome ``s`` is consistent
        with the faulty set ``f`` iff ``s & mask == target``."""
        mask = target = 0
        for i, (u, v) in enumerate(self.arcs):
            if not f >> u & 1:
                mask |= 1 << i
                if f >> v & 1:
                    target |= 1 << i
        return mask, target


@dataclass(frozen=True)
class Syndrome:
    """Outcome bits indexed like ``TestAssignment.arcs`` (bit ``i`` is arc ``i``)."""

    assignment: TestAssignment
    bits: int

    @classmethod
    def from_outcomes(
        cls, assignment: TestAssignment, outcomes: Mapping[tuple[int, int], int]
    ) -> "Syndrome":
        missing = set(assignment.arcs) - set(outcomes)
        if missing:
            raise GraphError(f"syndrome must be total; missing arcs {sorted(missing)}")
        bits = 0
        for arc, bit in outcomes.items():
            if arc not in assignment.index:
                raise GraphError(f"{arc} is not a test arc")
            if bit not in (0, 1):
                raise GraphError(f"outcome for {arc} must be 0 or 1")
            bits |= bit << assignment.index[arc]
        return cls(assignment, bits)

    def __getitem__(self, arc: tuple[int, int]) -> int:
        return self.bits >> self.assignment.index[arc] & 1


def _as_mask(s: Union[VertexSet, int]) -> int:
    return s.bits if isinstance(s, VertexSet) else s


def is_consistent(g: Graph, sigma: Syndrome, f: VertexSet) -> bool:
    _check_width(g, f)
    for i, (u, v) in enumerate(sigma.assignment.arcs):
        if u not in f and (sigma.bits >> i & 1) != (v in f):
            return False
    return True


def distinguishable_criterion(g: Graph, f1: VertexSet, f2: VertexSet) -> bool:
    """Closed-form test: some vertex of ``f1 Δ f2`` has a neighbor outside ``f1 ∪ f2``."""
    _check_width(g, f1, f2)
    if f1.bits == f2.bits:
        raise GraphError("distinguishability is defined for distinct faulty sets")
    return _criterion(g, f1.bits, f2.bits)


def _criterion(g: Graph, f1: int, f2: int) -> bool:
    outside = g.full & ~(f1 | f2)
    return bool(neighborhood(g, f1 ^ f2) & outside)


def distinguishable_oracle(g: Graph, f1: VertexSet, f2: VertexSet) -> bool:
    """Decide distinguishability by scanning every syndrome of ``g``.

    Exhaustive over ``2**(2|E|)`` syndromes; refuses graphs with more than
    ``MAX_ORACLE_ARCS`` test arcs.
    """
    _check_width(g, f1, f2)
    if f1.bits == f2.bits:
        raise GraphError("distinguishability is defined for distinct faulty sets")
    ta = TestAssignment.of(g)
    if len(ta) > MAX_ORACLE_ARCS:
        raise GraphError(f"{len(ta)} test arcs exceed the oracle guard of {MAX_ORACLE_ARCS}")
    m1, t1 = ta.constraints(f1.bits)
    m2, t2 = ta.constraints(f2.bits)
    total = 1 << len(ta)
    chunk = min(total, 1 << _CHUNK_BITS)
    base = np.arange(chunk, dtype=np.int64)
    for start in range(0, total, chunk):
        s = base + start
        shared = ((s & m1) == t1) & ((s & m2) == t2)
        if shared.any():
            return False
    return True


def indistinguishable_relation(g: Graph) -> np.ndarray:
    """Boolean matrix ``R[F1, F2]``: some syndrome is consistent with both.

    Indexed by faulty-set masks ``0..2**n-1``.  The syndrome space is walked
    tester by tester; partial syndromes are merged when they leave the same
    family of consistent faulty sets, so every syndrome is accounted for
    without materializing all ``2**(2|E|)`` of them.  Intended for ``n <= 6``.
    """
    n = g.n
    if n > 6:
        raise GraphError("indistinguishable_relation is limited to n <= 6")
    subsets = 1 << n
    # states: bit F of a state is set iff F is still consistent
    states = {(1 << subsets) - 1}
    for u in range(n):
        nbrs = list(iter_bits(g.rows[u]))
        # allowed[p] = faulty sets consistent with tester u reporting pattern p
        allowed = []
        for p in range(1 << len(nbrs)):
            fam = 0
            for f in range(subsets):
                if f >> u & 1 or all((f >> w & 1) == (p >> j & 1) for j, w in enumerate(nbrs)):
                    fam |= 1 << f
            allowed.append(fam)
        states = {s & a for s in states for a in allowed}
    rel = np.zeros((subsets, subsets), dtype=bool)
    for s in states:
        members = np.array(list(iter_bits(s)), dtype=np.int64)
        rel[np.ix_(members, members)] = True
    return rel
