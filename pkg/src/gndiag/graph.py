"""Immutable undirected graphs and bit-vector vertex sets.

Vertices are the dense integers ``0..n-1``.  A vertex set is an ``int``
bit mask wrapped in :class:`VertexSet`; the search kernels elsewhere in the
package work on the raw masks (``Graph.rows`` and ``VertexSet.bits``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

EMPTY = "empty"


class GraphError(ValueError):
    """Raised for malformed graphs, edge lists, or mismatched vertex sets."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(ids: Iterable[int]) -> int:
    bits = 0
    for i in ids:
        bits |= 1 << i
    return bits


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``{0, ..., width-1}`` stored as a bit mask."""

    width: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.width:
            raise GraphError(f"bits {self.bits:#x} exceed width {self.width}")

    @classmethod
    def of(cls, width: int, ids: Iterable[int]) -> "VertexSet":
        ids = list(ids)
        for i in ids:
            if not 0 <= i < width:
                raise GraphError(f"vertex {i} out of range for width {width}")
        return cls(width, mask_of(ids))

    @classmethod
    def full(cls, width: int) -> "VertexSet":
        return cls(width, (1 << width) - 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __contains__(self, v: int) -> bool:
        return bool(self.bits >> v & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check(self, other: "VertexSet") -> None:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other.width != self.width:
            raise GraphError(f"width mismatch: {self.width} vs {other.width}")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.width, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.width, self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.width, self.bits & ~other.bits)

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.width, self.bits ^ other.bits)

    def complement(self) -> "VertexSet":
        return VertexSet(self.width, ((1 << self.width) - 1) & ~self.bits)

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def sort_key(self) -> tuple[int, ...]:
        """Key for lexicographic order on sorted vertex tuples."""
        return tuple(iter_bits(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with adjacency stored as one bit row per vertex."""

    n: int
    rows: tuple[int, ...]
    labels: Optional[tuple[tuple, ...]] = None

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {u} references a vertex >= n")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            for v in iter_bits(row):
                if not self.rows[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise GraphError("labels must have exactly n entries")
            if len(set(self.labels)) != self.n:
                raise GraphError("labels must be pairwise distinct")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Sequence[tuple]] = None,
    ) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if rows[u] >> v & 1:
                raise GraphError(f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), None if labels is None else tuple(labels))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def vset(self, ids: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, ids)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.rows), default=0)

    def max_degree(self) -> int:
        return max((r.bit_count() for r in self.rows), default=0)

    def is_connected(self) -> bool:
        return self.n > 0 and len(component_masks(self, self.full)) == 1

    def is_complete(self) -> bool:
        return all(r.bit_count() == self.n - 1 for r in self.rows)

    def label(self, v: int):
        return v if self.labels is None else self.labels[v]

    def index_of(self, label) -> int:
        if self.labels is None:
            raise GraphError("graph has no coordinate labels")
        return self.labels.index(tuple(label))


def _check_width(g: Graph, *sets: VertexSet) -> None:
    for s in sets:
        if s.width != g.n:
            raise GraphError(f"vertex set width {s.width} does not match graph order {g.n}")


def neighborhood(g: Graph, mask: int) -> int:
    """Union of the neighbor rows of ``mask`` (may intersect ``mask``)."""
    out = 0
    rows = g.rows
    for v in iter_bits(mask):
        out |= rows[v]
    return out


def component_of(g: Graph, start: int, within: int) -> int:
    """Vertex mask of the component of ``g[within]`` containing ``start``."""
    rows = g.rows
    comp = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & within & ~comp
        comp |= frontier
    return comp


def component_masks(g: Graph, within: int) -> list[int]:
    """Components of ``g[within]`` as masks, sorted by (size, smallest vertex)."""
    comps = []
    rest = within
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = component_of(g, start, rest)
        comps.append(comp)
        rest &= ~comp
    comps.sort(key=lambda c: (c.bit_count(), c & -c))
    return comps


def min_degree_within(g: Graph, mask: int) -> Optional[int]:
    """Minimum degree of ``g[mask]``; ``None`` for the empty set."""
    if not mask:
        return None
    rows = g.rows
    return min((rows[v] & mask).bit_count() for v in iter_bits(mask))


def has_min_degree(g: Graph, mask: int, k: int) -> bool:
    """True iff every vertex of ``mask`` has at least ``k`` neighbors in ``mask``."""
    if k <= 0:
        return True
    rows = g.rows
    for v in iter_bits(mask):
        if (rows[v] & mask).bit_count() < k:
            return False
    return True


def core_mask(g: Graph, mask: int, k: int) -> int:
    """The ``k``-core of ``g[mask]``: repeatedly drop vertices of degree < ``k``."""
    if k <= 0:
        return mask
    rows = g.rows
    changed = True
    while changed and mask:
        changed = False
        for v in iter_bits(mask):
            if (rows[v] & mask).bit_count() < k:
                mask &= ~(1 << v)
                changed = True
    return mask


def components_after_removal(g: Graph, x: VertexSet) -> list[VertexSet]:
    """Connected components of ``g - x``, ordered by size then smallest vertex."""
    _check_width(g, x)
    return [VertexSet(g.n, c) for c in component_masks(g, g.full & ~x.bits)]


def induced_min_degree(g: Graph, s: VertexSet):
    """Minimum degree of the induced subgraph ``g[s]``, or ``EMPTY`` when ``s`` is empty."""
    _check_width(g, s)
    d = min_degree_within(g, s.bits)
    return EMPTY if d is None else d


def has_edge_between(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    _check_width(g, a, b)
    return bool(neighborhood(g, a.bits) & b.bits)


# -- edge-list text format -------------------------------------------------


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format; ``#`` starts a comment line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge list")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError:
        raise GraphError(f"bad header line: {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise GraphError("negative n or m in header")
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"bad edge line: {ln!r}") from None
        if not 0 <= u < v < n:
            raise GraphError(f"edge line must satisfy 0 <= u < v < n: {ln!r}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def read_edge_list(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_edge_list(g))
