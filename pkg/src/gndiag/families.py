"""Named graph families and the Cartesian product."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph import Graph, GraphError, iter_bits

DEFAULT_VERTEX_CAP = 4096

KINDS = ("path", "cycle", "clique", "grid", "torus", "gen-hypercube", "D", "F", "H", "product")

_ARITY = {
    "path": 1,
    "cycle": 1,
    "clique": 1,
    "grid": 2,
    "torus": 2,
    "gen-hypercube": 2,
    "D": 1,
    "F": 2,
    "H": 3,
    "product": 0,
}


@dataclass(frozen=True)
class FamilySpec:
    """A named family instance.

    ``parameters`` are kind specific: ``path n``, ``cycle n``, ``clique n``,
    ``grid n m``, ``torus n m``, ``gen-hypercube n m``, ``D n``, ``F n g``,
    ``H n r g``.  A ``product`` carries two nested specs in ``operands``.
    """

    kind: str
    parameters: tuple[int, ...] = ()
    operands: tuple["FamilySpec", ...] = field(default=())

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GraphError(f"unknown family kind {self.kind!r}")
        if self.kind == "product":
            if len(self.operands) != 2 or self.parameters:
                raise GraphError("product takes exactly two operands and no parameters")
        elif len(self.parameters) != _ARITY[self.kind]:
            raise GraphError(
                f"{self.kind} takes {_ARITY[self.kind]} parameter(s), got {len(self.parameters)}"
            )
        _check_domain(self)

    def __str__(self) -> str:
        if self.kind == "product":
            a, b = self.operands
            left = f"({a})" if a.kind == "product" else str(a)
            right = f"({b})" if b.kind == "product" else str(b)
            return f"{left} * {right}"
        return " ".join([self.kind, *map(str, self.parameters)])

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``"grid 5 5"`` or ``"D 4 * path 5"`` (``*`` is the product, left-assoc)."""
        tokens = text.replace("(", " ( ").replace(")", " ) ").replace("*", " * ").split()
        spec, pos = _parse_product(tokens, 0)
        if pos != len(tokens):
            raise GraphError(f"trailing tokens in family spec: {tokens[pos:]}")
        return spec


def _parse_atom(tokens, pos):
    if pos >= len(tokens):
        raise GraphError("unexpected end of family spec")
    if tokens[pos] == "(":
        spec, pos = _parse_product(tokens, pos + 1)
        if pos >= len(tokens) or tokens[pos] != ")":
            raise GraphError("unbalanced parenthesis in family spec")
        return spec, pos + 1
    kind = tokens[pos]
    pos += 1
    params = []
    while pos < len(tokens) and tokens[pos] not in ("*", "(", ")"):
        try:
            params.append(int(tokens[pos]))
        except ValueError:
            raise GraphError(f"bad family parameter {tokens[pos]!r}") from None
        pos += 1
    return FamilySpec(kind, tuple(params)), pos


def _parse_product(tokens, pos):
    spec, pos = _parse_atom(tokens, pos)
    while pos < len(tokens) and tokens[pos] == "*":
        rhs, pos = _parse_atom(tokens, pos + 1)
        spec = FamilySpec("product", (), (spec, rhs))
    return spec, pos


def _check_domain(spec: FamilySpec) -> None:
    k, p = spec.kind, spec.parameters
    if k in ("path", "clique") and p[0] < 1:
        raise GraphError(f"{k} needs n >= 1")
    if k == "cycle" and p[0] < 3:
        raise GraphError("cycle needs n >= 3")
    if k in ("grid", "gen-hypercube") and min(p) < 1:
        raise GraphError(f"{k} needs positive dimensions")
    if k == "torus" and min(p) < 3:
        raise GraphError("torus needs both dimensions >= 3")
    if k == "D" and p[0] < 1:
        raise GraphError("D needs n >= 1")
    if k == "F":
        n, g = p
        if g < 0 or n < 2 * g + 3:
            raise GraphError("F(n, g) needs g >= 0 and n >= 2g+3")
    if k == "H":
        n, r, g = p
        if r < 1 or not 3 <= g <= math.ceil((n - r) / 2) - 1:
            raise GraphError("H(n, r, g) needs r >= 1 and 3 <= g <= ceil((n-r)/2)-1")


# -- elementary graphs ---------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def circulant_regular(order: int, degree: int) -> Graph:
    """Connected ``degree``-regular circulant on ``order`` vertices.

    Offsets ``±1..±floor(degree/2)``, plus the antipodal chord when the
    degree is odd.
    """
    if degree >= order or (degree % 2 == 1 and order % 2 == 1):
        raise GraphError(f"no {degree}-regular circulant on {order} vertices")
    if order > 2 and degree < 2 or order == 2 and degree != 1:
        raise GraphError(f"a {degree}-regular graph on {order} vertices is not connected")
    edges = set()
    for i in range(order):
        for off in range(1, degree // 2 + 1):
            j = (i + off) % order
            edges.add((min(i, j), max(i, j)))
        if degree % 2:
            j = (i + order // 2) % order
            edges.add((min(i, j), max(i, j)))
    g = Graph.from_edges(order, sorted(edges))
    assert all(g.degree(v) == degree for v in range(order))
    return g


def disjoint_union(*graphs: Graph) -> tuple[list[tuple[int, int]], list[int]]:
    """Edge list of the disjoint union and the id offset of each operand."""
    edges, offsets, base = [], [], 0
    for g in graphs:
        offsets.append(base)
        edges.extend((u + base, v + base) for u, v in g.edges())
        base += g.n
    return edges, offsets


def d_graph(n: int) -> Graph:
    """Two ``K_n`` joined through a new center vertex 0.

    Vertex 0 is the center, ``1..n`` the first clique, ``n+1..2n`` the
    second; the center is adjacent to 1 and ``n+1``.
    """
    k = complete_graph(n)
    edges, (a, b) = disjoint_union(k, k)
    edges = [(u + 1, v + 1) for u, v in edges]
    edges += [(0, a + 1), (0, b + 1)]
    return Graph.from_edges(2 * n + 1, edges)


def f_graph(n: int, g: int) -> Graph:
    """``K_{g+1}`` (ids ``0..g``) and ``K_{n-g-1}`` joined by the edge ``(0, g+1)``."""
    if n < 2 * g + 3:
        raise GraphError("F(n, g) needs n >= 2g+3")
    edges, (a, b) = disjoint_union(complete_graph(g + 1), complete_graph(n - g - 1))
    edges.append((a, b))
    return Graph.from_edges(n, edges)


def h_graph(n: int, r: int, g: int) -> Graph:
    """Two connected ``g``-regular blocks bridged by ``r`` degree-2 hub vertices.

    Hubs are ``0..r-1``; the blocks of orders ``floor((n-r)/2)`` and
    ``ceil((n-r)/2)`` follow.  Every hub is adjacent to the lowest vertex of
    each block.
    """
    lo, hi = (n - r) // 2, (n - r + 1) // 2
    blocks = [circulant_regular(lo, g), circulant_regular(hi, g)]
    edges, (a, b) = disjoint_union(*blocks)
    edges = [(u + r, v + r) for u, v in edges]
    for i in range(r):
        edges += [(i, a + r), (i, b + r)]
    return Graph.from_edges(n, edges)


def cartesian_product(g: Graph, h: Graph, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """``g □ h`` with row-major vertex order: ``(u, v)`` has id ``u*|h| + v``."""
    if g.n == 0 or h.n == 0:
        raise GraphError("product operands must be nonempty")
    if g.n * h.n > cap:
        raise GraphError(f"product has {g.n * h.n} vertices, above the cap of {cap}")
    m = h.n
    rows = []
    for u in range(g.n):
        gu = [w * m for w in iter_bits(g.rows[u])]
        for v in range(m):
            row = h.rows[v] << (u * m)
            for base in gu:
                row |= 1 << (base + v)
            rows.append(row)
    labels = tuple((u, v) for u in range(g.n) for v in range(m))
    return Graph(g.n * m, tuple(rows), labels)


def make_family(spec: FamilySpec, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    k, p = spec.kind, spec.parameters
    if k == "product":
        a, b = spec.operands
        return cartesian_product(make_family(a, cap), make_family(b, cap), cap)
    if k == "path":
        g = path_graph(p[0])
    elif k == "cycle":
        g = cycle_graph(p[0])
    elif k == "clique":
        g = complete_graph(p[0])
    elif k == "grid":
        return cartesian_product(path_graph(p[0]), path_graph(p[1]), cap)
    elif k == "torus":
        return cartesian_product(cycle_graph(p[0]), cycle_graph(p[1]), cap)
    elif k == "gen-hypercube":
        return cartesian_product(complete_graph(p[0]), complete_graph(p[1]), cap)
    elif k == "D":
        g = d_graph(p[0])
    elif k == "F":
        g = f_graph(*p)
    elif k == "H":
        g = h_graph(*p)
    else:  # pragma: no cover - guarded by FamilySpec
        raise GraphError(k)
    if g.n > cap:
        raise GraphError(f"graph has {g.n} vertices, above the cap of {cap}")
    return g


def family(text: str, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Shorthand: ``family("D 4 * path 5")``."""
    return make_family(FamilySpec.parse(text), cap)


def label_product(xs, ys) -> set[tuple]:
    """Coordinate label set ``xs × ys`` of product vertices."""
    return {(x, y) for x in xs for y in ys}

