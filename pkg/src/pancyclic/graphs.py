"""Core graph type and exact structural queries for graphs on at most 64 vertices.

A graph is stored as one Python int bitmask per vertex: bit ``j`` of row
``i`` is set iff ``ij`` is an edge. Every operation in this package is
exact; nothing here samples or approximates. The 64-vertex cap keeps every
adjacency row in a single machine word on CPython and is asserted at
construction time.

graph6 encoding and decoding follow the short form of the standard format
(first byte ``order + 63``, then the upper triangle of the adjacency
matrix read column by column, packed into 6-bit groups). The short form
carries orders up to 62; orders 63 and 64 are constructible through
:func:`build_graph` but are rejected on the graph6 path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

MAX_ORDER = 64
_GRAPH6_MAX_ORDER = 62
_GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Raised for invalid graph construction or queries on unsuitable graphs."""


class Graph6Error(GraphError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Edge(NamedTuple):
    """Undirected edge with endpoints normalised to ``u < v``."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise GraphError(f"loop at vertex {a} is not a valid edge")
        return cls(a, b) if a < b else cls(b, a)


class Graph:
    """Immutable simple undirected graph on ``order`` vertices (0-based)."""

    __slots__ = ("order", "adj", "size")

    order: int
    adj: tuple[int, ...]
    size: int

    def __init__(self, order: int, adj: tuple[int, ...]):
        # Trusted constructor: build_graph and the module's own operations
        # validate inputs; adj must already be symmetric and loop-free.
        self.order = order
        self.adj = adj
        self.size = sum(row.bit_count() for row in adj) // 2

    # -- queries ---------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def neighbors(self, v: int) -> Iterator[int]:
        row = self.adj[v]
        while row:
            low = row & -row
            yield low.bit_length() - 1
            row ^= low

    def edges(self) -> Iterator[Edge]:
        for u in range(self.order):
            row = self.adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    yield Edge(u, v)
                row >>= 1
                v += 1

    # -- derived graphs --------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        _check_pair(self.order, u, v)
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.order, tuple(rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        _check_pair(self.order, u, v)
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.order, tuple(rows))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Image under ``perm``: vertex ``v`` of self becomes ``perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.order)):
            raise GraphError("relabeling is not a permutation of the vertex set")
        rows = [0] * self.order
        for v in range(self.order):
            old = self.adj[v]
            new = 0
            while old:
                low = old & -old
                new |= 1 << perm[low.bit_length() - 1]
                old ^= low
            rows[perm[v]] = new
        return Graph(self.order, tuple(rows))

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.order == other.order
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.order, self.adj))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


def _check_pair(order: int, u: int, v: int) -> None:
    if not (0 <= u < order and 0 <= v < order):
        raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
    if u == v:
        raise GraphError(f"loop at vertex {u} is not allowed")


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph, validating order, endpoints, loops and duplicates."""
    if not (0 <= order <= MAX_ORDER):
        raise GraphError(f"order {order} outside supported range 0..{MAX_ORDER}")
    rows = [0] * order
    for a, b in edges:
        _check_pair(order, a, b)
        if (rows[a] >> b) & 1:
            raise GraphError(f"duplicate edge ({min(a, b)}, {max(a, b)})")
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(order, tuple(rows))


# -- graph6 ---------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 string, tolerating the standard header.

    Raises :class:`Graph6Error` with the offending byte offset for anything
    malformed: characters outside 63..126, truncated or overlong payloads,
    nonzero padding bits, or the extended order forms.
    """
    base = 0
    line = text
    if line.startswith(_GRAPH6_HEADER):
        base = len(_GRAPH6_HEADER)
        line = line[base:]
    line = line.rstrip("\n")
    if not line:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(line):
        code = ord(ch)
        if code < 63 or code > 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126", base + i)
    head = ord(line[0]) - 63
    if head == 63:
        # 126 introduces the multi-byte order forms used beyond 62 vertices.
        raise Graph6Error(
            "extended graph6 order form is not supported (orders above 62)", base
        )
    n = head
    need = (n * (n - 1) // 2 + 5) // 6
    body = line[1:]
    if len(body) < need:
        raise Graph6Error(
            f"truncated graph6 body: need {need} bytes for order {n}, got {len(body)}",
            base + len(line),
        )
    if len(body) > need:
        raise Graph6Error(
            f"overlong graph6 body: need {need} bytes for order {n}, got {len(body)}",
            base + 1 + need,
        )
    rows = [0] * n
    bits_total = n * (n - 1) // 2
    idx = 0
    u, v = 0, 1
    for k, ch in enumerate(body):
        group = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = (group >> shift) & 1
            if idx < bits_total:
                if bit:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                idx += 1
                u += 1
                if u == v:
                    u, v = 0, v + 1
            elif bit:
                raise Graph6Error("nonzero padding bit in graph6 body", base + 1 + k)
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    """Encode a graph of order at most 62 as a short-form graph6 string."""
    n = g.order
    if n > _GRAPH6_MAX_ORDER:
        raise GraphError(
            f"graph6 short form carries orders up to {_GRAPH6_MAX_ORDER}, got {n}"
        )
    out = [chr(n + 63)]
    group = 0
    nbits = 0
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            group = (group << 1) | ((col >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(group + 63))
                group = 0
                nbits = 0
    if nbits:
        group <<= 6 - nbits
        out.append(chr(group + 63))
    return "".join(out)


def emit_dot(g: Graph, labels: dict[str, int] | None = None) -> str:
    """Render as Graphviz DOT with deterministic vertex and edge order."""
    names = {}
    if labels:
        for name, v in labels.items():
            if not (0 <= v < g.order):
                raise GraphError(f"label {name!r} names vertex {v} outside the graph")
            if v in names:
                raise GraphError(f"vertex {v} carries two labels: {names[v]!r}, {name!r}")
            names[v] = name
    lines = ["graph g {"]
    for v in range(g.order):
        if v in names:
            lines.append(f'  {v} [label="{names[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- distances ------------------------------------------------------------


@dataclass(frozen=True)
class DistanceLayers:
    """BFS layers ``V_0 = {source}, V_1, ..., V_ecc`` from a source vertex."""

    source: int
    layers: tuple[frozenset[int], ...]

    @property
    def eccentricity(self) -> int:
        return len(self.layers) - 1

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)


def _bfs_masks(adj: tuple[int, ...], source: int, alive: int) -> list[int]:
    """Layer bitmasks of BFS from source, restricted to ``alive`` vertices."""
    seen = 1 << source
    frontier = seen
    layers = [frontier]
    while True:
        f = frontier
        nxt = 0
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= alive & ~seen
        if not nxt:
            return layers
        layers.append(nxt)
        seen |= nxt
        frontier = nxt


def distance_layers(g: Graph, source: int) -> DistanceLayers:
    """Exact distance layers from ``source``; raises if any vertex is unreached."""
    if not (0 <= source < g.order):
        raise GraphError(f"source vertex {source} outside 0..{g.order - 1}")
    full = (1 << g.order) - 1
    masks = _bfs_masks(g.adj, source, full)
    seen = 0
    for m in masks:
        seen |= m
    if seen != full:
        missing = (full & ~seen)
        v = (missing & -missing).bit_length() - 1
        raise GraphError(f"graph is disconnected: vertex {v} unreachable from {source}")
    layers = []
    for m in masks:
        members = []
        while m:
            low = m & -m
            members.append(low.bit_length() - 1)
            m ^= low
        layers.append(frozenset(members))
    return DistanceLayers(source=source, layers=tuple(layers))


def eccentricity(g: Graph, source: int) -> int:
    return distance_layers(g, source).eccentricity


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    full = (1 << g.order) - 1
    masks = _bfs_masks(g.adj, 0, full)
    seen = 0
    for m in masks:
        seen |= m
    return seen == full


def diameter(g: Graph) -> int:
    """Largest eccentricity; requires a connected graph of order >= 1."""
    if g.order == 0:
        raise GraphError("diameter of the empty graph is undefined")
    full = (1 << g.order) - 1
    best = 0
    for v in range(g.order):
        masks = _bfs_masks(g.adj, v, full)
        seen = 0
        for m in masks:
            seen |= m
        if seen != full:
            missing = full & ~seen
            w = (missing & -missing).bit_length() - 1
            raise GraphError(f"graph is disconnected: vertex {w} unreachable from {v}")
        best = max(best, len(masks) - 1)
    return best


def min_degree(g: Graph) -> int:
    if g.order == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(row.bit_count() for row in g.adj)


# -- vertex connectivity ---------------------------------------------------


def _local_connectivity(g: Graph, s: int, t: int, cutoff: int) -> int:
    # Number of internally vertex-disjoint s-t paths for non-adjacent s, t,
    # computed as max flow in the split digraph (v_in -> v_out, capacity 1;
    # edge arcs have capacity 1 as well, which is equivalent here because
    # every arc is throttled by a unit vertex anyway). Stops at ``cutoff``.
    n = g.order
    succ: list[set[int]] = [set() for _ in range(2 * n)]
    for v in range(n):
        succ[2 * v].add(2 * v + 1)
    for u, v in g.edges():
        succ[2 * u + 1].add(2 * v)
        succ[2 * v + 1].add(2 * u)
    src = 2 * s + 1
    snk = 2 * t
    flow = 0
    while flow < cutoff:
        prev = {src: -1}
        queue = deque([src])
        found = False
        while queue:
            x = queue.popleft()
            if x == snk:
                found = True
                break
            for y in succ[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        if not found:
            break
        y = snk
        while y != src:
            x = prev[y]
            succ[x].discard(y)
            succ[y].add(x)
            y = x
        flow += 1
    return flow


def vertex_connectivity(g: Graph, *, cutoff: int | None = None) -> int:
    """Exact vertex connectivity via Menger (max flow over all non-adjacent pairs).

    ``cutoff`` truncates the answer from above: the return value is
    ``min(kappa, cutoff)``, which is what threshold predicates need.
    Complete graphs give ``order - 1`` by convention. Requires order >= 2.
    """
    n = g.order
    if n < 2:
        raise GraphError("vertex connectivity needs at least 2 vertices")
    if cutoff is None:
        cutoff = n - 1
    if cutoff <= 0:
        return 0
    if all(row.bit_count() == n - 1 for row in g.adj):
        return min(n - 1, cutoff)
    if not is_connected(g):
        return 0
    best = min(cutoff, min_degree(g))
    for s in range(n):
        for t in range(s + 1, n):
            if g.has_edge(s, t):
                continue
            if best == 0:
                return 0
            best = min(best, _local_connectivity(g, s, t, best))
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    """Whether the vertex connectivity is at least ``k`` (k = 0 always holds)."""
    if k <= 0:
        return True
    if g.order < 2:
        return False
    return vertex_connectivity(g, cutoff=k) >= k
