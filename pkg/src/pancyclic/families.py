"""Constructors for the graph families the toolkit studies.

Vertices are 0-based integers everywhere. Families whose structure has
named parts (rim/spoke vertices, fan centres, block shares) also return a
label map from conventional names like ``v1`` or ``u3`` to vertex indices,
so DOT output and the property batteries can point at the right vertices.
Vertex numbering inside each constructor is fixed and documented inline.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graphs import Edge, Graph, GraphError, MAX_ORDER, build_graph


class Labeled(NamedTuple):
    """A constructed graph together with its name-to-vertex map."""

    graph: Graph
    labels: dict[str, int]


# -- basic families ----------------------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs order >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs order >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs order >= 1, got {n}")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    if n < 0:
        raise GraphError(f"empty graph needs order >= 0, got {n}")
    return build_graph(n, [])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts (g first)."""
    n = g.order + h.order
    if n > MAX_ORDER:
        raise GraphError(f"join would have order {n} > {MAX_ORDER}")
    edges = [(u, v) for u, v in g.edges()]
    edges += [(u + g.order, v + g.order) for u, v in h.edges()]
    edges += [(u, v + g.order) for u in range(g.order) for v in range(h.order)]
    return build_graph(n, edges)


def sequential_join(parts: list[Graph]) -> Graph:
    """Join of consecutive parts: part i is fully joined to part i + 1 only."""
    if not parts:
        raise GraphError("sequential join needs at least one part")
    total = sum(p.order for p in parts)
    if total > MAX_ORDER:
        raise GraphError(f"sequential join would have order {total} > {MAX_ORDER}")
    edges = []
    offset = 0
    offsets = []
    for p in parts:
        offsets.append(offset)
        edges += [(u + offset, v + offset) for u, v in p.edges()]
        offset += p.order
    for i in range(len(parts) - 1):
        a, b = offsets[i], offsets[i + 1]
        edges += [
            (a + u, b + v)
            for u in range(parts[i].order)
            for v in range(parts[i + 1].order)
        ]
    return build_graph(total, edges)


def wheel(n: int) -> Graph:
    """Hub joined to an (n-1)-cycle; vertex 0 is the hub."""
    if n < 4:
        raise GraphError(f"wheel needs order >= 4, got {n}")
    return join(complete(1), cycle(n - 1))


def fan(n: int) -> Graph:
    """Hub joined to an (n-1)-path; vertex 0 is the hub."""
    if n < 2:
        raise GraphError(f"fan needs order >= 2, got {n}")
    return join(complete(1), path(n - 1))


# -- the extremal families ----------------------------------------------------


def a_graph(n: int) -> Labeled:
    """Rim cycle v1..vq (q = n/2) with a private triangle vertex on each rim
    edge: ui adjacent to vi and v(i+1). Order n, size 3n/2.

    Numbering: vi -> i - 1 for 1 <= i <= q, ui -> q + i - 1.
    """
    if n < 8 or n % 2:
        raise GraphError(f"this family needs even order >= 8, got {n}")
    q = n // 2
    edges = []
    labels = {}
    for i in range(q):
        labels[f"v{i + 1}"] = i
        labels[f"u{i + 1}"] = q + i
        edges.append((i, (i + 1) % q))
        edges.append((q + i, i))
        edges.append((q + i, (i + 1) % q))
    return Labeled(build_graph(n, edges), labels)


def odd_extremal(kind: str, n: int) -> Labeled:
    """The three odd-order extremal graphs, each the even family on n - 1
    vertices plus one more vertex; size (3n + 1) / 2.

    kind "F": new vertex x adjacent to v1 and v2.
    kind "G": new vertex y adjacent to u1 and v1.
    kind "H": rim edge v1v2 subdivided by z, plus the edge z-u1.
    """
    if n < 9 or n % 2 == 0:
        raise GraphError(f"this family needs odd order >= 9, got {n}")
    if kind not in ("F", "G", "H"):
        raise GraphError(f"kind must be F, G or H, got {kind!r}")
    base = a_graph(n - 1)
    labels = dict(base.labels)
    v1, v2, u1 = labels["v1"], labels["v2"], labels["u1"]
    extra = n - 1
    edges = [(u, v) for u, v in base.graph.edges()]
    if kind == "F":
        labels["x"] = extra
        edges += [(extra, v1), (extra, v2)]
    elif kind == "G":
        labels["y"] = extra
        edges += [(extra, u1), (extra, v1)]
    else:
        labels["z"] = extra
        edges.remove((min(v1, v2), max(v1, v2)))
        edges += [(extra, v1), (extra, v2), (extra, u1)]
    return Labeled(build_graph(n, edges), labels)


def h_block(k: int) -> Labeled:
    """Two fans on 3k - 2 vertices (centres v and u, paths v1..v(3k-3) and
    u1..u(3k-3)) plus the edges vu, v-u(3k-3) and u-v(3k-3). Order 6k - 4,
    size 12k - 11.

    Numbering: v -> 0, vi -> i, u -> 3k - 2, ui -> 3k - 2 + i.
    """
    if k < 3:
        raise GraphError(f"the two-fan block needs k >= 3, got {k}")
    t = 3 * k - 3
    v, u = 0, 3 * k - 2
    labels = {"v": v, "u": u}
    edges = [(v, u)]
    for i in range(1, t + 1):
        labels[f"v{i}"] = v + i
        labels[f"u{i}"] = u + i
        edges.append((v, v + i))
        edges.append((u, u + i))
        if i < t:
            edges.append((v + i, v + i + 1))
            edges.append((u + i, u + i + 1))
    edges.append((v, u + t))
    edges.append((u, v + t))
    return Labeled(build_graph(6 * k - 4, edges), labels)


def h_block_spine_edges(block: Labeled) -> tuple[Edge, ...]:
    """The distinguished edge set of the two-fan block: every spoke vvi, the
    far-fan path edges vi v(i+1), and the two edges vu and v-u(3k-3)."""
    names = block.labels
    v, u = names["v"], names["u"]
    t = max(int(name[1:]) for name in names if name.startswith("v") and len(name) > 1)
    out = [Edge.of(v, names[f"v{i}"]) for i in range(1, t + 1)]
    out += [Edge.of(names[f"v{i}"], names[f"v{i + 1}"]) for i in range(1, t)]
    out.append(Edge.of(v, u))
    out.append(Edge.of(v, names[f"u{t}"]))
    return tuple(out)


def g_ring(k: int) -> Labeled:
    """Ring of k two-fan blocks: block i runs between ring vertices x_i and
    x_{i+1}, identified with that block's v1 and u1. Order 6k^2 - 5k, size
    2(6k^2 - 5k) - k. The 64-vertex cap admits exactly k = 3 (order 39).

    Numbering: ring vertices x1..xk -> 0..k-1; block i's interior vertices
    follow in block order, labelled "b{i}.v", "b{i}.v2", ... etc.
    """
    if k != 3:
        raise GraphError(
            f"the ring family fits the 64-vertex cap only at k = 3, got {k}"
        )
    block = h_block(k)
    t = 3 * k - 3
    labels = {f"x{i + 1}": i for i in range(k)}
    edges: list[tuple[int, int]] = []
    nxt = k
    for i in range(k):
        mapping = {}
        mapping[block.labels["v1"]] = i
        mapping[block.labels["u1"]] = (i + 1) % k
        for name, local in block.labels.items():
            if name in ("v1", "u1"):
                continue
            mapping[local] = nxt
            labels[f"b{i + 1}.{name}"] = nxt
            nxt += 1
        edges += [(mapping[a], mapping[b]) for a, b in block.graph.edges()]
    return Labeled(build_graph(6 * k * k - 5 * k, edges), labels)


def q_graph(n: int) -> Graph:
    """Sequential join of small blocks realizing diameter floor(2n/5) while
    staying edge-pancyclic; 10 <= n <= 64. The block sequence depends on
    n mod 5 (K1/K2 caps, triangles alternating with edgeless pairs)."""
    if not (10 <= n <= MAX_ORDER):
        raise GraphError(f"this family is built for 10 <= n <= {MAX_ORDER}, got {n}")
    k, r = divmod(n, 5)
    k1, k2, c3, e2 = complete(1), complete(2), cycle(3), empty(2)
    middle: list[Graph] = []
    for j in range(k):
        middle.append(c3)
        if j < k - 1:
            middle.append(e2)
    if r == 0:
        parts = [k1] + middle + [k1]
    elif r == 1:
        parts = [k1] + middle + [k2]
    elif r == 2:
        parts = [k2] + middle + [k2]
    elif r == 3:
        parts = [k1] + middle + [c3, k1]
    else:
        parts = [k1] + middle + [c3, k2]
    return sequential_join(parts)


# -- family dispatch (CLI surface) -------------------------------------------


_BASIC_TOKENS = {"K": complete, "C": cycle, "P": path, "E": empty}


def part_from_token(token: str) -> Graph:
    """Parse a block token like K3, C5, P4 or E2 into its graph."""
    token = token.strip()
    if len(token) < 2 or token[0].upper() not in _BASIC_TOKENS:
        raise GraphError(f"unknown part token {token!r} (expected K/C/P/E + order)")
    try:
        order = int(token[1:])
    except ValueError as exc:
        raise GraphError(f"bad order in part token {token!r}") from exc
    return _BASIC_TOKENS[token[0].upper()](order)


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its parameters; ``build`` dispatches to the
    constructor and normalizes the (graph, labels) shape."""

    family: str
    n: int | None = None
    k: int | None = None
    kind: str | None = None
    parts: tuple[str, ...] | None = None

    def build(self) -> tuple[Graph, dict[str, int] | None]:
        fam = self.family

        def need_n() -> int:
            if self.n is None:
                raise GraphError(f"family {fam!r} needs --n")
            return self.n

        if fam == "cycle":
            return cycle(need_n()), None
        if fam == "path":
            return path(need_n()), None
        if fam == "complete":
            return complete(need_n()), None
        if fam == "empty":
            return empty(need_n()), None
        if fam == "wheel":
            return wheel(need_n()), None
        if fam == "fan":
            return fan(need_n()), None
        if fam == "even-extremal":
            lab = a_graph(need_n())
            return lab.graph, lab.labels
        if fam == "odd-extremal":
            if self.kind is None:
                raise GraphError("family 'odd-extremal' needs --kind F|G|H")
            lab = odd_extremal(self.kind, need_n())
            return lab.graph, lab.labels
        if fam == "h-block":
            if self.k is None:
                raise GraphError("family 'h-block' needs --k")
            lab = h_block(self.k)
            return lab.graph, lab.labels
        if fam == "g-ring":
            if self.k is None:
                raise GraphError("family 'g-ring' needs --k")
            lab = g_ring(self.k)
            return lab.graph, lab.labels
        if fam == "q-diameter":
            return q_graph(need_n()), None
        if fam == "join":
            if not self.parts or len(self.parts) != 2:
                raise GraphError("family 'join' needs exactly two --parts tokens")
            return join(*(part_from_token(t) for t in self.parts)), None
        if fam == "seq-join":
            if not self.parts:
                raise GraphError("family 'seq-join' needs --parts")
            return sequential_join([part_from_token(t) for t in self.parts]), None
        raise GraphError(f"unknown family {fam!r}")


FAMILY_NAMES = (
    "cycle",
    "path",
    "complete",
    "empty",
    "wheel",
    "fan",
    "even-extremal",
    "odd-extremal",
    "h-block",
    "g-ring",
    "q-diameter",
    "join",
    "seq-join",
)
