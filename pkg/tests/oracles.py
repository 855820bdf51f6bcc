"""Naive reference implementations used only to cross-check the library.

Everything here is deliberately brute force and independent of the library
internals: permutation search for isomorphism, exhaustive DFS for cycles,
subset deletion for connectivity, and the cycle index of the pair action
for isomorphism-class counts. Slow but obviously right. Functions take
plain (order, edge list) data so they cannot silently reuse library logic.
"""

from __future__ import annotations

import itertools
from math import factorial


def normalized(edges) -> set[tuple[int, int]]:
    return {(u, v) if u < v else (v, u) for u, v in edges}


def perm_isomorphic(n: int, edges_a, edges_b) -> bool:
    """Isomorphism by trying all n! vertex bijections."""
    ea, eb = normalized(edges_a), normalized(edges_b)
    if len(ea) != len(eb):
        return False
    for perm in itertools.permutations(range(n)):
        if all(
            ((perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])) in eb
            for u, v in ea
        ):
            return True
    return False


def all_simple_cycles(n: int, edges) -> set[tuple[int, ...]]:
    """Every simple cycle as a vertex tuple, reported exactly once.

    The representative starts at the cycle's smallest vertex and runs in the
    direction whose second vertex is smaller than its last; DFS only visits
    vertices above the start, so each cycle appears exactly twice (the two
    orientations) before the tie-break keeps one.
    """
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in normalized(edges):
        adj[u].add(v)
        adj[v].add(u)
    cycles: set[tuple[int, ...]] = set()

    def extend(path: list[int], on_path: set[int]) -> None:
        start, cur = path[0], path[-1]
        for w in sorted(adj[cur]):
            if w == start:
                if len(path) >= 3 and path[1] < path[-1]:
                    cycles.add(tuple(path))
            elif w > start and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.discard(w)
                path.pop()

    for s in range(n):
        extend([s], {s})
    return cycles


def cycle_edge_set(cycle: tuple[int, ...]) -> set[tuple[int, int]]:
    return normalized(
        (cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))
    )


def edge_spectrum(n: int, edges) -> dict[tuple[int, int], set[int]]:
    """Cycle lengths through each edge, from full cycle enumeration."""
    edges = normalized(edges)  # materialize: the argument may be a generator
    spectrum: dict[tuple[int, int], set[int]] = {e: set() for e in edges}
    for cycle in all_simple_cycles(n, edges):
        for e in cycle_edge_set(cycle):
            spectrum[e].add(len(cycle))
    return spectrum


def all_simple_paths_between(n: int, edges, a: int, b: int) -> set[tuple[int, ...]]:
    """Every simple path from a to b as a vertex tuple."""
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in normalized(edges):
        adj[u].add(v)
        adj[v].add(u)
    paths: set[tuple[int, ...]] = set()

    def extend(path: list[int], on_path: set[int]) -> None:
        cur = path[-1]
        if cur == b:
            paths.add(tuple(path))
            return
        for w in sorted(adj[cur]):
            if w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.discard(w)
                path.pop()

    extend([a], {a})
    return paths


def _connected_after_removal(n: int, edges, removed: set[int]) -> bool:
    alive = [v for v in range(n) if v not in removed]
    if not alive:
        return True
    adj: dict[int, set[int]] = {v: set() for v in alive}
    for u, v in normalized(edges):
        if u not in removed and v not in removed:
            adj[u].add(v)
            adj[v].add(u)
    seen = {alive[0]}
    frontier = [alive[0]]
    while frontier:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen) == len(alive)


def connectivity_by_deletion(n: int, edges) -> int:
    """Vertex connectivity as the smallest disconnecting deletion set."""
    if n < 2:
        return 0
    edges = normalized(edges)
    if len(edges) == n * (n - 1) // 2:
        return n - 1
    if not _connected_after_removal(n, edges, set()):
        return 0
    for k in range(1, n - 1):
        for subset in itertools.combinations(range(n), k):
            if not _connected_after_removal(n, edges, set(subset)):
                return k
    return n - 1


def burnside_class_count(n: int) -> int:
    """Number of graphs on n vertices up to isomorphism, by the cycle index
    of the permutation action on vertex pairs (no graph library involved)."""
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    total = 0
    for perm in itertools.permutations(range(n)):
        mapping = [
            index[
                (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
            ]
            for u, v in pairs
        ]
        seen = [False] * len(pairs)
        orbits = 0
        for start in range(len(pairs)):
            if not seen[start]:
                orbits += 1
                cur = start
                while not seen[cur]:
                    seen[cur] = True
                    cur = mapping[cur]
        total += 2**orbits
    count, rem = divmod(total, factorial(n))
    assert rem == 0
    return count


def iter_labeled_graphs(n: int):
    """All 2^C(n,2) labeled graphs as (order, edge tuple) pairs."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield n, tuple(p for i, p in enumerate(pairs) if (mask >> i) & 1)
