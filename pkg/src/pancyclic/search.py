"""Isomorph-free exhaustive generation and the extremal searches built on it.

Two generators, both canonical-augmentation trees in McKay's sense (a child
is kept iff undoing its canonically chosen last move returns its parent, so
every isomorphism class appears exactly once, with no global seen-set):

* :func:`enumerate_graphs` grows by single edges over the unrestricted
  universe of graphs on ``n`` vertices. Good up to n = 12 or so.

* :func:`enumerate_covered_graphs` grows by triangle moves (add one
  triangle, creating 1..3 missing edges) over the universe of graphs in
  which every edge lies in a triangle. Every search target here (triangle
  cover, edge-pancyclic) lives inside that universe, which is exponentially
  sparser than the unrestricted one, and that is what makes order 10 and 11
  censuses feasible in pure Python.

Why the triangle tree covers its universe: every nonempty covered graph C
has a removable nonempty edge subset E inside one triangle with C - E still
covered. If some edge of C lies in exactly one triangle T, take E = the
edges of T lying in no other triangle; removing them cannot destroy a
triangle of any surviving edge. Otherwise every edge lies in >= 2
triangles, and removing any single edge e kills at most one triangle of
each survivor, leaving each at least one. Induction then walks every
covered graph down to the empty graph, so the forward tree reaches all of
them.

Searches ascend size from the theoretical floor for their predicate and
report per-size class counts, witnesses in canonical graph6 form, and an
``exhaustive`` flag. Worker processes split the tree at a fixed size
frontier; merged results are sorted by canonical code, so the outcome is
identical for any worker count.
"""

from __future__ import annotations

import itertools
import multiprocessing
import os
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import checks
from .canon import _canonize, canonical_graph
from .graphs import (
    Graph,
    GraphError,
    build_graph,
    diameter,
    emit_graph6,
    is_k_connected,
    min_degree,
    parse_graph6,
)

WORKERS_ENV = "PANCYCLIC_WORKERS"
_BUILTIN_MAX_ORDER = 12
_SPLIT_SIZE = 6  # tree nodes crossing this edge count become worker tasks

# Outcomes stopped early by a class budget carry exactly this note; the CLI
# maps it to its own exit code.
BUDGET_NOTE = "budget exhausted before full coverage"


class SearchBudgetExceeded(Exception):
    """Raised internally when a class budget stops a search before completion."""


@dataclass
class GraphFilter:
    """Leaf filter for enumeration: degree, connectivity, size and predicate."""

    min_degree: int = 0
    connectivity: int = 0
    size_lo: int = 0
    size_hi: int | None = None
    predicate: str | None = None  # triangle-cover | edge-pancyclic | vertex-pancyclic | pancyclic

    def passes(self, g: Graph) -> bool:
        if g.size < self.size_lo:
            return False
        if self.size_hi is not None and g.size > self.size_hi:
            return False
        if self.min_degree > 0 and (g.order == 0 or min_degree(g) < self.min_degree):
            return False
        if self.connectivity > 0 and not is_k_connected(g, self.connectivity):
            return False
        if self.predicate is not None and not _predicate_holds(self.predicate, g):
            return False
        return True


def _predicate_holds(name: str, g: Graph) -> bool:
    if name == "triangle-cover":
        return checks.has_triangle_cover(g).verdict is True
    if name == "edge-pancyclic":
        return checks.is_edge_pancyclic(g).verdict is True
    if name == "vertex-pancyclic":
        return checks.is_vertex_pancyclic(g).verdict is True
    if name == "pancyclic":
        return checks.is_pancyclic(g).verdict is True
    raise GraphError(f"unknown predicate {name!r}")


@dataclass
class SearchOutcome:
    """Result of one extremal search; ``counts`` documents coverage per size."""

    objective: str
    order: int
    value: int | None
    witnesses: list[str]
    exhaustive: bool
    counts: dict
    notes: str | None = None

    def to_json_dict(self) -> dict:
        out = {
            "objective": self.objective,
            "order": self.order,
            "value": self.value,
            "witnesses": self.witnesses,
            "exhaustive": self.exhaustive,
            "counts": self.counts,
        }
        if self.notes:
            out["notes"] = self.notes
        return out


def resolve_workers(workers: int | None = None) -> int:
    if workers is None:
        env = os.environ.get(WORKERS_ENV)
        if env:
            workers = int(env)
        else:
            workers = os.cpu_count() or 1
    if workers < 1:
        raise GraphError(f"worker count must be positive, got {workers}")
    return workers


# -- unrestricted generator: canonical augmentation by one edge -------------


def _canonical_last_edge(g: Graph, sigma: tuple[int, ...]) -> tuple[int, int]:
    # The edge whose relabeled pair is lexicographically largest. sigma maps
    # vertex -> canonical position; the choice is isomorphism-invariant.
    best = None
    best_key = (-1, -1)
    for u, v in g.edges():
        a, b = sigma[u], sigma[v]
        key = (a, b) if a < b else (b, a)
        if key > best_key:
            best_key = key
            best = (u, v)
    assert best is not None
    return best


def _iter_edge_tree(g: Graph, code: int, size_hi: int) -> Iterator[Graph]:
    yield g
    if g.size >= size_hi:
        return
    n = g.order
    seen: set[int] = set()
    for u in range(n):
        for v in range(u + 1, n):
            if g.has_edge(u, v):
                continue
            child = g.with_edge(u, v)
            ccode, perm = _canonize(child)
            if ccode in seen:
                continue
            seen.add(ccode)
            sigma = [0] * n
            for pos, vert in enumerate(perm):
                sigma[vert] = pos
            fu, fv = _canonical_last_edge(child, tuple(sigma))
            if (fu, fv) == (u, v):
                accept = True
            else:
                back = child.without_edge(fu, fv)
                accept = sorted(back.degrees()) == sorted(g.degrees()) and _canonize(back)[0] == code
            if accept:
                yield from _iter_edge_tree(child, ccode, size_hi)


def enumerate_graphs(
    n: int,
    size_range: tuple[int, int] | None = None,
    graph_filter: GraphFilter | None = None,
    *,
    stream: Iterable[str] | None = None,
) -> Iterator[Graph]:
    """Exactly one canonical representative per isomorphism class.

    Built-in generation handles n <= 12; beyond that supply ``stream``, an
    iterable of graph6 lines, which is parsed, order-checked, filtered and
    deduplicated by canonical code.
    """
    if stream is not None:
        yield from _filter_stream(n, stream, size_range, graph_filter)
        return
    if not (0 <= n <= _BUILTIN_MAX_ORDER):
        raise GraphError(
            f"built-in enumeration supports 0 <= n <= {_BUILTIN_MAX_ORDER}; "
            f"supply a graph6 stream for larger orders"
        )
    lo, hi = size_range if size_range is not None else (0, n * (n - 1) // 2)
    root = build_graph(n, [])
    for g in _iter_edge_tree(root, _canonize(root)[0], hi):
        if g.size < lo:
            continue
        if graph_filter is not None and not graph_filter.passes(g):
            continue
        yield canonical_graph(g)


def _filter_stream(
    n: int,
    stream: Iterable[str],
    size_range: tuple[int, int] | None,
    graph_filter: GraphFilter | None,
) -> Iterator[Graph]:
    lo, hi = size_range if size_range is not None else (0, n * (n - 1) // 2)
    seen: set[bytes] = set()
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line:
            continue
        g = parse_graph6(line)
        if g.order != n:
            raise GraphError(f"stream line {lineno}: order {g.order}, expected {n}")
        if not (lo <= g.size <= hi):
            continue
        if graph_filter is not None and not graph_filter.passes(g):
            continue
        cg = canonical_graph(g)
        key = bytes(emit_graph6(cg), "ascii")
        if key in seen:
            continue
        seen.add(key)
        yield cg


# -- covered universe: canonical augmentation by triangle moves -------------


def _triangles(rows: list[int], act: int) -> list[tuple[int, int, int]]:
    out = []
    for u in range(act):
        ru = rows[u]
        for v in range(u + 1, act):
            if not (ru >> v) & 1:
                continue
            w_mask = (ru & rows[v]) >> (v + 1)
            w = v + 1
            while w_mask:
                if w_mask & 1:
                    out.append((u, v, w))
                w_mask >>= 1
                w += 1
    return out


def _covered_after_removal(rows: list[int], removed: tuple[tuple[int, int], ...]) -> bool:
    # Only edges incident to an endpoint of a removed edge can lose coverage.
    tmp = rows[:]
    touched = 0
    for a, b in removed:
        tmp[a] &= ~(1 << b)
        tmp[b] &= ~(1 << a)
        touched |= (1 << a) | (1 << b)
    while touched:
        low = touched & -touched
        v = low.bit_length() - 1
        touched ^= low
        nb = tmp[v]
        while nb:
            nlow = nb & -nb
            w = nlow.bit_length() - 1
            nb ^= nlow
            if not tmp[v] & tmp[w]:
                return False
    return True


def _compact(rows: list[int], act: int) -> tuple[int, tuple[int, ...]]:
    # Drop zero-degree vertices, preserving relative order of the rest.
    keep = [v for v in range(act) if rows[v]]
    remap = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        row = rows[v]
        acc = 0
        while row:
            low = row & -row
            acc |= 1 << remap[low.bit_length() - 1]
            row ^= low
        out.append(acc)
    return len(keep), tuple(out)


_TRI_SUBSETS = tuple(
    tuple(pairsel)
    for k in (1, 2, 3)
    for pairsel in itertools.combinations((0, 1, 2), k)
)


def _canonical_removal(rows: list[int], act: int, sigma: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    # Among all nonempty removable edge subsets inside one triangle, pick the
    # one whose relabeled pair list is lexicographically smallest.
    best_key = None
    best: tuple[tuple[int, int], ...] | None = None
    for u, v, w in _triangles(rows, act):
        tri = ((u, v), (u, w), (v, w))
        for sel in _TRI_SUBSETS:
            cand = tuple(tri[i] for i in sel)
            key = tuple(
                sorted(
                    (sigma[a], sigma[b]) if sigma[a] < sigma[b] else (sigma[b], sigma[a])
                    for a, b in cand
                )
            )
            if best_key is not None and key >= best_key:
                continue
            if _covered_after_removal(rows, cand):
                best_key = key
                best = cand
    assert best is not None, "every nonempty covered graph has a removable subset"
    return best


@dataclass
class _CoveredSurvey:
    """Aggregate of one covered-universe tree walk."""

    classes_seen: int = 0
    exact_order_by_size: dict[int, int] = field(default_factory=dict)
    survivors: list[tuple[int, tuple[int, ...]]] = field(default_factory=list)


def _covered_children(
    rows: list[int], act: int, m: int, n: int, m_hi: int, min_deg_final: int
) -> Iterator[tuple[list[int], int, int, tuple[tuple[int, int], ...]]]:
    # All triangle moves: triples over active vertices plus up to 3 fresh
    # ones (fresh = next unused indices; isolated vertices are interchangeable
    # so using the lowest indices loses nothing).
    budget = m_hi - m
    if budget <= 0:
        return
    triples: list[tuple[int, int, int]] = []
    for u in range(act):
        for v in range(u + 1, act):
            for w in range(v + 1, act):
                triples.append((u, v, w))
    if act + 1 <= n:
        for u in range(act):
            for v in range(u + 1, act):
                triples.append((u, v, act))
    if act + 2 <= n:
        for u in range(act):
            triples.append((u, act, act + 1))
    if act + 3 <= n:
        triples.append((act, act + 1, act + 2))
    for u, v, w in triples:
        missing = []
        if not (v < act and (rows[u] >> v) & 1):
            missing.append((u, v))
        if not (w < act and (rows[u] >> w) & 1):
            missing.append((u, w))
        if not (w < act and (rows[v] >> w) & 1):
            missing.append((v, w))
        if not missing or len(missing) > budget:
            continue
        new_act = max(act, w + 1)
        new_m = m + len(missing)
        # Activation bound: each future edge activates at most one vertex.
        if new_act + (m_hi - new_m) < n:
            continue
        child = rows[:act] + [0] * (new_act - act)
        for a, b in missing:
            child[a] |= 1 << b
            child[b] |= 1 << a
        if min_deg_final > 0:
            deficit = min_deg_final * (n - new_act)
            for x in range(new_act):
                d = child[x].bit_count()
                if d < min_deg_final:
                    deficit += min_deg_final - d
            if deficit > 2 * (m_hi - new_m):
                continue
        yield child, new_act, new_m, tuple(missing)


def _walk_covered(
    rows: list[int],
    act: int,
    m: int,
    code: int,
    n: int,
    m_hi: int,
    min_deg_final: int,
    survey: _CoveredSurvey,
    size_lo: int,
    class_budget: int | None,
    collect: Callable[[list[int], int, int], bool],
    stop_size: int | None = None,
) -> list[tuple[list[int], int, int]]:
    # Depth-first walk; when stop_size is set, nodes crossing it are returned
    # as subtree roots instead of being expanded (parallel split points).
    pending: list[tuple[list[int], int, int]] = []
    stack: list[tuple[list[int], int, int, int]] = [(rows, act, m, code)]
    while stack:
        rows, act, m, code = stack.pop()
        survey.classes_seen += 1
        if class_budget is not None and survey.classes_seen > class_budget:
            raise SearchBudgetExceeded
        if act == n and m >= size_lo:
            survey.exact_order_by_size[m] = survey.exact_order_by_size.get(m, 0) + 1
            if collect(rows, act, m):
                survey.survivors.append((act, tuple(rows)))
        seen_children: set[tuple[int, int]] = set()
        for child, new_act, new_m, added in _covered_children(
            rows, act, m, n, m_hi, min_deg_final
        ):
            ccode, perm = _canonize(Graph(new_act, tuple(child)))
            if (new_act, ccode) in seen_children:
                continue
            seen_children.add((new_act, ccode))
            sigma = [0] * new_act
            for pos, vert in enumerate(perm):
                sigma[vert] = pos
            removal = _canonical_removal(child, new_act, tuple(sigma))
            if frozenset(removal) == frozenset(added):
                accept = True
            else:
                back = child[:]
                for a, b in removal:
                    back[a] &= ~(1 << b)
                    back[b] &= ~(1 << a)
                back_act, back_rows = _compact(back, new_act)
                accept = (
                    back_act == act
                    and sum(r.bit_count() for r in back_rows) // 2 == m
                    and _canonize(Graph(back_act, back_rows))[0] == code
                )
            if accept:
                if stop_size is not None and new_m >= stop_size:
                    pending.append((child, new_act, new_m))
                else:
                    stack.append((child, new_act, new_m, ccode))
    return pending


def enumerate_covered_graphs(
    n: int,
    max_size: int,
    *,
    min_deg_final: int = 2,
    size_lo: int = 0,
) -> Iterator[Graph]:
    """Every graph of order exactly ``n`` (no isolated vertices) in which each
    edge lies in a triangle, with ``size_lo <= size <= max_size``. One
    canonical representative per isomorphism class."""
    if n < 3:
        return
    found: list[tuple[int, tuple[int, ...]]] = []

    def keep(rows: list[int], act: int, m: int) -> bool:
        return True

    survey = _CoveredSurvey()
    _walk_covered([], 0, 0, 0, n, max_size, min_deg_final, survey, size_lo, None, keep)
    for act, rows in survey.survivors:
        yield canonical_graph(Graph(act, rows))


# -- survey plumbing: leaf filters, worker split, deterministic merge --------


@dataclass(frozen=True)
class _KeepSpec:
    """Picklable leaf filter applied to every order-n node of the tree walk.

    Cheap tests run first; the predicate probe dominates cost and runs last.
    """

    min_degree: int = 0
    kappa: int = 0
    predicate: str | None = None

    def test(self, g: Graph) -> bool:
        if self.min_degree > 0 and min_degree(g) < self.min_degree:
            return False
        if self.kappa > 0 and not is_k_connected(g, self.kappa):
            return False
        if self.predicate is not None and not _predicate_holds(self.predicate, g):
            return False
        return True

    def collector(self) -> Callable[[list[int], int, int], bool]:
        def collect(rows: list[int], act: int, m: int) -> bool:
            return self.test(Graph(act, tuple(rows)))

        return collect


def _subtree_survey(
    task: tuple[list[int], int, int, int, int, int, int, _KeepSpec]
) -> tuple[int, dict[int, int], list[tuple[int, tuple[int, ...]]]]:
    rows, act, m, n, m_hi, min_deg_final, size_lo, keep = task
    survey = _CoveredSurvey()
    code, _ = _canonize(Graph(act, tuple(rows)))
    _walk_covered(
        list(rows), act, m, code, n, m_hi, min_deg_final, survey, size_lo,
        None, keep.collector(),
    )
    return survey.classes_seen, survey.exact_order_by_size, survey.survivors


def _survey_covered(
    n: int,
    m_hi: int,
    min_deg_final: int,
    keep: _KeepSpec,
    *,
    size_lo: int = 0,
    workers: int | None = None,
    class_budget: int | None = None,
) -> tuple[_CoveredSurvey, bool]:
    """Walk the whole covered-universe tree for order ``n``, size <= ``m_hi``.

    Returns the survey and a completeness flag (False iff ``class_budget``
    stopped the walk early). Budgeted walks run sequentially so the budget is
    a single global counter; unbudgeted walks split across worker processes
    at the ``_SPLIT_SIZE`` frontier, and because each isomorphism class lives
    in exactly one subtree, merging is plain summation with no dedup.
    """
    survey = _CoveredSurvey()
    if n < 3 or m_hi < 3:
        return survey, True
    nworkers = resolve_workers(workers)
    split = nworkers > 1 and class_budget is None and m_hi > _SPLIT_SIZE + 2
    try:
        pending = _walk_covered(
            [], 0, 0, 0, n, m_hi, min_deg_final, survey, size_lo,
            class_budget, keep.collector(),
            stop_size=_SPLIT_SIZE if split else None,
        )
    except SearchBudgetExceeded:
        return survey, False
    if pending:
        tasks = [
            (rows, act, m, n, m_hi, min_deg_final, size_lo, keep)
            for rows, act, m in pending
        ]
        with multiprocessing.Pool(nworkers) as pool:
            parts = pool.map(_subtree_survey, tasks)
        for seen, by_size, survivors in parts:
            survey.classes_seen += seen
            for size, cnt in by_size.items():
                survey.exact_order_by_size[size] = (
                    survey.exact_order_by_size.get(size, 0) + cnt
                )
            survey.survivors.extend(survivors)
    return survey, True


def _survivor_graphs(survey: _CoveredSurvey) -> list[Graph]:
    # Canonical form plus a total sort order makes results independent of
    # walk order and hence of the worker count.
    out = [canonical_graph(Graph(act, rows)) for act, rows in survey.survivors]
    out.sort(key=lambda g: (g.size, emit_graph6(g)))
    return out


def _reverify(graphs: list[Graph], keep: _KeepSpec) -> None:
    # Witnesses are re-verified on their canonical relabeling before emission;
    # a failure here means the generator and the checker disagree.
    for g in graphs:
        if not keep.test(g):
            raise GraphError(
                f"witness failed re-verification: {emit_graph6(g)}"
            )


# -- the extremal searches ---------------------------------------------------


def _ascend_min_size(
    objective: str,
    n: int,
    start_hi: int,
    floor: int,
    min_deg_final: int,
    keep: _KeepSpec,
    workers: int | None,
    class_budget: int | None,
) -> SearchOutcome:
    """Smallest size admitting a graph passing ``keep``, with all witnesses.

    One tree walk capped at ``start_hi`` covers every size below it, so the
    smallest non-empty bucket is the minimum. The cap only grows (rare: the
    theoretical floor was wrong) until a witness appears or the complete
    graph is reached.
    """
    max_size = n * (n - 1) // 2
    m_hi = min(start_hi, max_size)
    tree_nodes = 0
    while True:
        survey, complete = _survey_covered(
            n, m_hi, min_deg_final, keep,
            workers=workers, class_budget=class_budget,
        )
        tree_nodes += survey.classes_seen
        passing = _survivor_graphs(survey)
        by_size: dict[int, list[Graph]] = {}
        for g in passing:
            by_size.setdefault(g.size, []).append(g)
        counts = {
            "floor": floor,
            "size_cap": m_hi,
            "tree_nodes": tree_nodes,
            "explored_by_size": dict(sorted(survey.exact_order_by_size.items())),
            "passing_by_size": {k: len(v) for k, v in sorted(by_size.items())},
        }
        value = min(by_size) if by_size else None
        witnesses: list[str] = []
        if value is not None:
            _reverify(by_size[value], keep)
            witnesses = [emit_graph6(g) for g in by_size[value]]
        if not complete:
            return SearchOutcome(
                objective, n, value, witnesses, False, counts, notes=BUDGET_NOTE
            )
        if value is not None:
            return SearchOutcome(objective, n, value, witnesses, True, counts)
        if m_hi >= max_size:
            return SearchOutcome(
                objective, n, None, [], True, counts,
                notes="no graph of this order satisfies the predicate",
            )
        m_hi += 1


def _min_size_stream(
    objective: str, n: int, stream: Iterable[str], keep: _KeepSpec
) -> SearchOutcome:
    by_size: dict[int, list[Graph]] = {}
    total = 0
    for g in _filter_stream(n, stream, None, None):
        total += 1
        if keep.test(g):
            by_size.setdefault(g.size, []).append(g)
    value = min(by_size) if by_size else None
    witnesses: list[str] = []
    if value is not None:
        group = sorted(by_size[value], key=emit_graph6)
        _reverify(group, keep)
        witnesses = [emit_graph6(g) for g in group]
    counts = {
        "stream_classes": total,
        "passing_by_size": {k: len(v) for k, v in sorted(by_size.items())},
    }
    return SearchOutcome(
        objective, n, value, witnesses, False, counts,
        notes="stream mode: coverage of the search space is the stream producer's claim",
    )


def min_size_edge_pancyclic(
    n: int,
    *,
    stream: Iterable[str] | None = None,
    workers: int | None = None,
    class_budget: int | None = None,
) -> SearchOutcome:
    """Minimum size of an edge-pancyclic graph of order ``n``, all witnesses.

    Every edge-pancyclic graph has each edge in a triangle, is 2-connected,
    and (for n >= 4) has minimum degree 3, so the covered-universe tree with
    those leaf filters is a complete search space.
    """
    objective = "min-size edge-pancyclic"
    keep = _KeepSpec(min_degree=3, kappa=2, predicate="edge-pancyclic")
    if stream is not None:
        return _min_size_stream(objective, n, stream, keep)
    if not 4 <= n <= _BUILTIN_MAX_ORDER:
        raise GraphError(
            f"built-in search supports 4 <= n <= {_BUILTIN_MAX_ORDER}; "
            f"supply a graph6 stream for larger orders"
        )
    floor = -(-3 * n // 2)
    return _ascend_min_size(
        objective, n,
        start_hi=2 * n - 2,
        floor=floor,
        min_deg_final=3,
        keep=keep,
        workers=workers,
        class_budget=class_budget,
    )


_TC_FLOOR = {
    1: lambda n: (3 * n - 2) // 2,
    2: lambda n: -(-3 * n // 2),
    3: lambda n: 2 * n - 2,
}
_TC_MIN_ORDER = {1: 2, 2: 3, 3: 4}


def min_size_triangle_cover(
    n: int,
    kappa: int,
    *,
    workers: int | None = None,
    class_budget: int | None = None,
) -> SearchOutcome:
    """Minimum size of a ``kappa``-connected order-``n`` graph in which every
    edge lies in a triangle, with the complete extremal witness set."""
    if kappa not in (1, 2, 3):
        raise GraphError(f"kappa must be 1, 2 or 3, got {kappa}")
    if not _TC_MIN_ORDER[kappa] <= n <= _BUILTIN_MAX_ORDER:
        raise GraphError(
            f"triangle-cover search with kappa={kappa} supports "
            f"{_TC_MIN_ORDER[kappa]} <= n <= {_BUILTIN_MAX_ORDER}"
        )
    floor = _TC_FLOOR[kappa](n)
    min_deg_final = 3 if kappa == 3 else 2
    keep = _KeepSpec(
        min_degree=min_deg_final, kappa=kappa, predicate="triangle-cover"
    )
    return _ascend_min_size(
        f"min-size triangle-cover kappa={kappa}", n,
        start_hi=floor,
        floor=floor,
        min_deg_final=min_deg_final,
        keep=keep,
        workers=workers,
        class_budget=class_budget,
    )


def _diameter_witness(n: int) -> tuple[Graph | None, str]:
    from . import families

    if n == 3:
        return families.cycle(3), "triangle"
    if 4 <= n <= 7:
        return families.wheel(n), "wheel"
    if n >= 10:
        return families.q_graph(n), "q-graph"
    return None, ""  # n in {8, 9}: no closed-form witness, search instead


def max_diameter_edge_pancyclic(
    n: int,
    *,
    mode: str = "auto",
    workers: int | None = None,
    class_budget: int | None = None,
) -> SearchOutcome:
    """Maximum diameter over edge-pancyclic graphs of order ``n``.

    Exhaustive mode (n <= 9) walks the covered universe at all sizes and
    returns the full census at the maximum. Witness mode returns one
    constructed graph achieving 2n/5 rounded down; for n in {8, 9} no family
    is defined here, so witness requests fall back to the exhaustive search.
    """
    if mode not in ("auto", "exhaustive", "witness"):
        raise GraphError(f"unknown mode {mode!r}")
    if n < 3:
        raise GraphError("maximum-diameter search needs order at least 3")
    objective = "max-diameter edge-pancyclic"
    target = 2 * n // 5
    if mode == "auto":
        mode = "exhaustive" if n <= 8 else "witness"
    if mode == "witness":
        g, name = _diameter_witness(n)
        if g is not None:
            rep = checks.is_edge_pancyclic(g)
            if rep.verdict is not True:
                raise GraphError(f"{name} witness failed re-verification")
            d = diameter(g)
            if d != target:
                raise GraphError(
                    f"{name} witness has diameter {d}, expected {target}"
                )
            counts = {"target": target, "witness_family": name}
            return SearchOutcome(
                objective, n, d, [emit_graph6(canonical_graph(g))], False,
                counts, notes="witness construction; upper bound not searched",
            )
        mode = "exhaustive"
    if not 3 <= n <= 9:
        raise GraphError(
            "exhaustive diameter search supports 3 <= n <= 9; "
            "use witness mode for larger orders"
        )
    min_deg_final = 3 if n >= 4 else 2
    keep = _KeepSpec(min_degree=min_deg_final, kappa=2, predicate="edge-pancyclic")
    survey, complete = _survey_covered(
        n, n * (n - 1) // 2, min_deg_final, keep,
        workers=workers, class_budget=class_budget,
    )
    passing = _survivor_graphs(survey)
    by_diameter: dict[int, list[Graph]] = {}
    for g in passing:
        by_diameter.setdefault(diameter(g), []).append(g)
    value = max(by_diameter) if by_diameter else None
    witnesses: list[str] = []
    if value is not None:
        group = sorted(by_diameter[value], key=emit_graph6)
        _reverify(group, keep)
        witnesses = [emit_graph6(g) for g in group]
    counts = {
        "target": target,
        "tree_nodes": survey.classes_seen,
        "edge_pancyclic_total": len(passing),
        "by_diameter": {k: len(v) for k, v in sorted(by_diameter.items())},
    }
    return SearchOutcome(
        objective, n, value, witnesses, complete, counts,
        notes=None if complete else BUDGET_NOTE,
    )


def extremal_census(
    n: int,
    predicate: str,
    *,
    kappa: int = 0,
    size: int | None = None,
    workers: int | None = None,
) -> list[Graph]:
    """All isomorphism classes of order ``n`` graphs satisfying ``predicate``
    (and ``kappa``-connectivity), at exactly ``size`` edges, or at every size
    when ``size`` is None. Canonical graphs, sorted by (size, graph6)."""
    if predicate not in ("triangle-cover", "edge-pancyclic"):
        raise GraphError(f"census predicate must name a cover check, got {predicate!r}")
    if not 3 <= n <= _BUILTIN_MAX_ORDER:
        raise GraphError(f"census supports 3 <= n <= {_BUILTIN_MAX_ORDER}")
    max_size = n * (n - 1) // 2
    m_hi = max_size if size is None else size
    if not 0 <= m_hi <= max_size:
        raise GraphError(f"size {size} out of range for order {n}")
    if predicate == "edge-pancyclic":
        min_deg_final = 3 if n >= 4 else 2
    else:
        min_deg_final = 3 if kappa >= 3 else 2
    keep = _KeepSpec(min_degree=min_deg_final, kappa=kappa, predicate=predicate)
    survey, _ = _survey_covered(
        n, m_hi, min_deg_final, keep,
        size_lo=0 if size is None else size,
        workers=workers,
    )
    out = _survivor_graphs(survey)
    if size is not None:
        out = [g for g in out if g.size == size]
    return out
