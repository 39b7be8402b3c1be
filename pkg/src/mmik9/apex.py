"""n-apex decisions, join-with-K2 recognition, and searches for graphs that
are minor minimal with respect to not being k-apex.

A graph is k-apex when deleting some set of at most k vertices leaves a
planar graph.  Witness search tries subset sizes 0, 1, ..., k, lexicographic
within each size, and returns the first planar deletion, so witnesses are
deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from . import jobs as jobs_mod
from .canon import canonical_key
from .enumeration import EnumSpec, enumerate_graphs
from .graphs import SmallGraph, delete_vertices
from .planarity import planar_rows


@dataclass(frozen=True)
class ApexWitness:
    removed: tuple[int, ...]
    certified_planar: bool = True


def _deleted_planar(g: SmallGraph, subset: tuple[int, ...]) -> bool:
    mask = 0
    for v in subset:
        mask |= 1 << v
    n2, rows2 = delete_vertices(g.order, g.rows, mask)
    return planar_rows(n2, rows2)


def apex_witness(g: SmallGraph, k: int) -> Optional[ApexWitness]:
    """Least deletion set of size <= k leaving a planar graph, or None.

    Sizes are tried in increasing order and subsets of equal size in
    lexicographic order.  An edge-count bound on the deleted graph skips
    subsets that cannot possibly be planar.
    """
    if not 0 <= k <= g.order:
        raise ValueError(f"k={k} out of range for order {g.order}")
    if planar_rows(g.order, g.rows):
        return ApexWitness(())
    m = g.size
    deg = [r.bit_count() for r in g.rows]
    for size in range(1, k + 1):
        cap = 3 * (g.order - size) - 6
        for subset in combinations(range(g.order), size):
            left = m
            for i, v in enumerate(subset):
                left -= deg[v]
                for u in subset[:i]:
                    left += g.rows[u] >> v & 1
            if g.order - size >= 3 and left > cap:
                continue
            if _deleted_planar(g, subset):
                return ApexWitness(subset)
    return None


def is_k_apex(g: SmallGraph, k: int) -> bool:
    return apex_witness(g, k) is not None


def recognize_p_plus_k2(g: SmallGraph) -> Optional[tuple[int, int]]:
    """Whether g is the join of K2 with a planar triangulation.

    Returns an adjacent pair of universal vertices whose removal leaves a
    planar remainder with exactly 3(n-2)-6 edges (the size of a
    triangulation, and a 15-edge planar graph on 7 vertices is maximal
    planar), or None if no such pair exists.
    """
    n = g.order
    if n < 5:
        return None
    full = (1 << n) - 1
    target = 3 * (n - 2) - 6
    for u in range(n):
        if g.rows[u] != full ^ (1 << u):
            continue
        for v in range(u + 1, n):
            if g.rows[v] != full ^ (1 << v):
                continue
            n2, rows2 = delete_vertices(n, g.rows, (1 << u) | (1 << v))
            if sum(r.bit_count() for r in rows2) // 2 == target and planar_rows(n2, rows2):
                return (u, v)
    return None


def one_step_minors(g: SmallGraph) -> list[SmallGraph]:
    """Every single edge deletion, edge contraction, and vertex deletion,
    with isolated vertices dropped and isomorphic results merged."""
    seen = {}
    for u, v in g.edges():
        for h in (g.delete_edge(u, v), g.contract_edge(u, v)):
            h = _drop_isolated(h)
            seen.setdefault((h.order, canonical_key(h.order, h.rows)), h)
    for v in range(g.order):
        h = _drop_isolated(g.delete_vertex(v))
        seen.setdefault((h.order, canonical_key(h.order, h.rows)), h)
    return list(seen.values())


def _drop_isolated(g: SmallGraph) -> SmallGraph:
    mask = 0
    for v in range(g.order):
        if not g.rows[v]:
            mask |= 1 << v
    if not mask:
        return g
    n2, rows2 = delete_vertices(g.order, g.rows, mask)
    return SmallGraph(n2, rows2)


def is_mm_not_k_apex(g: SmallGraph, k: int) -> bool:
    """True iff g is not k-apex but every one-step minor is k-apex."""
    if is_k_apex(g, k):
        return False
    return all(is_k_apex(h, k) for h in one_step_minors(g))


def _mm_chunk(args) -> list[tuple[int, ...]]:
    k, rows_list, n = args
    hits = []
    for rows in rows_list:
        if is_mm_not_k_apex(SmallGraph(n, rows), k):
            hits.append(rows)
    return hits


def find_mm_not_k_apex(max_order: int, k: int, sizes: Optional[Iterable[int]] = None,
                       jobs: int = 1) -> list[SmallGraph]:
    """All minor-minimal-not-k-apex graphs of order 5..max_order.

    For k = 1 sizes below 15 are skipped: a graph that is not apex has at
    least 15 edges.  No such floor is assumed for k = 2; every size is
    scanned (the restriction is only what the caller passes in `sizes`).
    Results are canonically labeled, sorted by (order, size, canonical bits).
    """
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    jobs = jobs_mod.resolve_jobs(jobs)
    found = []
    for n in range(5, max_order + 1):
        total = n * (n - 1) // 2
        for m in range(total + 1):
            if sizes is not None and m not in sizes:
                continue
            if k == 1 and m < 15:
                continue
            gs = enumerate_graphs(EnumSpec(order=n, size=m), jobs=jobs)
            rows_list = [g.rows for g in gs]
            if not rows_list:
                continue
            if jobs > 1 and len(rows_list) >= 64:
                parts = jobs_mod.chunks(rows_list, jobs * 4)
                results = jobs_mod.parallel_map(_mm_chunk, [(k, p, n) for p in parts], jobs)
                for part in results:
                    found.extend(SmallGraph(n, rows) for rows in part)
            else:
                found.extend(SmallGraph(n, rows) for rows in _mm_chunk((k, rows_list, n)))
    found.sort(key=lambda g: (g.order, g.size, canonical_key(g.order, g.rows)))
    return found
