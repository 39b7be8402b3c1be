"""Canonical labeling, isomorphism and orbit computation.

The canonical form is the lexicographically least adjacency bit string over
the family of permutations explored by an individualization-refinement search:
vertices are partitioned by iterated (colour, neighbour-colour multiset)
refinement, non-singleton cells are split one vertex at a time, and the leaf
labelings are compared by packed bit string.  Refinement data is isomorphism
invariant, so two graphs get equal canonical bits exactly when they are
isomorphic; that equivalence is what the test suite pins down (exhaustively
for small orders, by sampling at order 9).

Automorphisms discovered as equal-key leaves prune the search.  Orbit
partitions do not rely on that generator set being complete: an element's
orbit key is the canonical form of the graph with that element marked, which
is exact by definition.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import SmallGraph, pack_bits

# base-17 digits encode a multiset of <=16 neighbour colours exactly
_POW = [17 ** i for i in range(18)]


@dataclass(frozen=True)
class CanonicalForm:
    order: int
    bits: int
    perm: tuple[int, ...]  # input label -> canonical label


@dataclass(frozen=True)
class OrbitPartition:
    kind: str  # "vertices" | "edges" | "nonedges"
    classes: tuple[tuple, ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    def representatives(self) -> list:
        return [c[0] for c in self.classes]


def _refine(n: int, rows: Sequence[int], colors: list[int]) -> list[int]:
    pow17 = _POW
    while True:
        sigs = []
        for v in range(n):
            s = 0
            w = rows[v]
            while w:
                w2 = w & (w - 1)
                s += pow17[colors[(w ^ w2).bit_length() - 1]]
                w = w2
            sigs.append((colors[v], s))
        order = sorted(set(sigs))
        if len(order) == len(set(colors)):
            # no split this round; ids are already normalized 0..k-1
            return colors
        ids = {s: i for i, s in enumerate(order)}
        colors = [ids[s] for s in sigs]
        if len(order) == n:
            return colors


def _normalize(colors: Sequence[int]) -> list[int]:
    ids = {c: i for i, c in enumerate(sorted(set(colors)))}
    return [ids[c] for c in colors]


def _pack_leaf(n: int, rows: Sequence[int], colors: Sequence[int]) -> int:
    inv = [0] * n
    for v, c in enumerate(colors):
        inv[c] = v
    key = 0
    for j in range(1, n):
        rj = rows[inv[j]]
        for i in range(j):
            key = key << 1 | (rj >> inv[i] & 1)
    return key


def _search(n: int, rows: Sequence[int], colors0: Sequence[int]) -> tuple[int, tuple[int, ...], list[tuple[int, ...]]]:
    """Return (min key, witness perm, automorphism generators found)."""
    if n == 0:
        return 0, (), []
    best: list = [None, None]  # key, perm
    gens: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def rec(colors: list[int]) -> None:
        colors = _refine(n, rows, colors)
        counts = [0] * n
        for c in colors:
            counts[c] += 1
        cell = -1
        for c in range(n):
            if counts[c] > 1:
                cell = c
                break
        if cell < 0:
            key = _pack_leaf(n, rows, colors)
            if best[0] is None or key < best[0]:
                best[0] = key
                best[1] = tuple(colors)
            elif key == best[0]:
                # two labelings with identical bits compose to an automorphism
                ref = best[1]
                inv = [0] * n
                for v, c in enumerate(colors):
                    inv[c] = v
                gens.append(tuple(inv[ref[v]] for v in range(n)))
            return
        cands = [v for v in range(n) if colors[v] == cell]
        explored: list[int] = []
        for v in cands:
            if explored:
                skip = False
                for g in gens:
                    ok = True
                    for w in prefix:
                        if g[w] != w:
                            ok = False
                            break
                    if ok and g[v] in explored:
                        skip = True
                        break
                if skip:
                    continue
            nxt = [c + 1 if c > cell or (c == cell and u != v) else c for u, c in enumerate(colors)]
            nxt[v] = cell
            prefix.append(v)
            rec(nxt)
            prefix.pop()
            explored.append(v)

    rec(_normalize(colors0))
    return best[0], best[1], gens


def canonical_rows(n: int, rows: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Hot-path form: (canonical bits, canonically relabeled rows)."""
    key, perm, _ = _search(n, rows, [0] * n)
    out = [0] * n
    for u in range(n):
        w = rows[u]
        pu = perm[u]
        while w:
            low = w & -w
            out[pu] |= 1 << perm[low.bit_length() - 1]
            w ^= low
    return key, tuple(out)


def canonical_form(g: SmallGraph) -> CanonicalForm:
    key, perm, _ = _search(g.order, g.rows, [0] * g.order)
    return CanonicalForm(g.order, key, perm)


def canonical_graph(g: SmallGraph) -> SmallGraph:
    _, crows = canonical_rows(g.order, g.rows)
    return SmallGraph(g.order, crows)


def canonical_key(n: int, rows: tuple[int, ...]) -> int:
    return _search(n, rows, [0] * n)[0]


def canonical_id(g: SmallGraph) -> tuple[int, int]:
    """(order, canonical bits).  Canonical bits alone are only unique within
    one order, so any dedup that mixes orders must key on this pair."""
    return g.order, canonical_key(g.order, g.rows)


def are_isomorphic(g: SmallGraph, h: SmallGraph) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_key(g.order, g.rows) == canonical_key(h.order, h.rows)


def automorphism_generators(g: SmallGraph) -> list[tuple[int, ...]]:
    """Generators discovered by the canonical search (possibly not minimal)."""
    return _search(g.order, g.rows, [0] * g.order)[2]


def _marked_key(n: int, rows: tuple[int, ...], mask: int) -> int:
    colors = [0 if mask >> v & 1 else 1 for v in range(n)]
    return _search(n, rows, colors)[0]


def orbits(g: SmallGraph, kind: str = "vertices") -> OrbitPartition:
    """Partition vertices, edges or non-edges into automorphism orbits.

    Two elements share an orbit iff the graphs with those elements marked
    (as a colour class) have equal canonical bits, which holds iff some
    automorphism maps one element onto the other.
    """
    n, rows = g.order, g.rows
    if kind == "vertices":
        elems: list = list(range(n))
        masks = [1 << v for v in elems]
    elif kind == "edges":
        elems = g.edges()
        masks = [(1 << u) | (1 << v) for u, v in elems]
    elif kind == "nonedges":
        elems = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if not rows[u] >> v & 1
        ]
        masks = [(1 << u) | (1 << v) for u, v in elems]
    else:
        raise ValueError(f"unknown orbit kind {kind!r}")
    buckets: dict[int, list] = {}
    for elem, mask in zip(elems, masks):
        buckets.setdefault(_marked_key(n, rows, mask), []).append(elem)
    classes = tuple(tuple(sorted(v)) for v in buckets.values())
    return OrbitPartition(kind, tuple(sorted(classes)))
