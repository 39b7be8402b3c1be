"""Simple graphs on at most 16 vertices, stored as per-vertex adjacency bitmasks.

The representation is a tuple ``rows`` of ints where bit ``j`` of ``rows[i]``
says whether vertices ``i`` and ``j`` are adjacent.  All heavy search code in
this package works directly on ``(order, rows)`` pairs; :class:`SmallGraph` is
the validated value type used at API boundaries.

Bit strings for whole graphs (canonical forms, graph6 payloads) list the
vertex pairs in column-major order (0,1), (0,2), (1,2), (0,3), (1,3), (2,3),
... with the first pair in the most significant position.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 16


class GraphError(ValueError):
    """Invalid graph data or edit."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""


def _check_rows(order: int, rows: Sequence[int]) -> None:
    if not 0 <= order <= MAX_ORDER:
        raise GraphError(f"order {order} outside 0..{MAX_ORDER}")
    if len(rows) != order:
        raise GraphError(f"expected {order} adjacency rows, got {len(rows)}")
    for i, row in enumerate(rows):
        if row < 0 or row >> order:
            raise GraphError(f"row {i} has bits at positions >= order")
        if row >> i & 1:
            raise GraphError(f"loop at vertex {i}")
    for i in range(order):
        for j in range(i + 1, order):
            if (rows[i] >> j & 1) != (rows[j] >> i & 1):
                raise GraphError(f"asymmetric adjacency between {i} and {j}")


@dataclass(frozen=True)
class SmallGraph:
    order: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_rows(self.order, self.rows)

    # -- metrics ---------------------------------------------------------

    @property
    def size(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in non-increasing order."""
        return tuple(sorted((r.bit_count() for r in self.rows), reverse=True))

    @property
    def min_degree(self) -> int:
        if self.order == 0:
            return 0
        return min(r.bit_count() for r in self.rows)

    @property
    def max_degree(self) -> int:
        if self.order == 0:
            return 0
        return max(r.bit_count() for r in self.rows)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> int:
        """Neighbourhood of v as a bitmask."""
        self._check_vertex(v)
        return self.rows[v]

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.order):
            w = self.rows[u] >> (u + 1) << (u + 1)
            while w:
                low = w & -w
                out.append((u, low.bit_length() - 1))
                w ^= low
        return out

    def is_connected(self) -> bool:
        return component_count(self.order, self.rows) <= 1

    def component_count(self) -> int:
        return component_count(self.order, self.rows)

    def triangle_list(self) -> list[tuple[int, int, int]]:
        out = []
        for u, v in self.edges():
            common = self.rows[u] & self.rows[v] >> (v + 1) << (v + 1)
            w = common
            while w:
                low = w & -w
                out.append((u, v, low.bit_length() - 1))
                w ^= low
        return out

    def metrics(self) -> dict:
        return {
            "order": self.order,
            "size": self.size,
            "degree_sequence": list(self.degree_sequence()),
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "connected": self.is_connected(),
            "components": self.component_count(),
            "triangles": len(self.triangle_list()),
        }

    # -- edits (all return new graphs) -----------------------------------

    def complement(self) -> "SmallGraph":
        full = (1 << self.order) - 1
        return SmallGraph(
            self.order,
            tuple((full ^ self.rows[i]) & ~(1 << i) & full for i in range(self.order)),
        )

    def add_edge(self, u: int, v: int) -> "SmallGraph":
        self._check_pair(u, v)
        if self.rows[u] >> v & 1:
            raise GraphError(f"edge ({u},{v}) already present")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return SmallGraph(self.order, tuple(rows))

    def delete_edge(self, u: int, v: int) -> "SmallGraph":
        self._check_pair(u, v)
        if not self.rows[u] >> v & 1:
            raise GraphError(f"edge ({u},{v}) not present")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return SmallGraph(self.order, tuple(rows))

    def delete_vertex(self, v: int) -> "SmallGraph":
        self._check_vertex(v)
        n, rows = delete_vertices(self.order, self.rows, 1 << v)
        return SmallGraph(n, rows)

    def contract_edge(self, u: int, v: int) -> "SmallGraph":
        """Contract edge (u,v); parallel edges collapse, loops are dropped."""
        self._check_pair(u, v)
        if not self.rows[u] >> v & 1:
            raise GraphError(f"edge ({u},{v}) not present")
        n, rows = contract_edge(self.order, self.rows, u, v)
        return SmallGraph(n, rows)

    def relabel(self, perm: Sequence[int]) -> "SmallGraph":
        """Apply ``perm`` (old label -> new label)."""
        if sorted(perm) != list(range(self.order)):
            raise GraphError("perm is not a permutation of the vertex labels")
        rows = [0] * self.order
        for u in range(self.order):
            w = self.rows[u]
            while w:
                low = w & -w
                rows[perm[u]] |= 1 << perm[low.bit_length() - 1]
                w ^= low
        return SmallGraph(self.order, tuple(rows))

    # -- helpers ----------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise GraphError(f"vertex {v} outside 0..{self.order - 1}")

    def _check_pair(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError("loops not allowed")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"SmallGraph({self.order}, {self.size} edges, {graph6_encode(self)!r})"


# ---------------------------------------------------------------------------
# raw-row helpers shared by the search modules
# ---------------------------------------------------------------------------

def component_count(n: int, rows: Sequence[int]) -> int:
    seen = 0
    count = 0
    for s in range(n):
        if seen >> s & 1:
            continue
        count += 1
        frontier = 1 << s
        comp = frontier
        while frontier:
            nxt = 0
            w = frontier
            while w:
                low = w & -w
                nxt |= rows[low.bit_length() - 1]
                w ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
    return count


def component_masks(n: int, rows: Sequence[int]) -> list[int]:
    """Vertex bitmask of every connected component, isolated vertices included."""
    seen = 0
    out = []
    for s in range(n):
        if seen >> s & 1:
            continue
        frontier = 1 << s
        comp = frontier
        while frontier:
            nxt = 0
            w = frontier
            while w:
                low = w & -w
                nxt |= rows[low.bit_length() - 1]
                w ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def mask_is_connected(rows: Sequence[int], mask: int) -> bool:
    """Is the sub-bitmask ``mask`` connected in the graph given by rows?"""
    if mask == 0:
        return False
    start = mask & -mask
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        w = frontier
        while w:
            low = w & -w
            nxt |= rows[low.bit_length() - 1]
            w ^= low
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp == mask


def delete_vertices(n: int, rows: Sequence[int], mask: int) -> tuple[int, tuple[int, ...]]:
    """Remove the vertices in ``mask`` and compact the labels."""
    keep = [v for v in range(n) if not mask >> v & 1]
    out = []
    for v in keep:
        row = rows[v]
        new = 0
        for idx, u in enumerate(keep):
            if row >> u & 1:
                new |= 1 << idx
        out.append(new)
    return len(keep), tuple(out)


def contract_edge(n: int, rows: Sequence[int], u: int, v: int) -> tuple[int, tuple[int, ...]]:
    """Merge v into u (edge (u,v) assumed present), then drop v."""
    merged = list(rows)
    merged[u] = (merged[u] | merged[v]) & ~(1 << u) & ~(1 << v)
    w = merged[v]
    while w:
        low = w & -w
        t = low.bit_length() - 1
        if t != u:
            merged[t] |= 1 << u
        w ^= low
    for t in range(n):
        merged[t] &= ~(1 << v)
    merged[v] = 0
    return delete_vertices(n, merged, 1 << v)


def rows_size(rows: Sequence[int]) -> int:
    return sum(r.bit_count() for r in rows) // 2


def pack_bits(n: int, rows: Sequence[int]) -> int:
    """Upper-triangle bits in column-major pair order, first pair most significant."""
    key = 0
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            key = key << 1 | (rj >> i & 1)
    return key


def unpack_bits(n: int, key: int) -> tuple[int, ...]:
    total = n * (n - 1) // 2
    rows = [0] * n
    pos = total - 1
    for j in range(1, n):
        for i in range(j):
            if key >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return tuple(rows)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> SmallGraph:
    return SmallGraph(n, (0,) * n)


def complete(n: int) -> SmallGraph:
    full = (1 << n) - 1
    return SmallGraph(n, tuple(full & ~(1 << i) for i in range(n)))


def complete_multipartite(parts: Sequence[int]) -> SmallGraph:
    if any(p <= 0 for p in parts):
        raise GraphError("part sizes must be positive")
    n = sum(parts)
    masks = []
    start = 0
    for p in parts:
        masks.append(((1 << p) - 1) << start)
        start += p
    full = (1 << n) - 1
    rows = []
    start = 0
    for p, m in zip(parts, masks):
        for i in range(start, start + p):
            rows.append(full & ~m)
        start += p
    return SmallGraph(n, tuple(rows))


def cycle(n: int) -> SmallGraph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    rows = [0] * n
    for i in range(n):
        j = (i + 1) % n
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return SmallGraph(n, tuple(rows))


def path(n: int) -> SmallGraph:
    rows = [0] * n
    for i in range(n - 1):
        rows[i] |= 1 << (i + 1)
        rows[i + 1] |= 1 << i
    return SmallGraph(n, tuple(rows))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> SmallGraph:
    rows = [0] * n
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return SmallGraph(n, tuple(rows))


def disjoint_union(g: SmallGraph, h: SmallGraph) -> SmallGraph:
    n = g.order + h.order
    if n > MAX_ORDER:
        raise GraphError(f"union order {n} exceeds {MAX_ORDER}")
    rows = list(g.rows) + [r << g.order for r in h.rows]
    return SmallGraph(n, tuple(rows))


def join(g: SmallGraph, h: SmallGraph) -> SmallGraph:
    """Disjoint union plus all edges between the two sides."""
    u = disjoint_union(g, h)
    gmask = (1 << g.order) - 1
    hmask = ((1 << u.order) - 1) ^ gmask
    rows = list(u.rows)
    for i in range(g.order):
        rows[i] |= hmask
    for i in range(g.order, u.order):
        rows[i] |= gmask
    return SmallGraph(u.order, tuple(rows))


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def graph6_encode(g: SmallGraph) -> str:
    n = g.order
    out = [chr(n + 63)]
    total = n * (n - 1) // 2
    key = pack_bits(n, g.rows)
    pad = (-total) % 6
    key <<= pad
    for shift in range(total + pad - 6, -7, -6):
        out.append(chr(((key >> max(shift, 0)) & 0x3F) + 63))
        if shift <= 0:
            break
    if total == 0:
        return out[0]
    return "".join(out)


def graph6_decode(text: str) -> SmallGraph:
    s = text.rstrip("\n")
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) for c in s]
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside graph6 range 63..126")
    if data[0] == 126:
        # multi-byte order header: any such order exceeds our cap
        raise Graph6Error(f"order exceeds {MAX_ORDER}")
    n = data[0] - 63
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}")
    total = n * (n - 1) // 2
    need = (total + 5) // 6
    body = data[1:]
    if len(body) < need:
        raise Graph6Error("truncated graph6 bit stream")
    if len(body) > need:
        raise Graph6Error("trailing bytes after graph6 payload")
    key = 0
    for b in body:
        key = key << 6 | (b - 63)
    pad = need * 6 - total
    if key & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    key >>= pad
    return SmallGraph(n, unpack_bits(n, key))
