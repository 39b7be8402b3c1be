"""Triangle-Y moves, ∇Y/Y∇ family closures, and the named-graph catalog.

A triangle-Y move deletes the three edges of a triangle and joins a new
vertex to its corners, preserving size.  The inverse Y-triangle move deletes
a degree-3 vertex and completes its neighbourhood to a triangle, dropping
any edge that was already present.  The family of a graph is its closure
under both moves, up to isomorphism.

Every named graph in the catalog is pinned by a derivation procedure that
asserts uniqueness of whatever it selects; a failed derivation raises
CatalogError rather than guessing.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .canon import canonical_graph, canonical_key, orbits
from .graphs import (GraphError, SmallGraph, complete, complete_multipartite,
                     cycle, disjoint_union, empty_graph, from_edges)


class CatalogError(Exception):
    pass


def triangle_y(g: SmallGraph, triangle: tuple[int, int, int]) -> SmallGraph:
    """Replace the triangle's edges with a new degree-3 vertex joined to its
    corners.  Size is preserved, order grows by one."""
    a, b, c = sorted(triangle)
    if len({a, b, c}) != 3 or not (g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)):
        raise GraphError(f"vertices {triangle} do not induce a triangle")
    h = g.delete_edge(a, b).delete_edge(a, c).delete_edge(b, c)
    rows = list(h.rows) + [0]
    v = g.order
    for x in (a, b, c):
        rows[x] |= 1 << v
        rows[v] |= 1 << x
    return SmallGraph(g.order + 1, tuple(rows))


def y_triangle(g: SmallGraph, v: int) -> SmallGraph:
    """Delete the degree-3 vertex v and make its neighbourhood a triangle.
    Edges already present among the neighbours are not doubled, so up to
    three edges may be lost."""
    if not 0 <= v < g.order or g.degree(v) != 3:
        raise GraphError(f"vertex {v} does not have degree 3")
    nbrs = [u for u in range(g.order) if g.rows[v] >> u & 1]
    h = g
    for i in range(3):
        for j in range(i + 1, 3):
            if not h.has_edge(nbrs[i], nbrs[j]):
                h = h.add_edge(nbrs[i], nbrs[j])
    return h.delete_vertex(v)


@dataclass(frozen=True)
class FamilyMember:
    graph: SmallGraph  # canonically labeled
    index: int
    parent: Optional[int]  # index of the member this was reached from
    move: Optional[str]  # "ty" | "yt" | None for the seed
    edge_loss: int  # edges dropped by a yt move


@dataclass
class FamilyClosure:
    seed_name: str
    members: list[FamilyMember]

    def graphs(self) -> list[SmallGraph]:
        return [m.graph for m in self.members]

    def of_order(self, n: int) -> list[SmallGraph]:
        return [m.graph for m in self.members if m.graph.order == n]

    def sizes(self) -> set[int]:
        return {m.graph.size for m in self.members}


def family_closure(seed: SmallGraph, seed_name: str = "", cap: int = 10000) -> FamilyClosure:
    """Breadth-first closure of the seed under both moves, one canonical
    representative per isomorphism class, in deterministic discovery order."""
    start = canonical_graph(seed)
    members = [FamilyMember(start, 0, None, None, 0)]
    seen = {(start.order, canonical_key(start.order, start.rows))}
    frontier = [0]
    while frontier:
        next_frontier = []
        for idx in frontier:
            g = members[idx].graph
            children = []
            for tri in g.triangle_list():
                children.append((triangle_y(g, tri), "ty"))
            for v in range(g.order):
                if g.degree(v) == 3:
                    children.append((y_triangle(g, v), "yt"))
            for child, move in children:
                c = canonical_graph(child)
                key = (c.order, canonical_key(c.order, c.rows))
                if key in seen:
                    continue
                seen.add(key)
                members.append(FamilyMember(c, len(members), idx, move, g.size - c.size))
                next_frontier.append(len(members) - 1)
                if len(members) > cap:
                    raise CatalogError(
                        f"family of {seed_name or 'seed'} exceeded {cap} members")
        frontier = next_frontier
    return FamilyClosure(seed_name, members)


# ---------------------------------------------------------------------------
# named-graph catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: SmallGraph
    provenance: str


# expected (order, size) for every catalog entry, asserted at build time
LEDGER = {
    "K6": (6, 15), "K7": (7, 21), "K8": (8, 28),
    "K3,3,1": (7, 15), "K4,4": (8, 16), "K4,4-e": (8, 15), "K3,3,1,1": (8, 22),
    "Petersen": (10, 15), "P8": (8, 15),
    "H8": (8, 21), "F9": (9, 21), "H9": (9, 21), "E9": (9, 21),
    "E9+e": (9, 22), "A9": (9, 22), "B9": (9, 22),
    "Cousin12": (9, 22), "Cousin41": (9, 22),
    "G9,26": (9, 26), "G9,27": (9, 27), "G9,28": (9, 28), "260910": (9, 29),
}

# the 26-edge order-9 graph fixed by this edge list (1-indexed pairs)
_G926_EDGES = [
    (1, 4), (1, 5), (1, 7), (1, 8), (1, 9), (2, 5), (2, 6), (2, 7), (2, 8),
    (2, 9), (3, 5), (3, 6), (3, 7), (3, 8), (3, 9), (4, 6), (4, 7), (4, 8),
    (4, 9), (5, 6), (5, 8), (5, 9), (6, 8), (6, 9), (7, 8), (7, 9),
]

_CATALOG: Optional[dict[str, NamedGraph]] = None
_FAMILIES: dict[str, FamilyClosure] = {}


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise CatalogError(f"catalog derivation failed: {what}")


def _unique(items: list, what: str):
    _require(len(items) == 1, f"{what} (got {len(items)} candidates)")
    return items[0]


def _plus_universal_vertex(g: SmallGraph, skip: int) -> SmallGraph:
    """g plus a new vertex adjacent to every vertex except `skip`."""
    rows = list(g.rows) + [0]
    v = g.order
    for u in range(g.order):
        if u != skip:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return SmallGraph(g.order + 1, tuple(rows))


def _iso_in(g: SmallGraph, pool: list[SmallGraph]) -> bool:
    from .canon import are_isomorphic
    return any(are_isomorphic(g, h) for h in pool)


def _build_catalog() -> dict[str, NamedGraph]:
    from .canon import are_isomorphic
    from .minors import has_minor, has_subgraph, is_proper
    from .apex import is_k_apex, is_mm_not_k_apex, find_mm_not_k_apex

    out: dict[str, NamedGraph] = {}

    def add(name: str, g: SmallGraph, provenance: str) -> SmallGraph:
        _require(LEDGER[name] == (g.order, g.size),
                 f"{name} is ({g.order},{g.size}), ledger says {LEDGER[name]}")
        out[name] = NamedGraph(name, g, provenance)
        return g

    K6 = add("K6", complete(6), "complete graph on 6 vertices")
    K7 = add("K7", complete(7), "complete graph on 7 vertices")
    add("K8", complete(8), "complete graph on 8 vertices")
    k331 = add("K3,3,1", complete_multipartite([3, 3, 1]), "complete tripartite 3+3+1")
    k44 = add("K4,4", complete_multipartite([4, 4]), "complete bipartite 4+4")
    k44e = add("K4,4-e", k44.delete_edge(0, 4), "K4,4 minus one edge (edge-transitive)")
    k3311 = add("K3,3,1,1", complete_multipartite([3, 3, 1, 1]),
                "complete multipartite 3+3+1+1")

    # Petersen family: closure of K6 under both moves
    pet = family_closure(K6, "K6")
    _FAMILIES["K6"] = pet
    _require(len(pet.members) == 7, f"K6 family has {len(pet.members)} members, expected 7")
    _require(pet.sizes() == {15}, "K6 family members must all have 15 edges")
    _require(sorted(g.order for g in pet.graphs()) == [6, 7, 7, 8, 8, 9, 10],
             "K6 family order multiset")
    _require(_iso_in(k331, pet.graphs()), "K3,3,1 must be a K6-family member")
    _require(_iso_in(k44e, pet.graphs()), "K4,4-e must be a K6-family member")
    petersen = _unique(pet.of_order(10), "unique order-10 K6-family member")
    _require(not petersen.triangle_list() and petersen.degree_sequence() == (3,) * 10,
             "order-10 member must be the 3-regular triangle-free Petersen graph")
    add("Petersen", petersen, "order-10 member of the K6 family")
    p8 = _unique([g for g in pet.of_order(8) if not are_isomorphic(g, k44e)],
                 "(8,15) K6-family member other than K4,4-e")
    add("P8", p8, "the (8,15) K6-family member other than K4,4-e")

    # K7 family and its order-9 members F9, H9, E9
    k7fam = family_closure(K7, "K7")
    _FAMILIES["K7"] = k7fam
    _require(k7fam.sizes() == {21}, "K7 family members must all have 21 edges")
    h8 = _unique(k7fam.of_order(8), "unique order-8 K7-family member")
    add("H8", h8, "the unique triangle-Y child of K7")
    o9 = k7fam.of_order(9)
    _require(len(o9) == 3, f"K7 family has {len(o9)} order-9 members, expected 3")

    # children of K3,3,1,1; A9 is the one matching a P8-plus-vertex construction
    kid_map = {}
    for tri in k3311.triangle_list():
        c = canonical_graph(triangle_y(k3311, tri))
        kid_map[(c.order, canonical_key(c.order, c.rows))] = c
    kids = sorted(kid_map.values(), key=lambda g: canonical_key(g.order, g.rows))
    _require(len(kids) == 2, f"K3,3,1,1 has {len(kids)} distinct children, expected 2")
    p8_plus = [canonical_graph(_plus_universal_vertex(p8, w))
               for w in sorted(orbits(p8, "vertices").representatives())]
    _require(len(p8_plus) == 4, "P8 must have 4 vertex orbits")
    matches = [(i, j) for i, pg in enumerate(p8_plus) for j, kid in enumerate(kids)
               if are_isomorphic(pg, kid)]
    (a9_src, a9_idx) = _unique(matches, "one P8-plus-vertex graph matching one child")
    a9 = add("A9", kids[a9_idx],
             "child of K3,3,1,1 that matches a P8-plus-universal-vertex construction")
    b9 = add("B9", kids[1 - a9_idx], "the other child of K3,3,1,1")

    # F9: among the other three P8-plus-vertex graphs exactly one is not
    # 2-apex, and it has exactly one proper minor among the order-9 members
    others = [pg for i, pg in enumerate(p8_plus) if i != a9_src]
    non_apex = _unique([pg for pg in others if not is_k_apex(pg, 2)],
                       "non-2-apex P8-plus-vertex graph besides the A9 one")
    _require(sum(1 for pg in others if is_k_apex(pg, 2)) == 2,
             "two of the P8-plus-vertex graphs must be 2-apex")
    f9 = _unique([M for M in o9 if is_proper(non_apex, M) and has_minor(non_apex, M)],
                 "proper order-9 K7-family minor of the non-2-apex P8-plus-vertex graph")
    add("F9", f9, "order-9 K7-family member pinned by the P8-plus-vertex probe")

    # H9: probe with K4,4-e plus a vertex adjacent to all but one degree-3 vertex
    deg3 = [v for v in range(8) if k44e.degree(v) == 3]
    _require(len(deg3) == 2 and orbits(k44e, "vertices").count == 2,
             "K4,4-e must have two degree-3 vertices forming one orbit")
    probe = _plus_universal_vertex(k44e, deg3[0])
    h9 = _unique([M for M in o9 if is_proper(probe, M) and has_minor(probe, M)],
                 "proper order-9 K7-family minor of the K4,4-e-plus-vertex probe")
    _require(not are_isomorphic(f9, h9), "F9 and H9 must be distinct")
    add("H9", h9, "order-9 K7-family member pinned by the K4,4-e-plus-vertex probe")

    e9 = _unique([M for M in o9 if not are_isomorphic(M, f9) and not are_isomorphic(M, h9)],
                 "order-9 K7-family member other than F9 and H9")
    _require(is_mm_not_k_apex(e9, 2), "E9 must be minor minimal not 2-apex")
    add("E9", e9, "the order-9 K7-family member other than F9 and H9")

    # E9+e: of the two non-edge orbits of E9, exactly one extension has no
    # F9 subgraph; the other must contain one
    ne = orbits(e9, "nonedges")
    _require(ne.count == 2, f"E9 has {ne.count} non-edge orbits, expected 2")
    exts = [e9.add_edge(u, v) for (u, v) in sorted(ne.representatives())]
    with_f9 = [h for h in exts if has_subgraph(h, f9) is not None]
    without = [h for h in exts if has_subgraph(h, f9) is None]
    _require(len(with_f9) == 1 and len(without) == 1,
             "E9 extensions must split into one with and one without an F9 subgraph")
    add("E9+e", canonical_graph(without[0]),
        "the E9 extension with no F9 subgraph (the other extension has one)")

    # the two order-9 K3,3,1,1-family members that are not children; the
    # 12/41 labels follow canonical-bits order and carry no other meaning
    fam3311 = family_closure(k3311, "K3,3,1,1")
    _FAMILIES["K3,3,1,1"] = fam3311
    _require(fam3311.sizes() == {22}, "K3,3,1,1 family members must all have 22 edges")
    o9f = fam3311.of_order(9)
    _require(len(o9f) == 4, f"K3,3,1,1 family has {len(o9f)} order-9 members, expected 4")
    _require(_iso_in(a9, o9f) and _iso_in(b9, o9f), "children must appear among them")
    cousins = sorted((g for g in o9f
                      if not are_isomorphic(g, a9) and not are_isomorphic(g, b9)),
                     key=lambda g: canonical_key(g.order, g.rows))
    _require(len(cousins) == 2, "exactly two non-child order-9 family members")
    add("Cousin12", cousins[0],
        "non-child order-9 K3,3,1,1-family member, smaller canonical bits")
    add("Cousin41", cousins[1],
        "non-child order-9 K3,3,1,1-family member, larger canonical bits")

    g926 = add("G9,26", from_edges(9, [(a - 1, b - 1) for a, b in _G926_EDGES]),
               "fixed 26-edge list")
    _require(is_mm_not_k_apex(g926, 2), "G9,26 must be minor minimal not 2-apex")

    g928 = add("G9,28", disjoint_union(complete(2), cycle(7)).complement(),
               "complement of the disjoint union of K2 and C7")
    _require(are_isomorphic(g928, g926.add_edge(0, 2).add_edge(1, 3)),
             "G9,28 must equal G9,26 plus the edges {1,3} and {2,4}")

    g260910 = add("260910",
                  disjoint_union(disjoint_union(cycle(6), complete(2)),
                                 empty_graph(1)).complement(),
                  "complement of the disjoint union of C6, K2 and K1; "
                  "carries an unknotted embedding (literature axiom)")
    _require(are_isomorphic(g260910, g926.add_edge(0, 1).add_edge(1, 2).add_edge(1, 3)),
             "260910 must equal G9,26 plus the edges {1,2}, {2,3} and {2,4}")
    _require(not is_k_apex(g260910, 2), "260910 must not be 2-apex")

    g927 = _unique(find_mm_not_k_apex(9, 2, sizes={27}),
                   "minor-minimal non-2-apex (9,27) graph")
    add("G9,27", g927, "the unique minor-minimal non-2-apex (9,27) graph")
    _require(has_subgraph(g260910, g927) is not None, "G9,27 must be a subgraph of 260910")

    _require(set(out) == set(LEDGER), "catalog must cover the ledger exactly")
    return out


def catalog() -> dict[str, NamedGraph]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
    return _CATALOG


def named_graph(name: str) -> SmallGraph:
    entries = catalog()
    if name not in entries:
        raise KeyError(f"unknown catalog graph {name!r}; known: {sorted(entries)}")
    return entries[name].graph


def named_family(seed_name: str) -> FamilyClosure:
    """Cached closure for one of the three cataloged seeds."""
    if seed_name not in ("K6", "K7", "K3,3,1,1"):
        raise KeyError(f"no cataloged family for {seed_name!r}")
    catalog()
    return _FAMILIES[seed_name]
