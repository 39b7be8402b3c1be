"""Canonical labeling against brute-force isomorphism."""
import itertools

import oracles
from conftest import random_graph
from mmik9.canon import (are_isomorphic, automorphism_generators,
                         canonical_graph, canonical_id, canonical_key,
                         orbits)
from mmik9.graphs import SmallGraph, complete, cycle, path


def relabel(g, perm):
    rows = [0] * g.order
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if g.has_edge(u, v):
                rows[perm[u]] |= 1 << perm[v]
                rows[perm[v]] |= 1 << perm[u]
    return SmallGraph(g.order, tuple(rows))


def test_canonical_key_invariant_under_relabeling(rng):
    for _ in range(200):
        g = random_graph(rng)
        perm = list(range(g.order))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert canonical_key(g.order, g.rows) == canonical_key(h.order, h.rows)


def test_canonical_graph_is_fixed_point(rng):
    for _ in range(100):
        g = random_graph(rng)
        c = canonical_graph(g)
        assert canonical_graph(c).rows == c.rows
        assert are_isomorphic(g, c)


def test_canonical_equality_matches_brute_force(all_graphs_by_order):
    # same canonical key if and only if brute-force isomorphic, over every
    # pair of graphs of equal order and size up to order 6
    for n, graphs in all_graphs_by_order.items():
        by_size = {}
        for g in graphs:
            by_size.setdefault(g.size, []).append(g)
        for bucket in by_size.values():
            for g, h in itertools.combinations(bucket, 2):
                same_key = (canonical_key(g.order, g.rows)
                            == canonical_key(h.order, h.rows))
                assert same_key == oracles.brute_isomorphic(g, h)


def test_enumerated_graphs_are_pairwise_nonisomorphic(all_graphs_by_order):
    for graphs in all_graphs_by_order.values():
        keys = {canonical_key(g.order, g.rows) for g in graphs}
        assert len(keys) == len(graphs)


def test_canonical_id_separates_orders():
    # an edgeless pair and an edgeless triple must not collide
    ids = {canonical_id(SmallGraph(n, (0,) * n)) for n in (1, 2, 3)}
    assert len(ids) == 3


def test_automorphism_generators_preserve_edges(rng):
    for _ in range(50):
        g = random_graph(rng, n=rng.randint(2, 9))
        for perm in automorphism_generators(g):
            assert relabel(g, list(perm)).rows == g.rows


def test_vertex_orbit_counts():
    assert orbits(complete(7), "vertices").count == 1
    assert orbits(cycle(9), "vertices").count == 1
    assert orbits(path(4), "vertices").count == 2
    assert orbits(path(5), "vertices").count == 3


def test_vertex_orbits_match_brute_force(all_graphs_by_order):
    for g in all_graphs_by_order[5]:
        edges = oracles.edge_set(g)
        autos = [p for p in itertools.permutations(range(5))
                 if all(((p[u], p[v]) if p[u] < p[v] else (p[v], p[u]))
                        in edges for (u, v) in edges)]
        reach = {v: {p[v] for p in autos} for v in range(5)}
        brute_classes = {frozenset(s) for s in reach.values()}
        mine = {frozenset(c) for c in orbits(g, "vertices").classes}
        assert mine == brute_classes


def test_nonedge_orbits_on_known_graphs(warm_catalog):
    e9 = warm_catalog["E9"].graph
    assert orbits(e9, "nonedges").count == 2
    g926 = warm_catalog["G9,26"].graph
    assert orbits(g926, "nonedges").count == 5
    classes = {tuple(sorted(c)) for c in orbits(g926, "nonedges").classes}
    assert ((0, 1), (0, 2), (1, 3), (2, 3)) in classes
