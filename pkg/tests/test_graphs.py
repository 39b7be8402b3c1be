"""Core graph type and graph6 codec."""
import pytest

import oracles
from conftest import random_graph
from mmik9.graphs import (Graph6Error, GraphError, SmallGraph, complete,
                          complete_multipartite, component_count,
                          component_masks, contract_edge, cycle,
                          delete_vertices, disjoint_union, empty_graph,
                          from_edges, graph6_decode, graph6_encode, join,
                          pack_bits, path, unpack_bits)


def test_basic_accessors():
    g = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.order == 4
    assert g.size == 3
    assert g.degree(1) == 2
    assert sorted(g.degree_sequence()) == [1, 1, 2, 2]
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)


def test_add_and_delete_edge_return_new_graphs():
    g = path(4)
    g2 = g.add_edge(0, 3)
    assert g2.size == g.size + 1 and g.size == 3
    g3 = g2.delete_edge(0, 3)
    assert g3.rows == g.rows
    with pytest.raises(GraphError):
        g.add_edge(1, 1)


def test_complement_and_constructions():
    assert complete(5).complement().size == 0
    assert cycle(5).complement().size == 5
    k331 = complete_multipartite([3, 3, 1])
    assert (k331.order, k331.size) == (7, 15)
    k44 = complete_multipartite([4, 4])
    assert (k44.order, k44.size) == (8, 16)
    assert join(empty_graph(2), empty_graph(3)).size == 6
    du = disjoint_union(complete(3), cycle(4))
    assert (du.order, du.size) == (7, 7)
    assert component_count(du.order, du.rows) == 2
    masks = component_masks(du.order, du.rows)
    assert sorted(m.bit_count() for m in masks) == [3, 4]


def test_contract_and_delete():
    c4 = cycle(4)
    n, rows = contract_edge(c4.order, c4.rows, 0, 1)
    assert n == 3
    assert SmallGraph(n, rows).size == 3  # triangle, no doubled edge
    n2, rows2 = delete_vertices(c4.order, c4.rows, 0b0011)
    assert n2 == 2
    assert SmallGraph(n2, rows2).size == 1


def test_triangle_list():
    assert complete(4).triangle_list()
    assert not cycle(5).triangle_list()
    assert not complete_multipartite([4, 4]).triangle_list()


def test_pack_unpack_roundtrip(rng):
    for _ in range(200):
        g = random_graph(rng)
        bits = pack_bits(g.order, g.rows)
        assert unpack_bits(g.order, bits) == g.rows


def test_graph6_roundtrip_against_networkx(rng, warm_catalog):
    for entry in warm_catalog.values():
        g = entry.graph
        assert graph6_encode(g) == oracles.nx_graph6(g)
        assert graph6_decode(graph6_encode(g)).rows == g.rows
    for _ in range(10000):
        g = random_graph(rng)
        s = graph6_encode(g)
        assert s == oracles.nx_graph6(g)
        back = graph6_decode(s)
        assert back.order == g.order and back.rows == g.rows


def test_graph6_rejects_junk():
    with pytest.raises(Graph6Error):
        graph6_decode("")
    with pytest.raises(Graph6Error):
        graph6_decode("F~~~")  # truncated payload
    with pytest.raises(Graph6Error):
        graph6_decode("F~~~w trailing")


def test_order_cap():
    with pytest.raises(GraphError):
        empty_graph(17)
