"""Minor and subgraph search against brute-force recursion."""
import itertools

import pytest

import oracles
from conftest import random_graph
from mmik9.graphs import SmallGraph, complete, cycle, from_edges, path
from mmik9.minors import (MinorWitness, has_minor, has_subgraph, is_proper,
                          proper_ik_minor, verify_witness)


def test_known_minors(warm_catalog):
    pet = warm_catalog["Petersen"].graph
    assert has_minor(pet, complete(5)) is not None
    assert has_minor(pet, complete(6)) is None
    k33 = from_edges(6, [(a, b + 3) for a in range(3) for b in range(3)])
    assert has_minor(pet, k33) is not None
    assert has_minor(complete(8), complete(7)) is not None
    assert has_minor(cycle(9), cycle(4)) is not None
    assert has_minor(cycle(9), path(3)) is not None
    assert has_minor(path(9), cycle(3)) is None


def test_exhaustive_against_deletion_contraction(all_graphs_by_order):
    """Every host of order up to 6 against every pattern of order up to 5."""
    hosts = [g for n in range(1, 7) for g in all_graphs_by_order[n]]
    patterns = [g for n in range(1, 6) for g in all_graphs_by_order[n]]
    checked = hits = 0
    for host in hosts:
        for pat in patterns:
            got = has_minor(host, pat)
            want = oracles.brute_minor(host, pat)
            assert (got is not None) == want, (host.rows, pat.rows)
            checked += 1
            if got is not None:
                hits += 1
                assert verify_witness(host, pat, got)
    assert checked == 208 * 52
    assert hits > 1000


def test_subgraph_against_brute_injections(rng):
    for _ in range(300):
        host = random_graph(rng, n=rng.randint(1, 7))
        pat = random_graph(rng, n=rng.randint(1, min(6, host.order)))
        got = has_subgraph(host, pat)
        want = oracles.brute_subgraph_injection(host, pat)
        assert (got is not None) == (want is not None)
        if got is not None:
            assert verify_witness(host, pat, got)


def test_witness_verification_rejects_tampering(warm_catalog):
    host = warm_catalog["G9,28"].graph
    pat = complete(5)
    w = has_minor(host, pat)
    assert w is not None and verify_witness(host, pat, w)
    sets = [set(s) for s in w.branch_sets]
    # merging two branch sets breaks disjointness or adjacency
    sets[0] |= sets[1]
    bad = MinorWitness(tuple(tuple(sorted(s)) for s in sets))
    assert not verify_witness(host, pat, bad)
    # an out-of-range vertex must be rejected too
    sets = [set(s) for s in w.branch_sets]
    sets[0] = {host.order}
    bad2 = MinorWitness(tuple(tuple(sorted(s)) for s in sets))
    assert not verify_witness(host, pat, bad2)


def test_is_proper():
    assert is_proper(complete(5), complete(4))
    assert is_proper(complete(5), cycle(5))
    assert not is_proper(complete(5), complete(5))
    assert not is_proper(cycle(5), complete(5))


def test_self_minor_is_not_proper(warm_catalog):
    g = warm_catalog["F9"].graph
    w = has_minor(g, g)
    assert w is not None
    assert not is_proper(g, g)


def test_catalog_mmik_graphs_have_no_proper_ik_minor(warm_catalog):
    for name in ("K7", "K3,3,1,1", "H8", "F9", "H9", "A9", "B9", "E9+e",
                 "Cousin12", "Cousin41"):
        g = warm_catalog[name].graph
        assert proper_ik_minor(g, include_size_22=True) is None, name


def test_proper_ik_minor_positive_cases(warm_catalog):
    k8 = complete(8)
    hit = proper_ik_minor(k8)
    assert hit is not None and hit[0] == "K7"
    assert verify_witness(k8, warm_catalog["K7"].graph, hit[1])
    f9 = warm_catalog["F9"].graph
    for u in range(9):
        for v in range(u + 1, 9):
            if not f9.has_edge(u, v):
                hit = proper_ik_minor(f9.add_edge(u, v))
                assert hit is not None and hit[0] == "F9"
                return
    pytest.fail("F9 has no missing edge")
