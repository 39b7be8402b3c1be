"""The six-test screen, its certificates, and report plumbing."""
import json

import pytest

from mmik9.classify import (Check, ContainsIKMinor, MinorOfMmik, Report,
                            SizeBoundIK, TwoApex, Verdict, certificate_to_jsonable,
                            classify, load_axioms, render_report,
                            report_to_jsonable, verdict_to_jsonable,
                            verify_verdict, REQUIRED_AXIOMS)
from mmik9.graphs import SmallGraph, complete, cycle, empty_graph, join


def test_small_graphs_fall_to_the_order_screen():
    for g in (complete(6), cycle(5), empty_graph(1)):
        v = classify(g)
        assert v.status == "NotIK" and v.test_index == 1
        assert verify_verdict(g, v)


def test_size_bound_screen():
    for g in (complete(7), complete(8), complete(9), complete(10)):
        v = classify(g)
        assert v.status == "IK" and v.test_index == 2
        assert verify_verdict(g, v)


def test_sparse_screen():
    g = cycle(9)
    v = classify(g)
    assert (v.status, v.test_index) == ("NotIK", 3)
    assert verify_verdict(g, v)


def test_named_graph_verdicts(warm_catalog):
    expected = {
        "E9": ("NotIK", 4),      # proper subgraph of E9+e
        "Petersen": ("NotIK", 3),
        "K3,3,1,1": ("IK", 5),
        "H8": ("IK", 5),
        "F9": ("IK", 5),
        "H9": ("IK", 5),
        "A9": ("IK", 5),
        "B9": ("IK", 5),
        "E9+e": ("Indeterminate", None),
        "Cousin12": ("Indeterminate", None),
        "Cousin41": ("Indeterminate", None),
        "G9,26": ("Indeterminate", None),
        "G9,27": ("Indeterminate", None),
        "G9,28": ("Indeterminate", None),
        "260910": ("Indeterminate", None),
    }
    for name, want in expected.items():
        g = warm_catalog[name].graph
        v = classify(g)
        assert (v.status, v.test_index) == want, name
        assert verify_verdict(g, v), name


def test_two_apex_verdict():
    # a 7-vertex triangulation joined with K2: 30 edges on 9 vertices,
    # too dense for the early screens, settled by the 2-apex test
    octa = complete(6)
    for (u, v) in ((0, 3), (1, 4), (2, 5)):
        octa = octa.delete_edge(u, v)
    rows = list(octa.rows) + [0]
    for u in (0, 1, 2):
        rows[u] |= 1 << 6
        rows[6] |= 1 << u
    tri7 = SmallGraph(7, tuple(rows))
    g = join(tri7, complete(2))
    assert g.order == 9 and g.size == 30
    v = classify(g)
    assert v.status == "NotIK" and v.test_index == 6
    assert isinstance(v.certificate, TwoApex)
    assert verify_verdict(g, v)


def test_order_guard():
    with pytest.raises(ValueError):
        classify(empty_graph(11))


def test_verdict_tampering_is_rejected(warm_catalog):
    g = complete(7)
    v = classify(g)
    assert verify_verdict(g, v)
    wrong_status = Verdict("NotIK", v.test_index, v.certificate)
    assert not verify_verdict(g, wrong_status)
    wrong_cert = Verdict("IK", 2, SizeBoundIK(20, 21))
    assert not verify_verdict(g, wrong_cert)
    fake_indet = Verdict("Indeterminate", 6, None)
    assert not verify_verdict(g, fake_indet)


def test_monotone_consistency_on_ik_hits(rng, warm_catalog):
    """Adding edges can never destroy an IK verdict."""
    seeds = [warm_catalog[n].graph for n in ("F9", "H9", "A9", "B9")]
    k7_padded = complete(7)
    rows = list(k7_padded.rows) + [0, 0]
    seeds.append(SmallGraph(9, tuple(rows)))
    for g in seeds:
        assert classify(g).status == "IK"
        for _ in range(5):
            bigger = g
            for _ in range(rng.randint(1, 3)):
                nonedges = [(u, v) for u in range(9) for v in range(u + 1, 9)
                            if not bigger.has_edge(u, v)]
                if not nonedges:
                    break
                u, v = nonedges[rng.randrange(len(nonedges))]
                bigger = bigger.add_edge(u, v)
            vb = classify(bigger)
            assert vb.status == "IK"
            assert verify_verdict(bigger, vb)


def test_certificates_serialize(warm_catalog):
    for name in ("K7", "E9", "A9", "G9,28", "Petersen"):
        v = classify(warm_catalog[name].graph)
        text = json.dumps(verdict_to_jsonable(v), sort_keys=True)
        assert json.loads(text)["status"] == v.status


def test_report_plumbing():
    rep = Report("demo", notes=("a note",))
    rep.check("equal", 3, 3)
    assert rep.ok
    rep.check("unequal", 3, 4)
    assert not rep.ok
    sub = Report("child")
    sub.check("fine", "x", "x")
    rep.subreports.append(sub)
    text = render_report(rep)
    assert "FAIL demo" in text and "PASS child" in text
    assert "expected 3, got 4" in text
    doc = report_to_jsonable(rep)
    assert doc["ok"] is False
    assert doc["subreports"][0]["ok"] is True
    json.dumps(doc)  # must be serializable as-is


def test_axioms_load_and_override(tmp_path):
    axioms = load_axioms()
    ids = {a["id"] for a in axioms}
    assert set(REQUIRED_AXIOMS) <= ids
    alt = tmp_path / "axioms.json"
    alt.write_text(json.dumps(
        {"axioms": [{"id": "only-one", "statement": "s", "role": "r"}]}))
    assert [a["id"] for a in load_axioms(str(alt))] == ["only-one"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(
        {"axioms": [{"id": "x", "statement": "s"}, {"id": "x", "statement": "t"}]}))
    with pytest.raises(ValueError):
        load_axioms(str(bad))
