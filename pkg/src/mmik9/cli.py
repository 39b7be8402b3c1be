"""Command-line front end.

Every subcommand prints a human-readable summary to standard output and
optionally writes structured artifacts: JSON reports, graph6 line lists,
certificate dumps.  All files go through an atomic temp-then-rename write.
Exit status 0 means success (for verify: full PASS), 1 means a
verification failure, 2 a usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from .apex import apex_witness, find_mm_not_k_apex
from .canon import canonical_graph
from .classify import (census_plan, census_to_jsonable, classify,
                       render_report, report_to_jsonable, run_census,
                       verdict_to_jsonable, verify_all, verify_mmn2a,
                       verify_prop22, verify_prop28, verify_range,
                       verify_theorem)
from .enumeration import EnumSpec, enumerate_graphs
from .families import CatalogError, catalog, named_family, named_graph
from .graphs import Graph6Error, SmallGraph, graph6_decode, graph6_encode
from .jobs import resolve_jobs
from .minors import has_minor, has_subgraph
from .planarity import is_planar


class UsageError(Exception):
    pass


def atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(path) or "."
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def out_dir(args) -> str | None:
    return args.out or os.environ.get("MMIK_OUT")


def parse_sizes(text: str) -> list[int]:
    if ".." in text:
        lo, _, hi = text.partition("..")
        try:
            lo, hi = int(lo), int(hi)
        except ValueError:
            raise UsageError(f"bad size range {text!r}")
        if lo > hi:
            raise UsageError(f"empty size range {text!r}")
        return list(range(lo, hi + 1))
    try:
        return [int(text)]
    except ValueError:
        raise UsageError(f"bad size {text!r}")


def graph_argument(text: str) -> SmallGraph:
    """A catalog name or a graph6 string."""
    try:
        return named_graph(text)
    except KeyError:
        pass
    try:
        return graph6_decode(text)
    except Graph6Error as exc:
        raise UsageError(f"{text!r} is neither a catalog name nor graph6: {exc}")


def input_graphs(items: list[str]) -> list[tuple[str, SmallGraph]]:
    if not items:
        items = [line.strip() for line in sys.stdin if line.strip()]
    return [(text, graph_argument(text)) for text in items]


def canonical_g6(g: SmallGraph) -> str:
    return graph6_encode(canonical_graph(g))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    sizes = parse_sizes(args.size)
    jobs = resolve_jobs(args.jobs)
    for m in sizes:
        spec = EnumSpec(args.order, m, min_degree=args.min_degree,
                        max_degree=args.max_degree,
                        connected=True if args.connected else None)
        graphs = enumerate_graphs(spec, jobs=jobs)
        if args.count_only:
            if len(sizes) == 1:
                print(len(graphs))
            else:
                print(f"m={m}: {len(graphs)}")
            continue
        lines = sorted(canonical_g6(g) for g in graphs)
        directory = out_dir(args)
        if directory:
            tags = [f"n{args.order}", f"m{m}"]
            if args.connected:
                tags.append("connected")
            if args.min_degree is not None:
                tags.append(f"mindeg{args.min_degree}")
            if args.max_degree is not None:
                tags.append(f"maxdeg{args.max_degree}")
            path = os.path.join(directory, "graphs-" + "-".join(tags) + ".g6")
            atomic_write(path, "".join(line + "\n" for line in lines))
            print(f"m={m}: {len(lines)} graphs -> {path}")
        else:
            for line in lines:
                print(line)
    return 0


def cmd_canon(args) -> int:
    for _, g in input_graphs(args.graphs):
        print(canonical_g6(g))
    return 0


def cmd_planar(args) -> int:
    for text, g in input_graphs(args.graphs):
        print(f"{text} {'planar' if is_planar(g).planar else 'nonplanar'}")
    return 0


def cmd_apex(args) -> int:
    for text, g in input_graphs(args.graphs):
        w = apex_witness(g, args.k)
        if w is None:
            print(f"{text} not {args.k}-apex")
        else:
            print(f"{text} {args.k}-apex removed={list(w.removed)}")
    return 0


def cmd_search_mmn2a(args) -> int:
    jobs = resolve_jobs(args.jobs)
    found = find_mm_not_k_apex(args.max_order, args.k, jobs=jobs)
    for g in sorted(found, key=lambda g: (g.order, g.size, canonical_g6(g))):
        print(f"{canonical_g6(g)} order={g.order} size={g.size}")
    return 0


def cmd_minor(args) -> int:
    host = graph_argument(args.host)
    pattern = graph_argument(args.pattern)
    w = has_minor(host, pattern)
    if w is None:
        print("none")
    else:
        print(json.dumps({"branch_sets": [sorted(s) for s in w.branch_sets]},
                         sort_keys=True))
    return 0


def cmd_subgraph(args) -> int:
    host = graph_argument(args.host)
    pattern = graph_argument(args.pattern)
    w = has_subgraph(host, pattern)
    if w is None:
        print("none")
    else:
        print(json.dumps({"injection": list(w.injection)}, sort_keys=True))
    return 0


def cmd_family(args) -> int:
    fam = named_family(args.seed)
    members = sorted(fam.graphs(),
                     key=lambda g: (g.order, g.size, canonical_g6(g)))
    if args.count_only:
        print(len(members))
        return 0
    for g in members:
        print(f"{canonical_g6(g)} order={g.order} size={g.size}")
    return 0


def cmd_catalog(args) -> int:
    table = catalog()
    if args.name is None:
        for name in sorted(table):
            g = table[name].graph
            print(f"{name:10s} order={g.order} size={g.size} "
                  f"graph6={canonical_g6(g)}")
        return 0
    try:
        entry = table[args.name]
    except KeyError:
        raise UsageError(f"unknown catalog name {args.name!r}; "
                         f"known: {', '.join(sorted(table))}")
    if args.graph6:
        print(canonical_g6(entry.graph))
    else:
        print(f"name: {entry.name}")
        print(f"order: {entry.graph.order}")
        print(f"size: {entry.graph.size}")
        print(f"graph6: {canonical_g6(entry.graph)}")
        print(f"derivation: {entry.provenance}")
    return 0


def cmd_classify(args) -> int:
    rows = []
    for text, g in input_graphs(args.graphs):
        try:
            v = classify(g)
        except ValueError as exc:
            raise UsageError(f"{text}: {exc}")
        rows.append((text, v))
        cert = verdict_to_jsonable(v)["certificate"]
        detail = "" if cert is None else " " + json.dumps(cert, sort_keys=True)
        print(f"{text} {v.status} test={v.test_index}{detail}")
    directory = out_dir(args)
    if directory:
        payload = {text: verdict_to_jsonable(v) for text, v in rows}
        path = os.path.join(directory, "classify.json")
        atomic_write(path, json_text(payload))
        print(f"-> {path}", file=sys.stderr)
    return 0


def cmd_census(args) -> int:
    key = f"({args.order},{args.size})"
    try:
        plan = census_plan(key)
    except KeyError:
        raise UsageError(f"no census plan registered for {key}")
    if key == "(9,28)" and not args.connected:
        raise UsageError("the (9,28) census is defined over connected graphs; "
                         "pass --connected")
    jobs = resolve_jobs(args.jobs)
    catalog()
    spec = EnumSpec(args.order, args.size,
                    connected=True if args.connected else None)
    graphs = enumerate_graphs(spec, jobs=jobs)
    report = run_census(key, graphs, jobs=jobs,
                        collect=args.certificates is not None)
    print(f"census {key}{' connected' if args.connected else ''}: "
          f"{report.total} graphs")
    for label, count in report.counts:
        print(f"  {count:5d}  {label}")
    print(f"  {len(report.residue):5d}  (residue)")
    directory = out_dir(args)
    doc = census_to_jsonable(report)
    certs = doc.pop("certificates", None)
    if directory:
        path = os.path.join(
            directory, f"census-{args.order}-{args.size}.json")
        atomic_write(path, json_text(doc))
        print(f"-> {path}", file=sys.stderr)
    if args.certificates is not None and certs is not None:
        path = os.path.join(
            args.certificates, f"census-{args.order}-{args.size}.certs.json")
        atomic_write(path, json_text(certs))
        print(f"-> {path}", file=sys.stderr)
    return 0 if not report.residue else 1


def cmd_verify(args) -> int:
    jobs = resolve_jobs(args.jobs)
    collect = args.certificates is not None
    target = args.target
    if target == "prop22":
        rep = verify_prop22(jobs=jobs, collect=collect)
    elif target == "prop28":
        rep = verify_prop28(jobs=jobs, collect=collect)
    elif target == "range":
        rep = verify_range(jobs=jobs, collect=collect, full=args.full)
    elif target == "mmn2a":
        rep = verify_mmn2a(jobs=jobs)
    elif target == "theorem":
        rep = verify_theorem(jobs=jobs, axioms_path=args.axioms)
    else:
        rep = verify_all(jobs=jobs, axioms_path=args.axioms, collect=collect,
                         full=args.full)
    print(render_report(rep))
    directory = out_dir(args)
    if directory:
        path = os.path.join(directory, f"verify-{target}.json")
        atomic_write(path, json_text(report_to_jsonable(rep)))
        print(f"-> {path}", file=sys.stderr)
    if collect:
        dump = {}
        stack = [rep]
        while stack:
            r = stack.pop()
            if r.certificates:
                dump[r.name] = r.certificates
            stack.extend(r.subreports)
        path = os.path.join(args.certificates, f"verify-{target}.certs.json")
        atomic_write(path, json_text(dump))
        print(f"-> {path}", file=sys.stderr)
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mmik9",
        description="exhaustive machinery for the order-9 MMIK census")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed recorded for reproducibility of sampled runs")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, jobs=True, out=True):
        if jobs:
            p.add_argument("--jobs", type=int, default=None,
                           help="worker count (default: MMIK_JOBS or 1)")
        if out:
            p.add_argument("--out", default=None,
                           help="directory for artifacts (default: MMIK_OUT)")

    p = sub.add_parser("enumerate", help="list or count graphs of a slice")
    p.add_argument("-n", "--order", type=int, required=True)
    p.add_argument("-m", "--size", required=True,
                   help="edge count, or a range like 23..27")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--min-degree", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--count-only", action="store_true")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("canon", help="canonical graph6 form")
    p.add_argument("graphs", nargs="*",
                   help="graph6 strings or catalog names; stdin when absent")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("planar", help="planarity test")
    p.add_argument("graphs", nargs="*")
    p.set_defaults(func=cmd_planar)

    p = sub.add_parser("apex", help="k-apex test")
    p.add_argument("graphs", nargs="*")
    p.add_argument("-k", type=int, default=1, help="vertices to remove")
    p.set_defaults(func=cmd_apex)

    p = sub.add_parser("search-mmn2a",
                       help="minor minimal not k-apex search")
    p.add_argument("--max-order", type=int, default=9)
    p.add_argument("-k", type=int, default=2)
    common(p, out=False)
    p.set_defaults(func=cmd_search_mmn2a)

    p = sub.add_parser("minor", help="minor containment with witness")
    p.add_argument("host")
    p.add_argument("pattern")
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("subgraph", help="subgraph containment with witness")
    p.add_argument("host")
    p.add_argument("pattern")
    p.set_defaults(func=cmd_subgraph)

    p = sub.add_parser("family", help="triangle-Y/Y-triangle closure members")
    p.add_argument("seed", choices=["K6", "K7", "K3,3,1,1"])
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("catalog", help="named graphs and their derivations")
    p.add_argument("name", nargs="?", default=None)
    p.add_argument("--graph6", action="store_true",
                   help="print only the canonical graph6")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("classify", help="run the six screening tests")
    p.add_argument("graphs", nargs="*")
    common(p, jobs=False)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="priority census of a slice")
    p.add_argument("-n", "--order", type=int, required=True)
    p.add_argument("-m", "--size", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--certificates", default=None,
                   help="directory for witness dumps")
    common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run a verifier and report PASS/FAIL")
    p.add_argument("target",
                   choices=["prop22", "prop28", "range", "mmn2a", "theorem",
                            "all"])
    p.add_argument("--certificates", default=None,
                   help="directory for witness dumps")
    p.add_argument("--axioms", default=None,
                   help="alternative axiom file")
    p.add_argument("--full", action="store_true",
                   help="range: also sweep every connected order-9 graph")
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (Graph6Error, CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    raise SystemExit(main())
