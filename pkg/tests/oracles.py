"""Independent second routes used to cross-check the library.

Nothing here imports the library's decision procedures; counts come from
cycle-index arithmetic, containment from brute-force recursion, planarity
from networkx.  Slow but trustworthy on small inputs.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd

import networkx as nx


# ---------------------------------------------------------------------------
# graph plumbing
# ---------------------------------------------------------------------------

def to_nx(g) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.order))
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if g.has_edge(u, v):
                G.add_edge(u, v)
    return G


def edge_set(g) -> frozenset:
    return frozenset((u, v) for u in range(g.order)
                     for v in range(u + 1, g.order) if g.has_edge(u, v))


def nx_planar(g) -> bool:
    ok, _ = nx.check_planarity(to_nx(g))
    return ok


def nx_graph6(g) -> str:
    return nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


# ---------------------------------------------------------------------------
# counting oracles
# ---------------------------------------------------------------------------

def _partitions(n: int, largest: int | None = None):
    if n == 0:
        yield ()
        return
    if largest is None:
        largest = n
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


@lru_cache(maxsize=None)
def polya_edge_counts(n: int) -> tuple[int, ...]:
    """Number of unlabeled n-vertex graphs with m edges, for every m.

    Classic cycle-index computation: for each cycle type of a vertex
    permutation, work out the cycle lengths of the induced action on
    vertex pairs and multiply the corresponding (1 + x^len) factors.
    """
    pairs = comb(n, 2)
    total = [0] * (pairs + 1)
    for lam in _partitions(n):
        counts = {}
        for a in lam:
            counts[a] = counts.get(a, 0) + 1
        z = 1
        for a, k in counts.items():
            z *= a ** k * factorial(k)
        perms = factorial(n) // z
        cycle_lengths = []
        for i, a in enumerate(lam):
            if a % 2 == 1:
                cycle_lengths.extend([a] * ((a - 1) // 2))
            else:
                cycle_lengths.append(a // 2)
                cycle_lengths.extend([a] * (a // 2 - 1))
            for b in lam[i + 1:]:
                cycle_lengths.extend([a * b // gcd(a, b)] * gcd(a, b))
        poly = [0] * (pairs + 1)
        poly[0] = 1
        for length in cycle_lengths:
            for m in range(pairs, length - 1, -1):
                if poly[m - length]:
                    poly[m] += poly[m - length]
        for m in range(pairs + 1):
            total[m] += perms * poly[m]
    assert all(t % factorial(n) == 0 for t in total)
    return tuple(t // factorial(n) for t in total)


_MOBIUS = {1: 1, 2: -1, 3: -1, 4: 0, 5: -1, 6: 1, 7: -1, 8: 0, 9: 0}


def _series_mul(p: dict, q: dict, max_n: int) -> dict:
    out = {}
    for (n1, m1), c1 in p.items():
        for (n2, m2), c2 in q.items():
            if n1 + n2 > max_n:
                continue
            key = (n1 + n2, m1 + m2)
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def connected_edge_counts(max_n: int) -> dict:
    """Connected unlabeled graph counts by (order, size), orders 1..max_n.

    Inverse Euler transform of the Pólya counts: with A(x,y) the bivariate
    series of all graphs and C of connected ones, log A = sum_k C(x^k,y^k)/k,
    inverted by Moebius weights.
    """
    a = {}
    for n in range(1, max_n + 1):
        for m, cnt in enumerate(polya_edge_counts(n)):
            if cnt:
                a[(n, m)] = Fraction(cnt)
    log_a = {}
    power = dict(a)  # (A-1)^k
    sign = 1
    for k in range(1, max_n + 1):
        for key, val in power.items():
            log_a[key] = log_a.get(key, Fraction(0)) + sign * val / k
        sign = -sign
        power = _series_mul(power, a, max_n)
    c = {}
    for k in range(1, max_n + 1):
        mu = _MOBIUS[k]
        if mu == 0:
            continue
        for (n, m), val in log_a.items():
            if n * k <= max_n:
                c[(n * k, m * k)] = c.get((n * k, m * k), Fraction(0)) \
                    + Fraction(mu, k) * val
    out = {}
    for key, val in c.items():
        assert val.denominator == 1, (key, val)
        if val:
            out[key] = int(val)
    return out


# ---------------------------------------------------------------------------
# brute-force containment
# ---------------------------------------------------------------------------

def brute_isomorphic(g, h) -> bool:
    if g.order != h.order:
        return False
    eg, eh = edge_set(g), edge_set(h)
    if len(eg) != len(eh):
        return False
    if sorted(g.degree_sequence()) != sorted(h.degree_sequence()):
        return False
    for p in itertools.permutations(range(g.order)):
        if all(((p[u], p[v]) if p[u] < p[v] else (p[v], p[u])) in eh
               for (u, v) in eg):
            return True
    return False


def brute_subgraph_injection(host, pattern):
    """Some injective map carrying pattern edges onto host edges, or None."""
    eh = edge_set(host)
    ep = sorted(edge_set(pattern))
    if pattern.order > host.order or len(ep) > len(eh):
        return None
    for comb_ in itertools.permutations(range(host.order), pattern.order):
        if all(((comb_[u], comb_[v]) if comb_[u] < comb_[v]
                else (comb_[v], comb_[u])) in eh for (u, v) in ep):
            return comb_
    return None


def _canon_edges(n: int, edges: frozenset) -> tuple:
    best = None
    for p in itertools.permutations(range(n)):
        img = tuple(sorted((p[u], p[v]) if p[u] < p[v] else (p[v], p[u])
                           for (u, v) in edges))
        if best is None or img < best:
            best = img
    return (n, best)


def _drop_isolated(n: int, edges: frozenset) -> tuple:
    used = sorted({v for e in edges for v in e})
    relabel = {v: i for i, v in enumerate(used)}
    return len(used), frozenset(
        tuple(sorted((relabel[u], relabel[v]))) for (u, v) in edges)


_MINOR_MEMO: dict = {}


def brute_minor(host, pattern) -> bool:
    """Deletion/contraction recursion; exponential, for tiny graphs only."""
    hn, he = host.order, edge_set(host)
    pn, pe = pattern.order, edge_set(pattern)
    pkey = _canon_edges(pn, pe)
    return _brute_minor(hn, he, pn, pe, pkey)


def _brute_minor(hn, he, pn, pe, pkey) -> bool:
    if pn > hn or len(pe) > len(he):
        return False
    hkey = _canon_edges(hn, he)
    memo_key = (hkey, pkey)
    if memo_key in _MINOR_MEMO:
        return _MINOR_MEMO[memo_key]
    result = False
    if hn == pn and len(he) == len(pe):
        result = hkey == pkey
    else:
        if hn > pn:
            # try deleting an isolated vertex first
            isolated = set(range(hn)) - {v for e in he for v in e}
            if isolated:
                v = min(isolated)
                keep = [u for u in range(hn) if u != v]
                relabel = {u: i for i, u in enumerate(keep)}
                he2 = frozenset(tuple(sorted((relabel[u], relabel[w])))
                                for (u, w) in he)
                result = _brute_minor(hn - 1, he2, pn, pe, pkey)
        if not result:
            for (u, v) in sorted(he):
                he_del = he - {(u, v)}
                if _brute_minor(hn, he_del, pn, pe, pkey):
                    result = True
                    break
                # contract (u, v) into u, relabel to drop v
                merged = set()
                for (x, y) in he_del:
                    x2 = u if x == v else x
                    y2 = u if y == v else y
                    if x2 != y2:
                        merged.add(tuple(sorted((x2, y2))))
                keep = [w for w in range(hn) if w != v]
                relabel = {w: i for i, w in enumerate(keep)}
                he_con = frozenset(tuple(sorted((relabel[x], relabel[y])))
                                   for (x, y) in merged)
                if _brute_minor(hn - 1, he_con, pn, pe, pkey):
                    result = True
                    break
    _MINOR_MEMO[memo_key] = result
    return result


def brute_k_apex(g, k: int) -> bool:
    if nx_planar(g):
        return True
    G = to_nx(g)
    for size in range(1, k + 1):
        for drop in itertools.combinations(range(g.order), size):
            H = G.copy()
            H.remove_nodes_from(drop)
            if nx.check_planarity(H)[0]:
                return True
    return False


def kuratowski_subdivision_kind(K: nx.Graph) -> str:
    """Return 'K5' or 'K3,3' if K is a subdivision of one of them."""
    branch = [v for v in K if K.degree(v) > 2]
    rest = [v for v in K if K.degree(v) == 2]
    assert all(K.degree(v) in (2, 3, 4) for v in K.nodes), "stray degree"
    base = nx.Graph()
    base.add_nodes_from(branch)
    seen_paths = set()
    for b in branch:
        for nbr in K.neighbors(b):
            prev, cur = b, nbr
            while K.degree(cur) == 2:
                nxt = next(x for x in K.neighbors(cur) if x != prev)
                prev, cur = cur, nxt
            path_id = tuple(sorted((b, cur)))
            if b == cur:
                raise AssertionError("self-loop after contraction")
            if path_id in seen_paths and base.has_edge(b, cur):
                continue
            seen_paths.add(path_id)
            base.add_edge(b, cur)
    degs = sorted(d for _, d in base.degree())
    if degs == [4] * 5:
        assert nx.is_isomorphic(base, nx.complete_graph(5))
        return "K5"
    if degs == [3] * 6:
        assert nx.is_isomorphic(base, nx.complete_bipartite_graph(3, 3))
        return "K3,3"
    raise AssertionError(f"unexpected contracted degrees {degs}")
