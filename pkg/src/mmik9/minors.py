"""Subgraph and minor containment with verifiable witnesses.

Minor search grows one branch set per pattern vertex, processing pattern
vertices in descending-degree order.  Branch sets are connected subsets of
unused host vertices; a candidate set must touch every previously placed set
whose pattern vertex is a neighbour.  Host vertices are tried lowest index
first, so witnesses are deterministic.

Subgraph search is plain injection backtracking with degree pruning.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .graphs import SmallGraph, mask_is_connected


@dataclass(frozen=True)
class SubgraphWitness:
    injection: tuple[int, ...]  # pattern vertex i -> host vertex injection[i]


@dataclass(frozen=True)
class MinorWitness:
    branch_sets: tuple[tuple[int, ...], ...]  # pattern vertex i -> host vertices


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# subgraph containment
# ---------------------------------------------------------------------------

def _find_injection(hn: int, hrows: Sequence[int], pn: int, prows: Sequence[int]) -> Optional[tuple[int, ...]]:
    if pn > hn:
        return None
    pdeg = [r.bit_count() for r in prows]
    order = sorted(range(pn), key=lambda v: (-pdeg[v], v))
    hdeg = [r.bit_count() for r in hrows]
    image = [-1] * pn
    used = 0

    def rec(k: int) -> bool:
        nonlocal used
        if k == pn:
            return True
        pv = order[k]
        need = pdeg[pv]
        placed_nbrs = [image[u] for u in _bits(prows[pv]) if image[u] >= 0]
        for hv in range(hn):
            if used >> hv & 1 or hdeg[hv] < need:
                continue
            hrow = hrows[hv]
            if any(not hrow >> x & 1 for x in placed_nbrs):
                continue
            image[pv] = hv
            used |= 1 << hv
            if rec(k + 1):
                return True
            used &= ~(1 << hv)
            image[pv] = -1
        return False

    if rec(0):
        return tuple(image)
    return None


def has_subgraph(host: SmallGraph, pattern: SmallGraph) -> Optional[SubgraphWitness]:
    """Injection of pattern into host preserving adjacency (not induced)."""
    if pattern.size > host.size:
        return None
    inj = _find_injection(host.order, host.rows, pattern.order, pattern.rows)
    return SubgraphWitness(inj) if inj is not None else None


# ---------------------------------------------------------------------------
# minor containment
# ---------------------------------------------------------------------------

def _neighborhood(rows: Sequence[int], mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= rows[low.bit_length() - 1]
        mask ^= low
    return out


def _find_model(hn: int, hrows: Sequence[int], pn: int, prows: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Branch-set masks indexed by pattern vertex, or None."""
    if pn > hn:
        return None
    if pn == hn:
        inj = _find_injection(hn, hrows, pn, prows)
        if inj is None:
            return None
        sets = [0] * pn
        for pv, hv in enumerate(inj):
            sets[pv] = 1 << hv
        return tuple(sets)

    pdeg = [r.bit_count() for r in prows]
    order = sorted(range(pn), key=lambda v: (-pdeg[v], v))
    # req[k]: placed positions adjacent to order[k]; pend[j][k]: pattern
    # neighbours of order[j] still unplaced once level k is done
    req = [[j for j in range(k) if prows[order[k]] >> order[j] & 1] for k in range(pn)]
    pend = [[sum(prows[order[j]] >> order[t] & 1 for t in range(k + 1, pn))
             for k in range(pn)] for j in range(pn)]
    sets = [0] * pn  # by position
    nbr = [0] * pn  # host neighbourhood of each placed set, by position

    def rec(k: int, free: int) -> bool:
        if k == pn:
            return True
        budget = free.bit_count() - (pn - k - 1)
        if budget <= 0:
            return False
        reqk = req[k]
        pendk = [(j, pend[j][k]) for j in range(k + 1) if pend[j][k]]

        def grow(S: int, nbS: int, allowed: int) -> bool:
            reach = S | allowed
            for j in reqk:
                if not nbr[j] & reach:
                    return False  # required contact unreachable from here
            if all(nbr[j] & S for j in reqk):
                nfree = free & ~S
                ok = True
                for j, need in pendk:
                    cover = nbS & nfree if j == k else nbr[j] & nfree
                    if cover.bit_count() < need:
                        ok = False  # disjoint future sets can't all touch j
                        break
                if ok:
                    sets[k] = S
                    nbr[k] = nbS
                    if rec(k + 1, nfree):
                        return True
                    sets[k] = 0
            if S.bit_count() >= budget:
                return False
            frontier = nbS & allowed
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                allowed ^= low
                if grow(S | low, nbS | hrows[low.bit_length() - 1], allowed):
                    return True
            return False

        roots = free
        while roots:
            low = roots & -roots
            # sets rooted at this vertex exclude lower-numbered free vertices
            if grow(low, hrows[low.bit_length() - 1], free & ~((low << 1) - 1)):
                return True
            roots ^= low
        return False

    if rec(0, (1 << hn) - 1):
        out = [0] * pn
        for k in range(pn):
            out[order[k]] = sets[k]
        return tuple(out)
    return None


@lru_cache(maxsize=1 << 16)
def _model_cached(hn: int, hrows: tuple[int, ...], pn: int, prows: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    return _find_model(hn, hrows, pn, prows)


def has_minor(host: SmallGraph, pattern: SmallGraph) -> Optional[MinorWitness]:
    if pattern.order > host.order or pattern.size > host.size:
        return None
    model = _model_cached(host.order, host.rows, pattern.order, pattern.rows)
    if model is None:
        return None
    return MinorWitness(tuple(tuple(_bits(m)) for m in model))


def verify_witness(host: SmallGraph, pattern: SmallGraph, witness) -> bool:
    """Re-check a subgraph or minor witness from its raw data alone."""
    if isinstance(witness, SubgraphWitness):
        inj = witness.injection
        if len(inj) != pattern.order or len(set(inj)) != len(inj):
            return False
        if any(not 0 <= v < host.order for v in inj):
            return False
        return all(
            host.rows[inj[u]] >> inj[v] & 1
            for u in range(pattern.order)
            for v in range(u + 1, pattern.order)
            if pattern.rows[u] >> v & 1
        )
    if isinstance(witness, MinorWitness):
        bs = witness.branch_sets
        if len(bs) != pattern.order:
            return False
        masks = []
        seen = 0
        for part in bs:
            if not part:
                return False
            mask = 0
            for v in part:
                if not 0 <= v < host.order:
                    return False
                mask |= 1 << v
            if mask & seen:
                return False
            seen |= mask
            if not mask_is_connected(host.rows, mask):
                return False
            masks.append(mask)
        for u in range(pattern.order):
            for v in range(u + 1, pattern.order):
                if pattern.rows[u] >> v & 1:
                    if not _neighborhood(host.rows, masks[u]) & masks[v]:
                        return False
        return True
    return False


def is_proper(host: SmallGraph, pattern: SmallGraph) -> bool:
    """A found minor is proper unless host and pattern coincide in order and size."""
    return pattern.order < host.order or pattern.size < host.size


def proper_ik_minor(g: SmallGraph, include_size_22: bool = False):
    """First catalog IK graph that is a proper minor of g, probing the fixed
    order K7, H8, F9, H9, K3,3,1,1, A9, B9 and then, on request, the
    22-edge graphs E9+e, Cousin12, Cousin41.

    Returns (name, MinorWitness) or None.
    """
    from .families import named_graph

    names = ["K7", "H8", "F9", "H9", "K3,3,1,1", "A9", "B9"]
    if include_size_22:
        names += ["E9+e", "Cousin12", "Cousin41"]
    for name in names:
        pattern = named_graph(name)
        if not is_proper(g, pattern):
            continue
        w = has_minor(g, pattern)
        if w is not None:
            return name, w
    return None
