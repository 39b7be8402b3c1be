import random

import pytest

from mmik9.enumeration import graphs_of_size
from mmik9.families import catalog
from mmik9.graphs import SmallGraph

SEED = 20260814


@pytest.fixture(scope="session")
def warm_catalog():
    return catalog()


@pytest.fixture(scope="session")
def all_graphs_by_order():
    """Every unlabeled graph of order 1..6, grouped by order."""
    out = {}
    for n in range(1, 7):
        bucket = []
        for m in range(n * (n - 1) // 2 + 1):
            for rows in graphs_of_size(n, m):
                bucket.append(SmallGraph(n, rows))
        out[n] = bucket
    return out


@pytest.fixture(scope="session")
def rng():
    return random.Random(SEED)


def random_graph(rand, n=None, p=None) -> SmallGraph:
    if n is None:
        n = rand.randint(1, 12)
    if p is None:
        p = rand.random()
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rand.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return SmallGraph(n, tuple(rows))
