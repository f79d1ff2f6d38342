import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from phitsp import EdgeMultiSet, Interface, PhiInstance, WeightedGraph


def unit_graph(n, pairs):
    return WeightedGraph(n, [(u, v, 1) for u, v in pairs])


@pytest.fixture
def k4():
    return unit_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


@pytest.fixture
def c5():
    return unit_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


@pytest.fixture
def path4():
    return unit_graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def path4_instance(path4):
    return PhiInstance(path4, Interface.for_path(0, 3))


@pytest.fixture
def k4_path_instance(k4):
    return PhiInstance(k4, Interface.for_path(0, 1))


def random_connected_graph(rng: random.Random, n: int, m: int | None = None, max_len: int = 9) -> WeightedGraph:
    """Random connected graph; spanning tree plus extra edges."""
    max_m = n * (n - 1) // 2
    if m is None:
        m = rng.randint(n - 1, max_m)
    m = max(n - 1, min(m, max_m))
    order = list(range(n))
    rng.shuffle(order)
    chosen = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        chosen.add((min(u, v), max(u, v)))
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pool)
    for pair in pool:
        if len(chosen) >= m:
            break
        chosen.add(pair)
    return WeightedGraph(n, [(u, v, rng.randint(1, max_len)) for u, v in sorted(chosen)])


def random_multiset(rng: random.Random, G: WeightedGraph, max_mult: int = 2) -> EdgeMultiSet:
    counts = {}
    for eid in range(G.m):
        c = rng.randint(0, max_mult)
        if c:
            counts[eid] = c
    return EdgeMultiSet(counts)


def random_interface(rng: random.Random, n: int) -> Interface:
    size = rng.randint(0, min(4, n))
    iverts = rng.sample(range(n), size)
    tsize = rng.choice([s for s in range(0, size + 1, 2)])
    tverts = rng.sample(iverts, tsize) if tsize else []
    if not iverts:
        return Interface.empty()
    nparts = rng.randint(1, len(iverts))
    labels = list(range(nparts)) + [rng.randrange(nparts) for _ in range(len(iverts) - nparts)]
    rng.shuffle(labels)
    grouped = {}
    for v, lab in zip(iverts, labels):
        grouped.setdefault(lab, []).append(v)
    return Interface(iverts, tverts, grouped.values())
