import random

import pytest

from shiftgraphs.core import AcyclicDigraph, UndirectedGraph


def random_graph(rng: random.Random, n: int, p: float) -> UndirectedGraph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return UndirectedGraph.build(n, edges)


def random_dag(rng: random.Random, n: int, p: float) -> AcyclicDigraph:
    perm = list(range(n))
    rng.shuffle(perm)
    arcs = [
        (perm[i], perm[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return AcyclicDigraph.build(n, arcs)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(12345)
