"""Structural property checkers: girth, odd-girth, clique number, degeneracy
and exact chromatic number.

All checkers are deterministic; ties break toward the smallest vertex id.
Girth of a forest is reported as ``math.inf`` (not 0) so that every lower
bound comparison stays monotone; the CLI prints it as "inf".
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .core import GraphError, SizeCapExceeded, UndirectedGraph
from .coloring import Coloring


def girth(g: UndirectedGraph) -> int | float:
    """Length of a shortest cycle, via BFS from every vertex.

    For each root, every non-tree edge (u, v) seen at BFS time witnesses a
    closed walk of length dist[u] + dist[v] + 1 through the root; the minimum
    over all roots is the exact girth.
    """
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v and parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def odd_girth(g: UndirectedGraph) -> int | float:
    """Shortest odd cycle length via BFS on the bipartite double cover.

    The distance from (v, even) to (v, odd) in the double cover equals the
    shortest odd closed walk through v, and a shortest odd closed walk is an
    odd cycle.  Infinite iff the graph is bipartite.
    """
    best = math.inf
    for root in range(g.n):
        # dist[v][p]: shortest walk root -> v of parity p.
        dist = [[-1, -1] for _ in range(g.n)]
        dist[root][0] = 0
        queue = deque([(root, 0)])
        while queue:
            u, p = queue.popleft()
            d = dist[u][p]
            for v in g.adjacency[u]:
                if dist[v][1 - p] == -1:
                    dist[v][1 - p] = d + 1
                    queue.append((v, 1 - p))
        if dist[root][1] != -1:
            best = min(best, dist[root][1])
    return best


def extract_odd_cycle(g: UndirectedGraph, walk: Sequence[int]) -> list[int]:
    """Extract a simple odd cycle from a closed odd walk.

    Splits the walk at the first repeated vertex and recurses into the odd
    half; a repetition-free closed odd walk is itself an odd cycle.
    """
    walk = list(walk)
    if len(walk) < 2 or walk[0] != walk[-1]:
        raise GraphError("walk is not closed")
    length = len(walk) - 1
    if length % 2 == 0:
        raise GraphError("walk has even length")
    for a, b in zip(walk, walk[1:]):
        if not g.has_edge(a, b):
            raise GraphError(f"({a}, {b}) is not an edge of the graph")
    return _odd_cycle_of(g, walk)


def _odd_cycle_of(g: UndirectedGraph, walk: list[int]) -> list[int]:
    last = len(walk) - 1
    split = None
    for j in range(1, last):
        for i in range(j):
            if walk[i] == walk[j]:
                split = (i, j)
                break
        if split:
            break
    if split is None:
        return walk[:-1]
    i, j = split
    inner = walk[i : j + 1]
    outer = walk[: i + 1] + walk[j + 1 :]
    odd_half = inner if (j - i) % 2 == 1 else outer
    return _odd_cycle_of(g, odd_half)


def clique_number(g: UndirectedGraph) -> int:
    """Exact clique number via branch and bound with greedy coloring bounds."""
    if g.n == 0:
        return 0
    adj = g.adjacency_sets
    order = sorted(range(g.n), key=lambda v: (-len(adj[v]), v))
    best = [1]

    def expand(size: int, cands: list[int]) -> None:
        # Greedy-color the candidates; a vertex whose color id is c can
        # extend the current clique to at most size + c + 1 vertices.
        classes: list[list[int]] = []
        color_of: dict[int, int] = {}
        for v in cands:
            for ci, cls in enumerate(classes):
                if all(v not in adj[w] for w in cls):
                    cls.append(v)
                    color_of[v] = ci
                    break
            else:
                classes.append([v])
                color_of[v] = len(classes) - 1
        ordered = sorted(cands, key=lambda v: (color_of[v], v))
        while ordered:
            v = ordered.pop()
            if size + color_of[v] + 1 <= best[0]:
                return
            new_cands = [w for w in ordered if w in adj[v]]
            if size + 1 > best[0]:
                best[0] = size + 1
            if new_cands:
                expand(size + 1, new_cands)

    expand(0, order)
    return best[0]


@dataclass(frozen=True)
class DegeneracyCertificate:
    order: tuple[int, ...]
    back_degrees: tuple[int, ...]  # aligned with order
    degeneracy: int


def degeneracy(g: UndirectedGraph) -> DegeneracyCertificate:
    """Repeated minimum-degree removal (ties to smallest id).

    The returned order is the reverse removal order, so the back-degree of a
    vertex equals its degree at removal time and the maximum back-degree is
    the exact degeneracy.
    """
    deg = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    removal: list[tuple[int, int]] = []
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        removal.append((v, deg[v]))
        alive.remove(v)
        for w in g.adjacency[v]:
            if w in alive:
                deg[w] -= 1
    order = tuple(v for v, _ in reversed(removal))
    backs = tuple(d for _, d in reversed(removal))
    return DegeneracyCertificate(order, backs, max(backs, default=0))


def back_degree_certificate(g: UndirectedGraph, order: Sequence[int]) -> DegeneracyCertificate:
    """Back-degrees along a prescribed vertex order (an upper-bound witness)."""
    order = tuple(order)
    if sorted(order) != list(range(g.n)):
        raise GraphError("order is not a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    backs = tuple(
        sum(1 for w in g.adjacency[v] if pos[w] < pos[v]) for v in order
    )
    return DegeneracyCertificate(order, backs, max(backs, default=0))


def chromatic_number(g: UndirectedGraph, cap: int = 100) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness coloring.

    Iterative deepening from the clique lower bound; each level runs a
    DSATUR-ordered backtracking t-colorability test with symmetry breaking
    (the first colored vertex is pinned to color 0 and new colors are
    introduced in increasing order).
    """
    if g.n > cap:
        raise SizeCapExceeded(f"chromatic_number cap {cap} exceeded (n={g.n})")
    if g.n == 0:
        return 0, Coloring(g, (), 0)
    if not g.edges:
        return 1, Coloring(g, (0,) * g.n, 1)
    lower = clique_number(g)
    t = max(lower, 1)
    while True:
        witness = _try_color(g, t)
        if witness is not None:
            return t, Coloring(g, tuple(witness), t)
        t += 1


def _try_color(g: UndirectedGraph, t: int) -> list[int] | None:
    adj = g.adjacency
    colors = [-1] * g.n
    neighbor_colors: list[set[int]] = [set() for _ in range(g.n)]

    def pick() -> int | None:
        best_v = None
        best_key = None
        for v in range(g.n):
            if colors[v] != -1:
                continue
            key = (-len(neighbor_colors[v]), -len(adj[v]), v)
            if best_key is None or key < best_key:
                best_key, best_v = key, v
        return best_v

    def backtrack(max_used: int) -> bool:
        v = pick()
        if v is None:
            return True
        limit = min(max_used + 1, t - 1)
        for c in range(limit + 1):
            if c in neighbor_colors[v]:
                continue
            colors[v] = c
            added = [w for w in adj[v] if colors[w] == -1 and c not in neighbor_colors[w]]
            for w in added:
                neighbor_colors[w].add(c)
            if backtrack(max(max_used, c)):
                return True
            for w in added:
                neighbor_colors[w].discard(c)
            colors[v] = -1
        return False

    return colors if backtrack(-1) else None
