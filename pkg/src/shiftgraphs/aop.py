"""Acyclic one-path orientations: verification and exhaustive decision.

A graph has the one-path property if it can be oriented acyclically with at
most one directed path between any ordered vertex pair.  ``verify_aop``
checks a given total orientation; ``decide_aop`` searches over orientations
with monotone pruning (a directed cycle or a doubled path in a partial
orientation survives in every extension).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product

from .core import (
    EdgeDir,
    GraphError,
    InternalInvariantError,
    MANY,
    Orientation,
    PathCountMatrix,
    UndirectedGraph,
    path_count_matrix,
    topological_order,
)

DEFAULT_NODE_BUDGET = 10**7


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    cycle: tuple[int, ...] | None = None
    pair: tuple[int, int] | None = None
    paths: tuple[tuple[int, ...], tuple[int, ...]] | None = None


@dataclass
class SearchStats:
    nodes: int = 0
    prunes_cycle: int = 0
    prunes_double_path: int = 0
    seconds: float = 0.0


@dataclass(frozen=True)
class AopVerdict:
    status: str  # "has_aop" | "no_aop" | "timeout"
    witness: Orientation | None
    stats: SearchStats


def verify_aop(o: Orientation) -> VerifyResult:
    """Check a total orientation for acyclicity and path uniqueness.

    On failure the result carries either a directed cycle or a vertex pair
    with two distinct directed paths between them.
    """
    if not o.total:
        raise GraphError("orientation is not total")
    arcs = o.arcs()
    order, cycle = topological_order(o.base.n, arcs)
    if cycle is not None:
        return VerifyResult(False, cycle=tuple(cycle))
    out: list[list[int]] = [[] for _ in range(o.base.n)]
    for u, v in arcs:
        out[u].append(v)
    counts = _saturating_counts(o.base.n, arcs, order)
    for u in range(o.base.n):
        for v in range(o.base.n):
            if counts[u][v] >= MANY:
                p1, p2 = _two_paths(out, u, v)
                return VerifyResult(False, pair=(u, v), paths=(tuple(p1), tuple(p2)))
    return VerifyResult(True)


def _saturating_counts(n: int, arcs, order) -> list[list[int]]:
    inc: list[list[int]] = [[] for _ in range(n)]
    for u, v in arcs:
        inc[v].append(u)
    counts = [[0] * n for _ in range(n)]
    for v in order:
        row_v = [counts[u][v] for u in range(n)]
        for w in inc[v]:
            for u in range(n):
                if u == v:
                    continue
                row_v[u] = min(MANY, row_v[u] + counts[u][w] + (1 if w == u else 0))
        for u in range(n):
            counts[u][v] = row_v[u]
    return counts


def _two_paths(out: list[list[int]], s: int, t: int) -> tuple[list[int], list[int]]:
    """Enumerate directed paths s -> t until two are found."""
    found: list[list[int]] = []

    def dfs(v: int, path: list[int]) -> bool:
        if v == t:
            found.append(path[:])
            return len(found) >= 2
        for w in sorted(out[v]):
            path.append(w)
            if dfs(w, path):
                return True
            path.pop()
        return False

    dfs(s, [s])
    if len(found) < 2:
        raise InternalInvariantError("saturated count disagreed with enumeration")
    return found[0], found[1]


def path_counts(o: Orientation) -> PathCountMatrix:
    """Saturated directed path counts of a total acyclic orientation."""
    return path_count_matrix(o.to_digraph())


def _partial_violation(n: int, arcs: list[tuple[int, int]]) -> str | None:
    """Detect a directed cycle or a doubled path in an oriented subgraph.

    Bitmask dynamic programming over the topological order: one[v] holds the
    sources with at least one path to v, many[v] those with at least two.
    """
    order, cycle = topological_order(n, arcs)
    if cycle is not None:
        return "cycle"
    inc: list[list[int]] = [[] for _ in range(n)]
    for u, v in arcs:
        inc[v].append(u)
    one = [0] * n
    many = [0] * n
    for v in order:
        acc = 0
        macc = 0
        for w in inc[v]:
            c = one[w] | (1 << w)
            macc |= many[w] | (acc & c)
            acc |= c
        one[v] = acc
        many[v] = macc
        if macc:
            return "double"
    return None


def decide_aop(
    g: UndirectedGraph,
    max_nodes: int = DEFAULT_NODE_BUDGET,
    time_limit: float | None = None,
    threads: int = 1,
) -> AopVerdict:
    """Backtracking search for a one-path acyclic orientation.

    Edges are branched in decreasing endpoint-degree-sum order (ties by the
    canonical edge order); the first branched edge is fixed forward, since
    reversing every edge preserves both pruning conditions.  The verdict is
    "timeout" once the node or time budget is exhausted.
    """
    if threads < 1:
        raise GraphError("thread count must be positive")
    stats = SearchStats()
    start = time.monotonic()
    m = len(g.edges)
    if m == 0:
        witness = Orientation(g, ())
        return AopVerdict("has_aop", witness, stats)

    tri = _find_triangle(g)
    if tri is not None:
        stats.seconds = time.monotonic() - start
        return AopVerdict("no_aop", None, stats)

    order = sorted(
        range(m),
        key=lambda i: (-(g.degree(g.edges[i][0]) + g.degree(g.edges[i][1])), g.edges[i]),
    )
    assigned: list[tuple[int, int]] = []
    dirs: list[EdgeDir] = [EdgeDir.UNSET] * m
    out_of_budget = False

    def over_budget() -> bool:
        if stats.nodes >= max_nodes:
            return True
        if time_limit is not None and time.monotonic() - start > time_limit:
            return True
        return False

    def search(depth: int) -> Orientation | None:
        nonlocal out_of_budget
        if depth == m:
            witness = Orientation(g, tuple(dirs))
            if not verify_aop(witness).ok:
                raise InternalInvariantError("search produced a non-verifying witness")
            return witness
        i = order[depth]
        u, v = g.edges[i]
        choices = (EdgeDir.FORWARD,) if depth == 0 else (EdgeDir.FORWARD, EdgeDir.BACKWARD)
        for d in choices:
            if over_budget():
                out_of_budget = True
                return None
            stats.nodes += 1
            arc = (u, v) if d is EdgeDir.FORWARD else (v, u)
            dirs[i] = d
            assigned.append(arc)
            bad = _partial_violation(g.n, assigned)
            if bad == "cycle":
                stats.prunes_cycle += 1
            elif bad == "double":
                stats.prunes_double_path += 1
            else:
                got = search(depth + 1)
                if got is not None:
                    return got
            assigned.pop()
            dirs[i] = EdgeDir.UNSET
            if out_of_budget:
                return None
        return None

    witness = search(0)
    stats.seconds = time.monotonic() - start
    if witness is not None:
        return AopVerdict("has_aop", witness, stats)
    if out_of_budget:
        return AopVerdict("timeout", None, stats)
    return AopVerdict("no_aop", None, stats)


def _find_triangle(g: UndirectedGraph) -> tuple[int, int, int] | None:
    adj = g.adjacency_sets
    for u, v in g.edges:
        common = adj[u] & adj[v]
        if common:
            return (u, v, min(common))
    return None


def brute_force_aop(g: UndirectedGraph) -> Orientation | None:
    """Oracle: try all 2^|E| orientations, return the first verifying one."""
    m = len(g.edges)
    for bits in product((EdgeDir.FORWARD, EdgeDir.BACKWARD), repeat=m):
        o = Orientation(g, bits)
        if verify_aop(o).ok:
            return o
    return None


def cycle_orientation_lemma_check(k: int) -> bool:
    """Exhaustively test the cycle-orientation dichotomy on a k-cycle.

    For every orientation containing a directed path of k-2 edges: the
    orientation is acyclic iff some vertex pair has two internally disjoint
    directed paths between them.
    """
    if k < 4:
        raise GraphError("cycle length must be at least 4")
    edges = [(i, (i + 1) % k) for i in range(k)]
    for bits in product((0, 1), repeat=k):
        arcs = [
            (u, v) if b == 0 else (v, u) for (u, v), b in zip(edges, bits)
        ]
        out: list[list[int]] = [[] for _ in range(k)]
        for u, v in arcs:
            out[u].append(v)
        if _longest_directed_path(out, k) < k - 2:
            continue
        _, cycle = topological_order(k, arcs)
        acyclic = cycle is None
        if acyclic != _has_two_disjoint_paths(out, k):
            return False
    return True


def _longest_directed_path(out: list[list[int]], n: int) -> int:
    best = 0

    def dfs(v: int, seen: set[int], length: int) -> None:
        nonlocal best
        best = max(best, length)
        for w in out[v]:
            if w not in seen:
                seen.add(w)
                dfs(w, seen, length + 1)
                seen.remove(w)

    for s in range(n):
        dfs(s, {s}, 0)
    return best


def _has_two_disjoint_paths(out: list[list[int]], n: int) -> bool:
    for s in range(n):
        for t in range(n):
            if s == t:
                continue
            paths: list[list[int]] = []

            def dfs(v: int, path: list[int]) -> None:
                if v == t:
                    paths.append(path[:])
                    return
                for w in out[v]:
                    if w not in path:
                        dfs(w, path + [w])

            dfs(s, [s])
            for i in range(len(paths)):
                for j in range(i + 1, len(paths)):
                    if set(paths[i][1:-1]).isdisjoint(paths[j][1:-1]):
                        return True
    return False


@dataclass(frozen=True)
class PipelineReport:
    vertices: int
    edges: int
    aop_ok: bool
    odd_girth: int | float
    chromatic: int | None


def aop_pipeline_check(n: int, g: int, chi_cap: int = 100) -> PipelineReport:
    """Iterate the line digraph over an oriented Zykov graph and verify that
    the natural orientation stays one-path with odd-girth at least 2g + 3."""
    from . import invariants
    from .constructors import line_digraph, zykov
    from .core import orientation_from_digraph, underlying

    base, orientation = zykov(n)
    d = orientation.to_digraph()
    for _ in range(g):
        d, _ = line_digraph(d)
    o = orientation_from_digraph(d)
    res = verify_aop(o)
    if not res.ok:
        raise InternalInvariantError("iterated line digraph lost the one-path property")
    und = underlying(d)
    og = invariants.odd_girth(und)
    if og < 2 * g + 3:
        raise InternalInvariantError(f"odd-girth {og} below bound {2 * g + 3}")
    chi = None
    if und.n <= chi_cap:
        chi, _ = invariants.chromatic_number(und, cap=chi_cap)
    return PipelineReport(und.n, len(und.edges), res.ok, og, chi)
