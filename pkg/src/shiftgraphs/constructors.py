"""Generators for every graph family used in this artifact.

Acyclic tournaments, line digraphs with their bag decompositions, shift
graphs, Zykov graphs with a one-path acyclic orientation, the odd-girth
non-one-path gadget, and the girth-5 apex construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

from .core import (
    AcyclicDigraph,
    EdgeDir,
    GraphError,
    InternalInvariantError,
    Orientation,
    SizeCapExceeded,
    UndirectedGraph,
    underlying,
)

DEFAULT_SIZE_CAP = 10**6


@dataclass(frozen=True)
class BagDecomposition:
    """Bags of a line digraph: B(i) holds the out-arcs of the i-th vertex
    (1-based) of the parent's topological order.

    ``arcs[u]`` is the parent arc underlying line vertex u, and ``index[u]``
    the 1-based bag id of its tail.
    """

    parent: AcyclicDigraph
    bags: tuple[tuple[int, ...], ...]  # bags[i-1] = B(i), i in 1..n-1
    index: tuple[int, ...]  # line vertex id -> bag id
    arcs: tuple[tuple[int, int], ...]  # line vertex id -> parent arc


def acyclic_tournament(n: int) -> AcyclicDigraph:
    """Complete graph oriented along the identity order."""
    if n < 1:
        raise GraphError("tournament needs at least one vertex")
    arcs = tuple((i, j) for i in range(n) for j in range(i + 1, n))
    return AcyclicDigraph(n, arcs, tuple(range(n)))


def line_digraph(g: AcyclicDigraph) -> tuple[AcyclicDigraph, BagDecomposition]:
    """Line digraph of an acyclic digraph, plus its bag decomposition.

    Line vertices are the arcs of ``g``, ordered by the position of their tail
    in g's topological order (ties by arc), which makes the identity a
    topological order of the result.
    """
    pos = {v: i for i, v in enumerate(g.topo)}
    arcs_sorted = sorted(g.arcs, key=lambda arc: (pos[arc[0]], arc))
    arc_id = {arc: i for i, arc in enumerate(arcs_sorted)}
    line_arcs = []
    for (a, b) in arcs_sorted:
        for c in g.out_adjacency[b]:
            line_arcs.append((arc_id[(a, b)], arc_id[(b, c)]))
    m = len(arcs_sorted)
    labels = {
        i: f"({g.label(u)},{g.label(v)})" for i, (u, v) in enumerate(arcs_sorted)
    }
    line = AcyclicDigraph(m, tuple(sorted(line_arcs)), tuple(range(m)), labels)
    nbags = max(g.n - 1, 0)
    bag_lists: list[list[int]] = [[] for _ in range(nbags)]
    index = []
    for i, (u, v) in enumerate(arcs_sorted):
        bag = pos[u] + 1
        if bag > nbags:
            raise InternalInvariantError("out-arc from the last topological position")
        bag_lists[bag - 1].append(i)
        index.append(bag)
    bd = BagDecomposition(
        g, tuple(tuple(b) for b in bag_lists), tuple(index), tuple(arcs_sorted)
    )
    return line, bd


def structure_violations(line: AcyclicDigraph, bd: BagDecomposition) -> list[str]:
    """Check the five structural clauses of a bag decomposition.

    Returns human-readable violation messages; an empty list means every
    clause holds.  Clauses: (i) bags are independent, (ii) adjacency projects
    to parent adjacency with arcs pointing up in bag index, (iii) two
    higher-index neighbors of a vertex share a bag, (iv) a parent edge is
    carried by exactly one all-adjacent bag vertex, (v) two lower-index
    neighbors of a vertex are non-adjacent and adjacent to its whole bag.
    """
    g = bd.parent
    pos = {v: i for i, v in enumerate(g.topo)}
    sigma = g.topo
    lg = underlying(line)
    adj = lg.adjacency_sets
    arc_set = set(line.arcs)
    out: list[str] = []

    for i, bag in enumerate(bd.bags, start=1):
        for u, v in combinations(bag, 2):
            if v in adj[u]:
                out.append(f"(i) bag {i} vertices {u},{v} adjacent")

    gu = underlying(g)
    for u1, u2 in lg.edges:
        a = sigma[bd.index[u1] - 1]
        c = sigma[bd.index[u2] - 1]
        if not gu.has_edge(a, c):
            out.append(f"(ii) edge ({u1},{u2}) projects to non-edge ({a},{c})")
        lo, hi = (u1, u2) if bd.index[u1] < bd.index[u2] else (u2, u1)
        if (lo, hi) not in arc_set:
            out.append(f"(ii) arc between {u1},{u2} not directed up the index")

    for u in range(line.n):
        highs = [w for w in adj[u] if bd.index[w] >= bd.index[u]]
        if len({bd.index[w] for w in highs}) > 1:
            out.append(f"(iii) vertex {u} has higher-index neighbors in two bags")

    nbags = len(bd.bags)
    for i in range(1, nbags + 1):
        vi = sigma[i - 1]
        for j in range(i + 1, nbags + 1):
            vj = sigma[j - 1]
            if not gu.has_edge(vi, vj):
                continue
            bag_j = bd.bags[j - 1]
            if not bag_j:
                continue
            touching = [
                u for u in bd.bags[i - 1] if any(w in adj[u] for w in bag_j)
            ]
            full = [u for u in touching if all(w in adj[u] for w in bag_j)]
            if len(touching) != 1 or len(full) != 1:
                out.append(f"(iv) bags {i},{j}: touching={touching} full={full}")

    for u1 in range(line.n):
        lows = [w for w in adj[u1] if bd.index[w] < bd.index[u1]]
        bag = bd.bags[bd.index[u1] - 1]
        for u2, u3 in combinations(lows, 2):
            if u3 in adj[u2]:
                out.append(f"(v) lower neighbors {u2},{u3} of {u1} adjacent")
            for w in (u2, u3):
                if not all(x in adj[w] for x in bag):
                    out.append(f"(v) vertex {w} misses part of bag {bd.index[u1]}")
    return out


def _iterated_tuples(n: int, times: int) -> tuple[AcyclicDigraph, list[tuple[int, ...]]]:
    """Iterate the line digraph of the n-tournament, tracking the 1-based
    integer tuple each vertex corresponds to."""
    d = acyclic_tournament(n)
    tuples: list[tuple[int, ...]] = [(i + 1,) for i in range(n)]
    for _ in range(times):
        d, bd = line_digraph(d)
        tuples = [tuples[a] + (tuples[b][-1],) for a, b in bd.arcs]
    return d, tuples


def shift_graph(n: int, k: int = 2) -> UndirectedGraph:
    """Shift graph on increasing k-tuples of {1..n}.

    Built from the tuple definition, then checked to coincide with the
    (k-1)-fold iterated line digraph of the acyclic tournament under the
    tuple relabeling.
    """
    if k == 2:
        if n < 3:
            raise GraphError("need n >= 3 for pair shift graphs")
    elif k < 2 or n <= 2 * k:
        raise GraphError("need n > 2k > 2")
    verts = sorted(combinations(range(1, n + 1), k))
    vid = {t: i for i, t in enumerate(verts)}
    edges = []
    for t in verts:
        shifted = t[1:]
        for last in range(t[-1] + 1, n + 1):
            edges.append((vid[t], vid[shifted + (last,)]))
    labels = {i: "(" + ",".join(map(str, t)) + ")" for i, t in enumerate(verts)}
    g = UndirectedGraph.build(len(verts), edges, labels)

    lined, tuples = _iterated_tuples(n, k - 1)
    relabeled = sorted(
        tuple(sorted((vid[tuples[u]], vid[tuples[v]]))) for u, v in lined.arcs
    )
    if len(set(tuples)) != len(tuples) or tuple(relabeled) != g.edges:
        raise InternalInvariantError(
            "tuple shift graph disagrees with the iterated line digraph"
        )
    return g


def iterate_line_digraph(
    g: AcyclicDigraph, times: int, cap: int = DEFAULT_SIZE_CAP
) -> AcyclicDigraph:
    """Apply the line digraph ``times`` times; aborts past the size cap."""
    if times < 0:
        raise GraphError("iteration count must be non-negative")
    for _ in range(times):
        if len(g.arcs) > cap:
            raise SizeCapExceeded(
                f"iterated line digraph would have {len(g.arcs)} vertices (cap {cap})"
            )
        g, _ = line_digraph(g)
    return g


def induced_line_subdigraph(
    t_prime: AcyclicDigraph, n: int
) -> tuple[AcyclicDigraph, dict[int, int]]:
    """Line digraph of a tournament subdigraph, with its embedding into the
    pair shift graph on n symbols.

    Returns the line digraph and the injection from its vertex ids to the
    vertex ids of ``shift_graph(n, 2)``; the image is verified to induce
    exactly the line graph's edges.
    """
    if t_prime.n > n:
        raise GraphError("subdigraph has more vertices than the host tournament")
    for u, v in t_prime.arcs:
        if u >= v:
            raise GraphError(f"arc ({u}, {v}) violates the tournament order")
    line, bd = line_digraph(t_prime)
    host = shift_graph(n, 2)
    pairs = sorted(combinations(range(1, n + 1), 2))
    host_id = {t: i for i, t in enumerate(pairs)}
    injection = {
        i: host_id[(u + 1, v + 1)] for i, (u, v) in enumerate(bd.arcs)
    }
    image = set(injection.values())
    induced_edges = {
        (u, v) for u, v in host.edges if u in image and v in image
    }
    mapped = {
        tuple(sorted((injection[u], injection[v]))) for u, v in line.arcs
    }
    if mapped != induced_edges:
        raise InternalInvariantError("line digraph image is not an induced subgraph")
    return line, injection


def zykov(n: int, cap: int = DEFAULT_SIZE_CAP) -> tuple[UndirectedGraph, Orientation]:
    """The n-th Zykov graph with a one-path acyclic orientation.

    Standard recursion: disjoint copies of the first n-1 graphs plus one apex
    per transversal, adjacent to the chosen vertex of each copy.  Every apex
    edge is oriented into the apex; the resulting orientation is verified to
    be acyclic with at most one directed path between any vertex pair.
    """
    if n < 1:
        raise GraphError("Zykov index must be positive")
    sizes: list[int] = []
    graphs: list[tuple[int, list[tuple[int, int]], dict[int, str]]] = []
    for m in range(1, n + 1):
        if m == 1:
            graphs.append((1, [], {0: "v"}))
            sizes.append(1)
            continue
        offset = 0
        arcs: list[tuple[int, int]] = []
        labels: dict[int, str] = {}
        offsets = []
        for j in range(m - 1):
            sz, sub_arcs, sub_labels = graphs[j]
            offsets.append(offset)
            arcs.extend((u + offset, v + offset) for u, v in sub_arcs)
            for v, lab in sub_labels.items():
                labels[v + offset] = f"z{j + 1}.{lab}"
            offset += sz
        napex = 1
        for sz in sizes:
            napex *= sz
        total = offset + napex
        if total > cap:
            raise SizeCapExceeded(f"Zykov graph would have {total} vertices (cap {cap})")
        for t, choice in enumerate(product(*(range(sz) for sz in sizes[: m - 1]))):
            apex = offset + t
            labels[apex] = f"apex{t}"
            for j, c in enumerate(choice):
                arcs.append((offsets[j] + c, apex))
        graphs.append((total, arcs, labels))
        sizes.append(total)

    total, arcs, labels = graphs[n - 1]
    g = UndirectedGraph.build(total, [tuple(sorted(a)) for a in arcs], labels)
    arc_set = set(arcs)
    dirs = tuple(
        EdgeDir.FORWARD if (u, v) in arc_set else EdgeDir.BACKWARD
        for u, v in g.edges
    )
    orientation = Orientation(g, dirs)

    from .aop import verify_aop

    verdict = verify_aop(orientation)
    if not verdict.ok:
        raise InternalInvariantError("Zykov orientation failed the one-path check")
    return g, orientation


def odd_girth_gadget(g: int) -> UndirectedGraph:
    """Cycle of odd length g plus one pendant-pair vertex per cycle vertex.

    Vertex i' (id g + i) is adjacent to the two cycle neighbors of vertex i.
    The result has odd-girth exactly g and admits no one-path acyclic
    orientation.
    """
    if g < 5 or g % 2 == 0:
        raise GraphError("gadget parameter must be odd and at least 5")
    edges = []
    labels = {}
    for i in range(g):
        edges.append((i, (i + 1) % g))
        labels[i] = f"u{i + 1}"
        labels[g + i] = f"u'{i + 1}"
        edges.append((g + i, (i - 1) % g))
        edges.append((g + i, (i + 1) % g))
    return UndirectedGraph.build(2 * g, [tuple(sorted(e)) for e in edges], labels)


def brinkmann_graph() -> UndirectedGraph:
    """The Brinkmann graph: 21 vertices, 4-regular, girth 5, chromatic number 4.

    Built from three heptagons a_i (0-6), b_i (7-13), c_i (14-20), indices
    mod 7: a_i ~ a_{i+1}, c_i ~ c_{i+2}, a_i ~ b_i, a_i ~ b_{i+3},
    b_i ~ c_i, b_i ~ c_{i+1}.
    """
    edges = set()

    def add(u: int, v: int) -> None:
        edges.add((min(u, v), max(u, v)))

    for i in range(7):
        add(i, (i + 1) % 7)
        add(14 + i, 14 + (i + 2) % 7)
        add(i, 7 + i)
        add(i, 7 + (i + 3) % 7)
        add(7 + i, 14 + i)
        add(7 + i, 14 + (i + 1) % 7)
    return UndirectedGraph.build(21, sorted(edges))


def _three_edge_paths(g: UndirectedGraph) -> list[tuple[int, int, int, int]]:
    """All paths with 3 edges (4 distinct vertices), canonically oriented."""
    paths = set()
    for b, c in g.edges:
        for (x, y) in ((b, c), (c, b)):
            for a in g.adjacency[x]:
                if a == y:
                    continue
                for d in g.adjacency[y]:
                    if d in (x, a):
                        continue
                    p = (a, x, y, d)
                    paths.add(min(p, p[::-1]))
    return sorted(paths)


def girth5_non_aop(g0: UndirectedGraph | None = None) -> UndirectedGraph:
    """Extend a 4-chromatic girth-5 graph so every 3-edge path of the seed
    lies on a 5-cycle, by adding degree-2 apex vertices.

    Any acyclic orientation of the result then contains a 5-cycle carrying a
    directed 3-edge path, which forces two disjoint directed paths between a
    vertex pair; so the output has girth 5 and no one-path orientation.
    """
    from .invariants import chromatic_number, girth

    if g0 is None:
        g0 = brinkmann_graph()
    if girth(g0) != 5:
        raise GraphError("seed graph must have girth exactly 5")
    chi, _ = chromatic_number(g0)
    if chi < 4:
        raise GraphError("seed graph must have chromatic number at least 4")

    n = g0.n
    edges = list(g0.edges)
    adj: list[set[int]] = [set(s) for s in g0.adjacency_sets]
    for (a, b, c, d) in _three_edge_paths(g0):
        covered = any(
            x not in (b, c) for x in adj[a] & adj[d]
        )
        if not covered:
            apex = n
            n += 1
            adj.append({a, d})
            adj[a].add(apex)
            adj[d].add(apex)
            edges.append((a, apex))
            edges.append((d, apex))
    out = UndirectedGraph.build(n, [tuple(sorted(e)) for e in edges])

    if girth(out) != 5:
        raise InternalInvariantError("apex construction changed the girth")
    out_adj = out.adjacency_sets
    for (a, b, c, d) in _three_edge_paths(g0):
        if not any(x not in (b, c) for x in out_adj[a] & out_adj[d]):
            raise InternalInvariantError("a seed 3-edge path is still uncovered")
    return out
