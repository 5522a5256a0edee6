import math
from itertools import product

import pytest

from shiftgraphs.core import (
    AcyclicDigraph,
    DirectedCycleError,
    EdgeDir,
    GraphError,
    MANY,
    Orientation,
    UndirectedGraph,
    connected_components,
    graph_from_json,
    orientation_from_digraph,
    path_count_matrix,
    to_dot,
    to_json,
    topological_order,
    underlying,
)

from conftest import random_dag


class TestUndirectedGraph:
    def test_canonical_edge_order(self):
        g = UndirectedGraph.build(4, [(3, 1), (0, 2), (2, 1)])
        assert g.edges == ((0, 2), (1, 2), (1, 3))

    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            UndirectedGraph.build(3, [(1, 1)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(GraphError):
            UndirectedGraph.build(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            UndirectedGraph.build(2, [(0, 2)])

    def test_adjacency(self):
        g = UndirectedGraph.build(4, [(0, 1), (0, 2), (2, 3)])
        assert g.adjacency == ((1, 2), (0,), (0, 3), (2,))
        assert g.degree(0) == 2
        assert g.has_edge(2, 3) and not g.has_edge(1, 3)

    def test_induced(self):
        g = UndirectedGraph.build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
        sub, remap = g.induced([0, 1, 4])
        assert sub.n == 3
        assert sub.edges == ((0, 1), (0, 2))
        assert remap == {0: 0, 1: 1, 4: 2}


class TestAcyclicDigraph:
    def test_rejects_cycle(self):
        with pytest.raises(DirectedCycleError):
            AcyclicDigraph.build(3, [(0, 1), (1, 2), (2, 0)])

    def test_rejects_antiparallel_pair(self):
        with pytest.raises(GraphError):
            AcyclicDigraph.build(3, [(0, 1), (1, 0), (1, 2)])

    def test_topo_respects_arcs(self):
        d = AcyclicDigraph.build(4, [(2, 0), (0, 3), (3, 1)])
        pos = {v: i for i, v in enumerate(d.topo)}
        for u, v in d.arcs:
            assert pos[u] < pos[v]

    def test_equality_ignores_topo(self):
        a = AcyclicDigraph(3, ((0, 2),), (0, 1, 2))
        b = AcyclicDigraph(3, ((0, 2),), (1, 0, 2))
        assert a == b


class TestTopologicalOrder:
    def test_min_id_tie_break(self):
        order, cycle = topological_order(4, [(3, 1)])
        assert cycle is None
        assert order == [0, 2, 3, 1]

    def test_cycle_witness_is_a_cycle(self):
        order, cycle = topological_order(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
        assert order is None
        assert sorted(cycle) == [0, 1, 2]

    def test_exhaustive_small_digraphs(self):
        # All digraphs on 4 vertices with one arc per pair: the witness,
        # when present, must be a genuine directed cycle.
        pairs = [(u, v) for u in range(4) for v in range(u + 1, 4)]
        for choice in product((0, 1, None), repeat=len(pairs)):
            arcs = [
                (u, v) if b == 0 else (v, u)
                for (u, v), b in zip(pairs, choice)
                if b is not None
            ]
            order, cycle = topological_order(4, arcs)
            arc_set = set(arcs)
            if order is not None:
                pos = {v: i for i, v in enumerate(order)}
                assert all(pos[u] < pos[v] for u, v in arcs)
            else:
                assert len(cycle) == len(set(cycle)) >= 2
                for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                    assert (a, b) in arc_set


class TestOrientation:
    def test_arcs_and_digraph(self):
        g = UndirectedGraph.build(3, [(0, 1), (1, 2)])
        o = Orientation(g, (EdgeDir.BACKWARD, EdgeDir.FORWARD))
        assert o.total
        assert o.arcs() == [(1, 0), (1, 2)]
        assert o.to_digraph().arcs == ((1, 0), (1, 2))

    def test_partial_orientation(self):
        g = UndirectedGraph.build(3, [(0, 1), (1, 2)])
        o = Orientation(g, (EdgeDir.UNSET, EdgeDir.FORWARD))
        assert not o.total
        assert o.arcs() == [(1, 2)]
        with pytest.raises(GraphError):
            o.to_digraph()

    def test_roundtrip_with_digraph(self):
        d = AcyclicDigraph.build(4, [(2, 0), (0, 3), (3, 1), (2, 3)])
        o = orientation_from_digraph(d)
        assert sorted(o.arcs()) == sorted(d.arcs)


class TestPathCounts:
    def test_diamond_counts_two(self):
        d = AcyclicDigraph.build(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        m = path_count_matrix(d)
        assert m[0, 3] == MANY
        assert m[0, 1] == 1
        assert m[3, 0] == 0

    def test_counts_saturate(self):
        # Chain of diamonds: true count 4, saturated to MANY.
        d = AcyclicDigraph.build(
            7, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6)]
        )
        assert path_count_matrix(d)[0, 6] == MANY

    def test_matches_enumeration(self, rng):
        for _ in range(50):
            d = random_dag(rng, rng.randint(2, 6), 0.5)
            m = path_count_matrix(d)
            out = d.out_adjacency
            for s in range(d.n):
                for t in range(d.n):
                    count = 0
                    stack = [s]

                    def dfs(v):
                        nonlocal count
                        if v == t and len(stack) > 1:
                            count += 1
                            return
                        for w in out[v]:
                            stack.append(w)
                            dfs(w)
                            stack.pop()

                    dfs(s)
                    assert m[s, t] == min(count, MANY)


class TestJson:
    def test_roundtrip_undirected(self):
        g = UndirectedGraph.build(3, [(0, 2), (1, 2)], {0: "a"})
        assert graph_from_json(to_json(g)) == g

    def test_roundtrip_directed(self):
        d = AcyclicDigraph.build(3, [(2, 0), (2, 1)])
        assert graph_from_json(to_json(d)) == d

    def test_exact_bytes(self):
        g = UndirectedGraph.build(3, [(0, 2), (1, 2)])
        assert to_json(g) == '{"n": 3, "directed": false, "edges": [[0, 2], [1, 2]]}'
        d = AcyclicDigraph.build(2, [(1, 0)], {1: "x"})
        assert (
            to_json(d)
            == '{"n": 2, "directed": true, "edges": [[1, 0]], "labels": {"1": "x"}}'
        )

    def test_empty_graph(self):
        g = UndirectedGraph.build(0, [])
        assert to_json(g) == '{"n": 0, "directed": false, "edges": []}'
        assert graph_from_json(to_json(g)) == g

    @pytest.mark.parametrize(
        "text",
        [
            "[]",
            "{}",
            '{"n": 2, "edges": []}',
            '{"n": -1, "directed": false, "edges": []}',
            '{"n": true, "directed": false, "edges": []}',
            '{"n": 2, "directed": "no", "edges": []}',
            '{"n": 2, "directed": false, "edges": [[0]]}',
            '{"n": 2, "directed": false, "edges": [[0, 0]]}',
            '{"n": 2, "directed": false, "edges": [], "labels": {"x": "y"}}',
            "not json at all",
        ],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(GraphError):
            graph_from_json(text)

    def test_directed_json_rejects_cycle(self):
        with pytest.raises(DirectedCycleError):
            graph_from_json('{"n": 2, "directed": true, "edges": [[0, 1], [1, 0]]}')


class TestDot:
    def test_undirected(self):
        g = UndirectedGraph.build(3, [(0, 1), (1, 2)], {1: "mid"})
        assert to_dot(g) == 'graph G {\n  1 [label="mid"];\n  0 -- 1;\n  1 -- 2;\n}\n'

    def test_directed(self):
        d = AcyclicDigraph.build(2, [(1, 0)])
        assert to_dot(d) == "digraph G {\n  1 -> 0;\n}\n"

    def test_orientation_with_unset_edge(self):
        g = UndirectedGraph.build(3, [(0, 1), (1, 2)])
        o = Orientation(g, (EdgeDir.BACKWARD, EdgeDir.UNSET))
        assert to_dot(o) == "digraph G {\n  1 -> 0;\n  1 -> 2 [dir=none];\n}\n"

    def test_empty(self):
        assert to_dot(UndirectedGraph.build(0, [])) == "graph G {\n}\n"


def test_connected_components():
    g = UndirectedGraph.build(6, [(0, 3), (1, 4), (4, 5)])
    assert connected_components(g) == [[0, 3], [1, 4, 5], [2]]


def test_underlying_keeps_labels():
    d = AcyclicDigraph.build(3, [(2, 0)], {2: "root"})
    g = underlying(d)
    assert g.edges == ((0, 2),)
    assert g.labels == {2: "root"}
