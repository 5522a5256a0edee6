import math
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shiftgraphs import invariants
from shiftgraphs.core import GraphError, SizeCapExceeded, UndirectedGraph

from conftest import random_graph


def cycle_graph(k: int) -> UndirectedGraph:
    return UndirectedGraph.build(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> UndirectedGraph:
    return UndirectedGraph.build(k, combinations(range(k), 2))


def petersen() -> UndirectedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return UndirectedGraph.build(10, outer + spokes + inner)


def brute_chromatic(g: UndirectedGraph) -> int:
    if g.n == 0:
        return 0
    for t in range(1, g.n + 1):
        for assign in product(range(t), repeat=g.n):
            if all(assign[u] != assign[v] for u, v in g.edges):
                return t
    raise AssertionError("unreachable")


def brute_degeneracy(g: UndirectedGraph) -> int:
    best = 0
    for mask in range(1, 1 << g.n):
        sub = [v for v in range(g.n) if mask >> v & 1]
        inside = set(sub)
        best = max(
            best, min(sum(1 for w in g.adjacency[v] if w in inside) for v in sub)
        )
    return best


def brute_girth(g: UndirectedGraph) -> int | float:
    best = math.inf
    for size in range(3, g.n + 1):
        for verts in combinations(range(g.n), size):
            rest = verts[1:]
            import itertools

            for perm in itertools.permutations(rest):
                cyc = (verts[0],) + perm
                if all(
                    g.has_edge(cyc[i], cyc[(i + 1) % size]) for i in range(size)
                ):
                    return size
    return best


class TestGirth:
    def test_known_graphs(self):
        assert invariants.girth(cycle_graph(7)) == 7
        assert invariants.girth(complete_graph(4)) == 3
        assert invariants.girth(petersen()) == 5

    def test_forest_is_infinite(self):
        tree = UndirectedGraph.build(4, [(0, 1), (1, 2), (1, 3)])
        assert invariants.girth(tree) == math.inf
        assert invariants.girth(UndirectedGraph.build(3, [])) == math.inf

    def test_against_brute_force(self, rng):
        for _ in range(40):
            g = random_graph(rng, rng.randint(3, 7), 0.4)
            assert invariants.girth(g) == brute_girth(g)


class TestOddGirth:
    def test_known_graphs(self):
        assert invariants.odd_girth(cycle_graph(9)) == 9
        assert invariants.odd_girth(cycle_graph(8)) == math.inf
        assert invariants.odd_girth(petersen()) == 5
        assert invariants.odd_girth(complete_graph(5)) == 3

    def test_c6_with_even_chord_stays_bipartite(self):
        # The chord 0-3 joins opposite bipartition classes of C6.
        g = UndirectedGraph.build(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
        assert invariants.odd_girth(g) == math.inf

    def test_c6_with_odd_chord(self):
        g = UndirectedGraph.build(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 2)])
        assert invariants.odd_girth(g) == 3

    def test_at_least_girth(self, rng):
        for _ in range(40):
            g = random_graph(rng, rng.randint(3, 8), 0.4)
            og = invariants.odd_girth(g)
            if og is not math.inf:
                assert og % 2 == 1
                assert og >= invariants.girth(g)


class TestExtractOddCycle:
    def test_already_a_cycle(self):
        g = cycle_graph(5)
        assert invariants.extract_odd_cycle(g, [0, 1, 2, 3, 4, 0]) == [0, 1, 2, 3, 4]

    def test_backtracking_walk(self):
        g = UndirectedGraph.build(3, [(0, 1), (1, 2), (0, 2)])
        cyc = invariants.extract_odd_cycle(g, [0, 1, 0, 1, 2, 0])
        assert len(cyc) == 3
        assert sorted(cyc) == [0, 1, 2]

    def test_result_is_simple_odd_cycle(self, rng):
        for _ in range(30):
            g = random_graph(rng, 7, 0.5)
            if invariants.odd_girth(g) is math.inf:
                continue
            # Random closed odd walk: wander until we return with odd parity.
            walk = self._random_odd_walk(g, rng)
            if walk is None:
                continue
            cyc = invariants.extract_odd_cycle(g, walk)
            assert len(cyc) % 2 == 1
            assert len(set(cyc)) == len(cyc)
            for i in range(len(cyc)):
                assert g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)])

    @staticmethod
    def _random_odd_walk(g, rng, tries=200):
        for _ in range(tries):
            v0 = rng.randrange(g.n)
            if not g.adjacency[v0]:
                continue
            walk = [v0]
            for _ in range(rng.randint(3, 15)):
                walk.append(rng.choice(g.adjacency[walk[-1]]))
            if walk[-1] == walk[0] and (len(walk) - 1) % 2 == 1:
                return walk
        return None

    def test_rejects_bad_walks(self):
        g = cycle_graph(5)
        with pytest.raises(GraphError):
            invariants.extract_odd_cycle(g, [0, 1, 2])  # not closed
        with pytest.raises(GraphError):
            invariants.extract_odd_cycle(g, [0, 1, 2, 1, 0])  # even
        with pytest.raises(GraphError):
            invariants.extract_odd_cycle(g, [0, 2, 0])  # non-edge


class TestCliqueNumber:
    def test_known_graphs(self):
        assert invariants.clique_number(complete_graph(6)) == 6
        assert invariants.clique_number(cycle_graph(5)) == 2
        assert invariants.clique_number(petersen()) == 2
        assert invariants.clique_number(UndirectedGraph.build(3, [])) == 1
        assert invariants.clique_number(UndirectedGraph.build(0, [])) == 0

    def test_against_brute_force(self, rng):
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 8), 0.5)
            brute = max(
                (
                    size
                    for size in range(1, g.n + 1)
                    for c in combinations(range(g.n), size)
                    if all(g.has_edge(u, v) for u, v in combinations(c, 2))
                ),
                default=0,
            )
            assert invariants.clique_number(g) == brute


class TestDegeneracy:
    def test_known_graphs(self):
        assert invariants.degeneracy(complete_graph(5)).degeneracy == 4
        assert invariants.degeneracy(cycle_graph(6)).degeneracy == 2
        tree = UndirectedGraph.build(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
        assert invariants.degeneracy(tree).degeneracy == 1

    def test_certificate_is_consistent(self, rng):
        for _ in range(30):
            g = random_graph(rng, rng.randint(1, 10), 0.4)
            cert = invariants.degeneracy(g)
            recheck = invariants.back_degree_certificate(g, cert.order)
            assert recheck.back_degrees == cert.back_degrees
            assert recheck.degeneracy == cert.degeneracy

    def test_against_brute_force(self, rng):
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 9), 0.4)
            assert invariants.degeneracy(g).degeneracy == brute_degeneracy(g)


class TestChromaticNumber:
    def test_known_graphs(self):
        assert invariants.chromatic_number(complete_graph(5))[0] == 5
        assert invariants.chromatic_number(cycle_graph(7))[0] == 3
        assert invariants.chromatic_number(cycle_graph(8))[0] == 2
        assert invariants.chromatic_number(petersen())[0] == 3
        assert invariants.chromatic_number(UndirectedGraph.build(4, []))[0] == 1
        assert invariants.chromatic_number(UndirectedGraph.build(0, []))[0] == 0

    def test_witness_is_proper_and_tight(self, rng):
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 8), 0.5)
            chi, col = invariants.chromatic_number(g)
            assert col.palette == chi
            assert col.used <= chi  # propriety enforced by the Coloring type

    def test_against_brute_force(self, rng):
        for _ in range(25):
            g = random_graph(rng, rng.randint(1, 7), 0.5)
            assert invariants.chromatic_number(g)[0] == brute_chromatic(g)

    def test_cap(self):
        g = UndirectedGraph.build(5, [])
        with pytest.raises(SizeCapExceeded):
            invariants.chromatic_number(g, cap=4)

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_property_matches_brute(self, data):
        n = data.draw(st.integers(1, 6))
        pairs = list(combinations(range(n), 2))
        mask = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        g = UndirectedGraph.build(n, [p for p, keep in zip(pairs, mask) if keep])
        assert invariants.chromatic_number(g)[0] == brute_chromatic(g)
